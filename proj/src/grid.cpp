#include "entspec/grid.hpp"

#include <algorithm>
#include <iterator>

namespace entspec {

std::pair<std::size_t, std::size_t> Grid::argmax() const {
    const auto it = std::max_element(values.begin(), values.end());
    const auto flat = static_cast<std::size_t>(std::distance(values.begin(), it));
    return {flat / cols(), flat % cols()};
}

}  // namespace entspec
