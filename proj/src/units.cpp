#include "entspec/units.hpp"

#include <string>

#include "entspec/errors.hpp"

namespace entspec::units {

double ev_to_nm(double energy_ev) {
    if (!(energy_ev > 0.0)) {
        throw DomainError("ev_to_nm: energy must be positive, got " + std::to_string(energy_ev));
    }
    return PhysicalConstants::hc / energy_ev;
}

double nm_to_ev(double wavelength_nm) {
    if (!(wavelength_nm > 0.0)) {
        throw DomainError("nm_to_ev: wavelength must be positive, got " + std::to_string(wavelength_nm));
    }
    return PhysicalConstants::hc / wavelength_nm;
}

}  // namespace entspec::units
