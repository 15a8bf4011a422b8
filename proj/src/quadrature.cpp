#include "entspec/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "entspec/errors.hpp"

namespace entspec::oracle {

namespace {

// Kronrod 15-point abscissae (positive half, descending) and weights;
// the odd-indexed abscissae are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Piece& other) const { return error < other.error; }
};

Piece gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * pair;
        if (j % 2 == 1) gauss += kWg[j / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    if (!std::isfinite(kronrod) || !std::isfinite(gauss)) {
        std::ostringstream msg;
        msg << "integrate: non-finite integrand on [" << a << ", " << b << "]";
        throw ConvergenceError(msg.str());
    }
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("QuadratureSpec: tolerances must be positive");
    if (max_subdivisions < 1) throw DomainError("QuadratureSpec: max_subdivisions must be >= 1");
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, const QuadratureSpec& spec) {
    const std::array<double, 2> limits = {a, b};
    return integrate(f, limits, spec);
}

QuadratureResult integrate(const std::function<double(double)>& f, std::span<const double> breakpoints,
                           const QuadratureSpec& spec) {
    spec.validate();
    if (breakpoints.size() < 2) throw DomainError("integrate: need at least two breakpoints");

    std::priority_queue<Piece> pieces;
    double total = 0.0;
    double total_error = 0.0;
    for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
        if (!(breakpoints[k + 1] > breakpoints[k])) continue;
        const Piece p = gauss_kronrod(f, breakpoints[k], breakpoints[k + 1]);
        total += p.value;
        total_error += p.error;
        pieces.push(p);
    }

    int subdivisions = 0;
    while (total_error > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        if (subdivisions >= spec.max_subdivisions) {
            std::ostringstream msg;
            msg << "integrate: no convergence after " << subdivisions << " subdivisions (value " << total
                << ", error estimate " << total_error << ")";
            throw ConvergenceError(msg.str());
        }
        const Piece worst = pieces.top();
        pieces.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Piece left = gauss_kronrod(f, worst.a, mid);
        const Piece right = gauss_kronrod(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        pieces.push(left);
        pieces.push(right);
        ++subdivisions;
    }

    // Re-sum from scratch so the running-update drift does not leak into the result.
    double value = 0.0;
    double error = 0.0;
    std::vector<Piece> all;
    all.reserve(pieces.size());
    while (!pieces.empty()) {
        all.push_back(pieces.top());
        pieces.pop();
    }
    std::sort(all.begin(), all.end(), [](const Piece& x, const Piece& y) { return x.a < y.a; });
    for (const Piece& p : all) {
        value += p.value;
        error += p.error;
    }
    return {value, error, subdivisions};
}

}  // namespace entspec::oracle
