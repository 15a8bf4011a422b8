#pragma once

#include <functional>
#include <span>

namespace entspec::oracle {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;

    void validate() const;
};

struct QuadratureResult {
    double value;
    double error_estimate;
    int subdivisions;
};

// Globally adaptive Gauss-Kronrod (7/15) on [a, b], bisecting the interval
// with the largest error estimate until
//   error <= max(abs_tol, rel_tol * |value|).
// Throws ConvergenceError when max_subdivisions is exhausted first.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

// Same, seeded with a list of breakpoints (sorted, first/last are the limits).
// Breakpoints let the integrator see narrow features it would otherwise step over.
QuadratureResult integrate(const std::function<double(double)>& f, std::span<const double> breakpoints,
                           const QuadratureSpec& spec = {});

}  // namespace entspec::oracle
