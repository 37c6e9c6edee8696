#pragma once

#include <functional>

namespace zetatail {

struct QuadratureResult {
    double value = 0.0;
    /// Sum over panels of |K15 - G7| plus a rounding allowance.
    double error = 0.0;
    int evaluations = 0;
    bool converged = false;
};

/// Globally adaptive Gauss-Kronrod (7/15) on [a, b]: the panel with the largest
/// error estimate is bisected until the summed estimate drops below
/// max(abs_tol, rel_tol * |value|) or max_panels is reached (converged = false
/// in that case).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, double rel_tol = 0.0, int max_panels = 4000);

}  // namespace zetatail
