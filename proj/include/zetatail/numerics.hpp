#pragma once

#include <cstdint>
#include <vector>

#include "zetatail/core.hpp"

namespace zetatail {

/// A floating-point value together with an absolute error bound.
struct EvalReport {
    double value = 0.0;
    double abs_error_bound = 0.0;
    std::int64_t terms_used = 1;
};

/// Default accuracy targets: depth <= 2 and depth 3-4 evaluations.
inline constexpr double kDefaultEps = 1e-9;
inline constexpr double kDefaultDeepEps = 1e-7;

/// Riemann zeta for real s > 1: direct sum plus Euler-Maclaurin correction
/// through the B4 term; the cutoff is chosen so the B6 term (which bounds the
/// remainder for this completely monotone summand) is below target.
EvalReport zeta(double s, double target_eps = kDefaultEps);

/// sum_{i > n} i^-p, summed from the tail side (never as zeta(p) minus a partial sum).
EvalReport tail(double p, std::int64_t n, double target_eps = kDefaultEps);

/// Li_q(x) = sum_{j >= 1} x^j / j^q for 0 < x < 1 and any real q.
EvalReport polylog(double q, double x, double target_eps = kDefaultEps);

/// Evaluates Li_q(e^-t) for t > 0 with near-machine relative accuracy.
///
/// For t >= 0.25 the defining series is summed with a geometric remainder bound.
/// Closer to x = 1 it switches to Euler-Maclaurin summation of k^-q e^{-tk}, whose
/// integral part t^{q-1} Gamma(1-q, Kt) is computed by quadrature in a log
/// variable, so no special-casing of integer q is needed.
class PolylogAtExp {
public:
    explicit PolylogAtExp(double q);

    EvalReport operator()(double t) const;
    double order() const { return q_; }

private:
    EvalReport direct_series(double t) const;
    EvalReport euler_maclaurin(double t) const;

    double q_;
    int direct_count_;
    std::vector<double> inverse_powers_;
};

/// Multiple zeta value with real arguments, depth <= 4.
EvalReport mzv(const MzvIndex& index, double target_eps = kDefaultEps);

/// Same evaluation without the depth-4 limit, up to depth 8.
EvalReport mzv_extended(const MzvIndex& index, double target_eps = kDefaultEps);

/// zeta(r, q) via (1 / Gamma(r)) * integral_0^inf t^(r-1) Li_q(e^-t) / (e^t - 1) dt,
/// valid for r > 1 and q > 2 - r.
EvalReport mzv_integral(double r, double q, double target_eps = kDefaultEps);

/// sum_{n >= 1} prod_j tail(i_j, n), summed directly: requires every i_j > 1 and
/// sum(i_j) > k + 1.
EvalReport brute_tail_product_sum(const ExponentList& exponents, double target_eps = kDefaultEps);

// Arithmetic on reports: values combine exactly, bounds combine to first order
// plus a product term, with one rounding unit added per operation.
EvalReport operator+(const EvalReport& a, const EvalReport& b);
EvalReport operator-(const EvalReport& a, const EvalReport& b);
EvalReport operator*(const EvalReport& a, const EvalReport& b);
EvalReport operator*(double c, const EvalReport& a);

}  // namespace zetatail
