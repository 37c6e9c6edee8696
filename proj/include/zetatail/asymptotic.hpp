#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace zetatail {

/// Truncated asymptotic expansion f(n) ~ sum_m c_m n^(e - m) as n -> infinity.
///
/// Built from power functions and Hurwitz tails, closed under products and the
/// tail-sum operator G(n) = sum_{t > n} f(t). The last `kGuardTerms`
/// coefficients are not used for the value; they feed the truncation estimate.
class AsymptoticSeries {
public:
    static constexpr std::size_t kGuardTerms = 4;

    AsymptoticSeries(double leading_exponent, std::vector<double> coefficients);

    /// n^exponent.
    static AsymptoticSeries power(double exponent, std::size_t terms);

    /// sum_{i > n} i^(-s), s > 1 (the Hurwitz zeta function at n + 1).
    static AsymptoticSeries hurwitz_tail(double s, std::size_t terms);

    double leading_exponent() const { return exponent_; }
    std::span<const double> coefficients() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }

    /// Multiplies by n^delta.
    AsymptoticSeries shifted(double delta) const;

    /// G(n) = sum_{t > n} f(t); requires leading exponent < -1.
    AsymptoticSeries tail_sum() const;

    friend AsymptoticSeries operator*(const AsymptoticSeries& a, const AsymptoticSeries& b);

    struct Evaluation {
        double value;
        double truncation_bound;
    };

    /// Value from all but the guard terms; bound = 2 * sum of |guard terms|.
    Evaluation evaluate(double n) const;

private:
    double exponent_;
    std::vector<double> coeffs_;
};

/// Bernoulli number B_{2j}, 1 <= j <= 15.
double bernoulli_even(std::size_t j);

/// Coefficient of n^(1 - s - m) in the expansion of sum_{i > n} i^(-s).
double hurwitz_tail_weight(double s, std::size_t m);

}  // namespace zetatail
