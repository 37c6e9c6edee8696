#include "zetatail/asymptotic.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "zetatail/errors.hpp"

namespace zetatail {

namespace {

// B_{2j} for j = 1..15.
constexpr std::array<double, 15> kBernoulliEven = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

}  // namespace

double bernoulli_even(std::size_t j) {
    if (j < 1 || j > kBernoulliEven.size()) {
        throw BoundError("Bernoulli index outside table");
    }
    return kBernoulliEven[j - 1];
}

double hurwitz_tail_weight(double s, std::size_t m) {
    // sum_{i>n} i^-s = n^{1-s}/(s-1) - n^{-s}/2 + sum_j B_2j/(2j)! (s)_{2j-1} n^{1-s-2j}
    if (m == 0) {
        return 1.0 / (s - 1.0);
    }
    if (m == 1) {
        return -0.5;
    }
    if (m % 2 == 1) {
        return 0.0;
    }
    const std::size_t j = m / 2;
    double w = bernoulli_even(j);
    for (std::size_t i = 1; i <= m; ++i) {
        w /= static_cast<double>(i);
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
        w *= s + static_cast<double>(i);
    }
    return w;
}

AsymptoticSeries::AsymptoticSeries(double leading_exponent, std::vector<double> coefficients)
    : exponent_(leading_exponent), coeffs_(std::move(coefficients)) {
    if (coeffs_.size() <= kGuardTerms) {
        throw BoundError("asymptotic series needs more terms than its guard band");
    }
}

AsymptoticSeries AsymptoticSeries::power(double exponent, std::size_t terms) {
    std::vector<double> c(terms, 0.0);
    if (!c.empty()) {
        c[0] = 1.0;
    }
    return AsymptoticSeries(exponent, std::move(c));
}

AsymptoticSeries AsymptoticSeries::hurwitz_tail(double s, std::size_t terms) {
    return power(-s, terms).tail_sum();
}

AsymptoticSeries AsymptoticSeries::shifted(double delta) const {
    return AsymptoticSeries(exponent_ + delta, coeffs_);
}

AsymptoticSeries AsymptoticSeries::tail_sum() const {
    if (!(exponent_ < -1.0)) {
        throw DomainError("tail sum of a series decaying no faster than 1/n diverges");
    }
    std::vector<double> out(coeffs_.size(), 0.0);
    for (std::size_t l = 0; l < coeffs_.size(); ++l) {
        if (coeffs_[l] == 0.0) {
            continue;
        }
        const double s = static_cast<double>(l) - exponent_;
        for (std::size_t m = 0; l + m < out.size(); ++m) {
            out[l + m] += coeffs_[l] * hurwitz_tail_weight(s, m);
        }
    }
    return AsymptoticSeries(exponent_ + 1.0, std::move(out));
}

AsymptoticSeries operator*(const AsymptoticSeries& a, const AsymptoticSeries& b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; i + j < n; ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return AsymptoticSeries(a.exponent_ + b.exponent_, std::move(c));
}

AsymptoticSeries::Evaluation AsymptoticSeries::evaluate(double n) const {
    const std::size_t used = coeffs_.size() - kGuardTerms;
    const double inv = 1.0 / n;
    double value = 0.0;
    for (std::size_t m = used; m-- > 0;) {
        value = value * inv + coeffs_[m];
    }
    double guard = 0.0;
    double power = std::pow(inv, static_cast<double>(used));
    for (std::size_t m = used; m < coeffs_.size(); ++m) {
        guard += std::fabs(coeffs_[m]) * power;
        power *= inv;
    }
    const double scale = std::pow(n, exponent_);
    return {value * scale, 2.0 * guard * scale};
}

}  // namespace zetatail
