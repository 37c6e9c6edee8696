#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zetatail/errors.hpp"

namespace zetatail {

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Canonical text form: "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses the canonical text form; throws DomainError on malformed input.
Rational parse_rational(const std::string& text);

/// Largest k accepted by the enumeration routines.
inline constexpr int kMaxArity = 8;

/// Exponents closer than this to a convergence boundary are rejected.
inline constexpr double kBoundaryGuard = 1e-6;

/// Ordered list of real exponents (i_1, ..., i_k), k >= 1.
class ExponentList {
public:
    ExponentList() = default;
    explicit ExponentList(std::vector<double> exponents);
    ExponentList(std::initializer_list<double> exponents);

    std::size_t size() const { return exponents_.size(); }
    double operator[](std::size_t i) const { return exponents_[i]; }
    std::span<const double> values() const { return exponents_; }
    double sum() const;

    /// Throws DomainError unless every entry exceeds 1 (plus the near-boundary guard).
    void require_tail_exponents() const;

private:
    std::vector<double> exponents_;
};

/// Ordered positive parts (j_1, ..., j_p) of total k.
class Composition {
public:
    explicit Composition(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    int total() const { return total_; }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int total_ = 0;
};

/// Argument list of a (possibly real-valued) multiple zeta value.
struct MzvIndex {
    std::vector<double> args;

    double weight() const;
    std::size_t depth() const { return args.size(); }
};

/// Absolute-convergence test: i_1 + ... + i_j > j for every prefix.
bool converges(std::span<const double> args);
inline bool converges(const MzvIndex& index) { return converges(index.args); }

/// Distance from the convergence boundary: min over prefixes of (i_1 + ... + i_j) - j.
double convergence_margin(std::span<const double> args);

/// All 2^(k-1) compositions of k in lexicographic order of parts.
std::vector<Composition> compositions(int k);

/// Ordered Bell (Fubini) number: the count of weak orderings on k objects.
std::uint64_t weak_ordering_count(int k);

std::uint64_t factorial(int n);

/// n! / (j_1! ... j_p!) for the composition's parts, n = total.
std::uint64_t multinomial(const Composition& c);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Rational binomial(long n, long k);

/// All permutations of {0, ..., k-1} in lexicographic order.
std::vector<std::vector<int>> permutations(int k);

}  // namespace zetatail
