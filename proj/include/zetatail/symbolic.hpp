#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zetatail/core.hpp"
#include "zetatail/numerics.hpp"

namespace zetatail {

/// Sorted multiset of single-zeta arguments, each >= 2: {2, 3, 3} is zeta(2) zeta(3)^2.
using Monomial = std::vector<int>;

/// Exact-rational polynomial in zeta(2), zeta(3), ...
///
/// Monomials are kept sorted so zeta(m)zeta(n) and zeta(n)zeta(m) share a key,
/// and zero coefficients are never stored.
class ZetaPolynomial {
public:
    ZetaPolynomial() = default;

    static ZetaPolynomial zeta(int n);
    static ZetaPolynomial constant(const Rational& c);

    void add_term(Monomial monomial, const Rational& coeff);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Common weight of all monomials, or nullopt when mixed (or empty).
    std::optional<int> weight() const;
    bool is_homogeneous() const { return empty() || weight().has_value(); }

    /// Sum of coeff * prod zeta(a); the error bound accounts for every factor.
    EvalReport evaluate(double target_eps = kDefaultEps) const;

    /// Human-readable form, e.g. "3*zeta(2)*zeta(3) - 11/2*zeta(5)".
    std::string to_string() const;

    ZetaPolynomial& operator+=(const ZetaPolynomial& other);
    ZetaPolynomial& operator-=(const ZetaPolynomial& other);
    ZetaPolynomial& operator*=(const Rational& c);

    friend ZetaPolynomial operator+(ZetaPolynomial a, const ZetaPolynomial& b) { return a += b; }
    friend ZetaPolynomial operator-(ZetaPolynomial a, const ZetaPolynomial& b) { return a -= b; }
    friend ZetaPolynomial operator*(const Rational& c, ZetaPolynomial a) { return a *= c; }
    friend ZetaPolynomial operator*(const ZetaPolynomial& a, const ZetaPolynomial& b);
    friend bool operator==(const ZetaPolynomial& a, const ZetaPolynomial& b) { return a.terms_ == b.terms_; }

private:
    std::map<Monomial, Rational> terms_;
};

/// Admissible integer MZV index: first entry >= 2, all entries >= 1.
class IntegerIndex {
public:
    explicit IntegerIndex(std::vector<int> args);
    IntegerIndex(std::initializer_list<int> args) : IntegerIndex(std::vector<int>(args)) {}

    const std::vector<int>& args() const { return args_; }
    std::size_t depth() const { return args_.size(); }
    int weight() const;
    MzvIndex as_mzv_index() const;
    std::string to_string() const;

    friend bool operator==(const IntegerIndex&, const IntegerIndex&) = default;
    friend auto operator<=>(const IntegerIndex& a, const IntegerIndex& b) { return a.args_ <=> b.args_; }

private:
    std::vector<int> args_;
};

/// coeff * zeta(index).
struct MzvTerm {
    Rational coeff;
    IntegerIndex index;
};

/// An identity sum_i coeff_i zeta(index_i) = zeta_side, returned for numeric checking.
struct MzvRelation {
    std::vector<MzvTerm> mzv_side;
    ZetaPolynomial zeta_side;

    /// Numeric value of the MZV side with a combined bound.
    EvalReport evaluate_mzv_side(double target_eps = kDefaultEps) const;
};

/// zeta(n, 1) = (n/2) zeta(n+1) - (1/2) sum_{j=2}^{n-1} zeta(j) zeta(n+1-j), n >= 2.
ZetaPolynomial reduce_n1(int n);

/// Euler's reduction of zeta(m, n) for odd m + n, m >= 2, n >= 2.
ZetaPolynomial reduce_double_odd(int m, int n);

/// Every admissible index of weight n and depth k (descending lexicographic order)
/// against zeta(n); requires n > k >= 2 and n <= 10.
MzvRelation sum_theorem_identity(int n, int k);

/// zeta(p+q) = sum_{i=p+1}^{n-1} C(i-1, p-1) zeta(i, n-i) + sum_{i=q+1}^{n-1} C(i-1, q-1) zeta(i, n-i).
/// The two sums are listed term by term, unmerged.
MzvRelation binom_relation(int p, int q);

/// zeta(n) zeta(m) = zeta(n, m) + zeta(m, n) + zeta(n + m); equal indices merged.
MzvRelation product_relation(int n, int m);

/// The duality involution tau = Sigma^{-1} R_n C_n Sigma on admissible indices.
IntegerIndex duality(const IntegerIndex& index);

/// All admissible indices of the given weight, any depth, in lexicographic order.
std::vector<IntegerIndex> admissible_indices(int weight);

}  // namespace zetatail
