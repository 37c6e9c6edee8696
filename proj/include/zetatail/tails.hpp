#pragma once

#include <utility>
#include <vector>

#include "zetatail/core.hpp"
#include "zetatail/numerics.hpp"
#include "zetatail/symbolic.hpp"

namespace zetatail {

/// One grouped MZV term: zeta(sum of block 1, ..., sum of last block - 1).
///
/// Blocks hold 1-based positions into the exponent list, each block sorted.
struct BlockTerm {
    std::vector<std::vector<int>> blocks;
    bool last_offset = true;
    Rational coeff;

    std::vector<int> block_sizes() const;
    /// MZV arguments for a concrete exponent list.
    std::vector<double> arguments(const ExponentList& exponents) const;

    friend bool operator==(const BlockTerm&, const BlockTerm&) = default;
};

/// sum_{n>=1} prod_j tail(i_j, n) = sum of zeta_terms + product_coeff * prod_j zeta(i_j).
struct TailFormula {
    int k = 0;
    std::vector<BlockTerm> zeta_terms;
    Rational product_coeff{-1};

    friend bool operator==(const TailFormula&, const TailFormula&) = default;
};

/// Grouped-tail expansion for an arbitrary exponent list; terms with identical
/// block lists are merged, ordered by composition then block content.
TailFormula tail_product_formula(const ExponentList& exponents);

/// Symbolic form for k positions, no hypothesis check on values.
TailFormula tail_product_formula_symbolic(int k);

/// The all-equal case (r, ..., r): terms merged by value, multinomial coefficients.
TailFormula repeated_tail_formula(double r, int k);

/// (arguments, coefficient) pairs after merging terms whose arguments coincide.
std::vector<std::pair<std::vector<double>, Rational>> instantiate(const TailFormula& formula,
                                                                  const ExponentList& exponents);

EvalReport evaluate_formula(const TailFormula& formula, const ExponentList& exponents,
                            double target_eps = kDefaultEps);

struct PropositionSides {
    EvalReport lhs;
    EvalReport rhs;
};

/// sum_n tail(k, n) tail(k+1, n) against its single-zeta and integral form, k > 1.
PropositionSides proposition_kk1(double k, double target_eps = kDefaultEps);

/// sum_n tail(k, n)^2 against its single-zeta and integral form, k > 3/2.
PropositionSides proposition_square(double k, double target_eps = kDefaultEps);

/// sum_n tail(p, n)^2 as a polynomial in single zetas, p >= 3.
ZetaPolynomial integer_square_closed_form(int p);

}  // namespace zetatail
