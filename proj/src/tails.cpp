#include "zetatail/tails.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <unordered_map>

#include "zetatail/errors.hpp"

namespace zetatail {

namespace {

// Blocks packed as one bitmask byte each; k <= 8 keeps this within a uint64.
using PackedBlocks = std::uint64_t;

std::vector<std::vector<int>> unpack(PackedBlocks key, std::size_t count) {
    std::vector<std::vector<int>> blocks(count);
    for (std::size_t b = 0; b < count; ++b) {
        const auto mask = static_cast<unsigned>((key >> (8 * b)) & 0xFFu);
        for (int pos = 0; pos < 8; ++pos) {
            if (mask & (1u << pos)) {
                blocks[b].push_back(pos + 1);
            }
        }
    }
    return blocks;
}

void sort_terms(std::vector<BlockTerm>& terms) {
    std::sort(terms.begin(), terms.end(), [](const BlockTerm& a, const BlockTerm& b) {
        const auto sa = a.block_sizes();
        const auto sb = b.block_sizes();
        if (sa != sb) {
            return sa < sb;
        }
        return a.blocks < b.blocks;
    });
}

}  // namespace

std::vector<int> BlockTerm::block_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(blocks.size());
    for (const auto& b : blocks) {
        sizes.push_back(static_cast<int>(b.size()));
    }
    return sizes;
}

std::vector<double> BlockTerm::arguments(const ExponentList& exponents) const {
    std::vector<double> args;
    args.reserve(blocks.size());
    for (const auto& block : blocks) {
        double s = 0.0;
        for (int pos : block) {
            if (pos < 1 || static_cast<std::size_t>(pos) > exponents.size()) {
                throw DomainError("block position outside exponent list");
            }
            s += exponents[static_cast<std::size_t>(pos - 1)];
        }
        args.push_back(s);
    }
    if (last_offset && !args.empty()) {
        args.back() -= 1.0;
    }
    return args;
}

TailFormula tail_product_formula_symbolic(int k) {
    if (k < 1 || k > kMaxArity) {
        throw BoundError("tail product formula supports 1 <= k <= 8");
    }
    const auto comps = compositions(k);
    const auto perms = permutations(k);

    TailFormula formula;
    formula.k = k;
    for (const auto& comp : comps) {
        std::uint64_t weight = 1;
        for (int part : comp.parts()) {
            weight *= factorial(part);
        }
        std::unordered_map<PackedBlocks, std::uint64_t> counts;
        for (const auto& sigma : perms) {
            PackedBlocks key = 0;
            std::size_t cursor = 0;
            for (std::size_t b = 0; b < comp.size(); ++b) {
                unsigned mask = 0;
                for (int t = 0; t < comp[b]; ++t) {
                    mask |= 1u << sigma[cursor++];
                }
                key |= static_cast<PackedBlocks>(mask) << (8 * b);
            }
            ++counts[key];
        }
        for (const auto& [key, count] : counts) {
            BlockTerm term;
            term.blocks = unpack(key, comp.size());
            term.last_offset = true;
            term.coeff = Rational(static_cast<unsigned long>(count), static_cast<unsigned long>(weight));
            term.coeff.canonicalize();
            formula.zeta_terms.push_back(std::move(term));
        }
    }
    sort_terms(formula.zeta_terms);
    return formula;
}

TailFormula tail_product_formula(const ExponentList& exponents) {
    const auto k = static_cast<int>(exponents.size());
    exponents.require_tail_exponents();
    if (!(exponents.sum() > k + 1 + kBoundaryGuard)) {
        throw DomainError("tail product formula needs sum of exponents > k + 1");
    }
    return tail_product_formula_symbolic(k);
}

TailFormula repeated_tail_formula(double r, int k) {
    if (k < 2) {
        throw DomainError("repeated tail formula needs k >= 2");
    }
    if (k > kMaxArity) {
        throw BoundError("repeated tail formula supports k <= 8");
    }
    if (!std::isfinite(r) || !(r > 1.0 + 1.0 / k + kBoundaryGuard)) {
        throw DomainError("repeated tail formula needs r > 1 + 1/k");
    }
    TailFormula formula;
    formula.k = k;
    for (const auto& comp : compositions(k)) {
        BlockTerm term;
        int next = 1;
        for (int part : comp.parts()) {
            std::vector<int> block;
            for (int t = 0; t < part; ++t) {
                block.push_back(next++);
            }
            term.blocks.push_back(std::move(block));
        }
        term.last_offset = true;
        term.coeff = Rational(static_cast<unsigned long>(multinomial(comp)));
        formula.zeta_terms.push_back(std::move(term));
    }
    sort_terms(formula.zeta_terms);
    return formula;
}

std::vector<std::pair<std::vector<double>, Rational>> instantiate(const TailFormula& formula,
                                                                  const ExponentList& exponents) {
    if (static_cast<std::size_t>(formula.k) != exponents.size()) {
        throw DomainError("formula arity does not match exponent list");
    }
    std::map<std::vector<double>, Rational> merged;
    for (const auto& term : formula.zeta_terms) {
        merged[term.arguments(exponents)] += term.coeff;
    }
    std::vector<std::pair<std::vector<double>, Rational>> out;
    for (auto& [args, coeff] : merged) {
        if (coeff != 0) {
            out.emplace_back(args, coeff);
        }
    }
    return out;
}

EvalReport evaluate_formula(const TailFormula& formula, const ExponentList& exponents, double target_eps) {
    const auto terms = instantiate(formula, exponents);
    for (const auto& [args, coeff] : terms) {
        if (!converges(args)) {
            throw DomainError("formula term does not converge for these exponents");
        }
    }
    const double eps_each = target_eps / static_cast<double>(terms.size() + 1);

    EvalReport total{0.0, 0.0, 0};
    for (const auto& [args, coeff] : terms) {
        const double c = coeff.get_d();
        total = total + c * mzv(MzvIndex{args}, eps_each / std::max(1.0, std::fabs(c)));
    }
    const double product_eps = eps_each / (2.0 * static_cast<double>(exponents.size()));
    EvalReport product{1.0, 0.0, 0};
    for (double s : exponents.values()) {
        product = product * zeta(s, product_eps);
    }
    return total + formula.product_coeff.get_d() * product;
}

PropositionSides proposition_kk1(double k, double target_eps) {
    if (!std::isfinite(k) || !(k > 1.0 + kBoundaryGuard)) {
        throw DomainError("proposition needs k > 1");
    }
    PropositionSides sides;
    sides.lhs = brute_tail_product_sum(ExponentList{k, k + 1.0}, target_eps);

    const double part = target_eps / 8.0;
    const EvalReport zk = zeta(k, part);
    const EvalReport zk1 = zeta(k + 1.0, part);
    const EvalReport z2k = zeta(2.0 * k, part);
    sides.rhs = 0.5 * (zk * zk) + 0.5 * z2k - zk * zk1 + mzv_integral(k + 1.0, k - 1.0, target_eps / 2.0);
    return sides;
}

PropositionSides proposition_square(double k, double target_eps) {
    if (!std::isfinite(k) || !(k > 1.5 + kBoundaryGuard)) {
        throw DomainError("proposition needs k > 3/2");
    }
    PropositionSides sides;
    sides.lhs = brute_tail_product_sum(ExponentList{k, k}, target_eps);

    const double part = target_eps / 8.0;
    const EvalReport zk = zeta(k, part);
    const EvalReport z2k1 = zeta(2.0 * k - 1.0, part);
    sides.rhs = z2k1 - zk * zk + 2.0 * mzv_integral(k, k - 1.0, target_eps / 4.0);
    return sides;
}

ZetaPolynomial integer_square_closed_form(int p) {
    if (p < 3) {
        throw DomainError("closed form needs integer p >= 3");
    }
    ZetaPolynomial out = Rational(2) * reduce_double_odd(p, p - 1);
    out += ZetaPolynomial::zeta(2 * p - 1);
    out.add_term({p, p}, Rational(-1));
    return out;
}

}  // namespace zetatail
