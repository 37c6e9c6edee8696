#include "zetatail/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace zetatail {

std::string to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

Rational parse_rational(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
        throw DomainError("malformed rational: '" + text + "'");
    }
    r.canonicalize();
    return r;
}

ExponentList::ExponentList(std::vector<double> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.empty()) {
        throw DomainError("exponent list must be nonempty");
    }
    for (double e : exponents_) {
        if (!std::isfinite(e)) {
            throw DomainError("exponent list entries must be finite");
        }
    }
}

ExponentList::ExponentList(std::initializer_list<double> exponents)
    : ExponentList(std::vector<double>(exponents)) {}

double ExponentList::sum() const {
    return std::accumulate(exponents_.begin(), exponents_.end(), 0.0);
}

void ExponentList::require_tail_exponents() const {
    for (double e : exponents_) {
        if (!(e > 1.0 + kBoundaryGuard)) {
            std::ostringstream os;
            os << "tail exponent " << e << " must exceed 1";
            throw DomainError(os.str());
        }
    }
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) {
        throw DomainError("composition must have at least one part");
    }
    for (int p : parts_) {
        if (p < 1) {
            throw DomainError("composition parts must be positive");
        }
        total_ += p;
    }
}

double MzvIndex::weight() const {
    return std::accumulate(args.begin(), args.end(), 0.0);
}

double convergence_margin(std::span<const double> args) {
    double partial = 0.0;
    double margin = INFINITY;
    for (std::size_t j = 0; j < args.size(); ++j) {
        partial += args[j];
        margin = std::min(margin, partial - static_cast<double>(j + 1));
    }
    return margin;
}

bool converges(std::span<const double> args) {
    if (args.empty()) {
        return false;
    }
    return convergence_margin(args) > 0.0;
}

namespace {

void check_arity(int k) {
    if (k < 1 || k > kMaxArity) {
        throw BoundError("k = " + std::to_string(k) + " outside 1.." + std::to_string(kMaxArity));
    }
}

void append_compositions(int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int first = 1; first <= remaining; ++first) {
        prefix.push_back(first);
        append_compositions(remaining - first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Composition> compositions(int k) {
    check_arity(k);
    std::vector<Composition> out;
    out.reserve(std::size_t{1} << (k - 1));
    std::vector<int> prefix;
    append_compositions(k, prefix, out);
    return out;
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) {
        throw BoundError("factorial argument outside 0..20");
    }
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= static_cast<std::uint64_t>(i);
    }
    return f;
}

std::uint64_t multinomial(const Composition& c) {
    std::uint64_t denom = 1;
    for (int j : c.parts()) {
        denom *= factorial(j);
    }
    return factorial(c.total()) / denom;
}

std::uint64_t weak_ordering_count(int k) {
    check_arity(k);
    std::uint64_t count = 0;
    for (const auto& c : compositions(k)) {
        count += multinomial(c);
    }
    return count;
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) {
        return Rational(0);
    }
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

std::vector<std::vector<int>> permutations(int k) {
    check_arity(k);
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    out.reserve(factorial(k));
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace zetatail
