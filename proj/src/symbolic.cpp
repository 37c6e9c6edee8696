#include "zetatail/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace zetatail {

// ---------------------------------------------------------------------------
// ZetaPolynomial

ZetaPolynomial ZetaPolynomial::zeta(int n) {
    ZetaPolynomial p;
    p.add_term({n}, Rational(1));
    return p;
}

ZetaPolynomial ZetaPolynomial::constant(const Rational& c) {
    ZetaPolynomial p;
    p.add_term({}, c);
    return p;
}

void ZetaPolynomial::add_term(Monomial monomial, const Rational& coeff) {
    for (int a : monomial) {
        if (a < 2) {
            throw DomainError("zeta polynomial arguments must be >= 2");
        }
    }
    std::sort(monomial.begin(), monomial.end());
    auto [it, inserted] = terms_.try_emplace(std::move(monomial), coeff);
    if (!inserted) {
        it->second += coeff;
    }
    it->second.canonicalize();
    if (it->second == 0) {
        terms_.erase(it);
    }
}

std::optional<int> ZetaPolynomial::weight() const {
    std::optional<int> w;
    for (const auto& [monomial, coeff] : terms_) {
        int mw = 0;
        for (int a : monomial) {
            mw += a;
        }
        if (w && *w != mw) {
            return std::nullopt;
        }
        w = mw;
    }
    return w;
}

ZetaPolynomial& ZetaPolynomial::operator+=(const ZetaPolynomial& other) {
    for (const auto& [monomial, coeff] : other.terms_) {
        add_term(monomial, coeff);
    }
    return *this;
}

ZetaPolynomial& ZetaPolynomial::operator-=(const ZetaPolynomial& other) {
    for (const auto& [monomial, coeff] : other.terms_) {
        add_term(monomial, -coeff);
    }
    return *this;
}

ZetaPolynomial& ZetaPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [monomial, coeff] : terms_) {
        coeff *= c;
        coeff.canonicalize();
    }
    return *this;
}

ZetaPolynomial operator*(const ZetaPolynomial& a, const ZetaPolynomial& b) {
    ZetaPolynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.add_term(std::move(m), ca * cb);
        }
    }
    return out;
}

EvalReport ZetaPolynomial::evaluate(double target_eps) const {
    std::size_t factors = 1;
    for (const auto& [monomial, coeff] : terms_) {
        factors += monomial.size();
    }
    const double eps_each = target_eps / (4.0 * static_cast<double>(factors));
    std::map<int, EvalReport> cache;
    EvalReport total{0.0, 0.0, 0};
    for (const auto& [monomial, coeff] : terms_) {
        EvalReport term{1.0, 0.0, 0};
        for (int a : monomial) {
            auto it = cache.find(a);
            if (it == cache.end()) {
                it = cache.emplace(a, zetatail::zeta(static_cast<double>(a), eps_each)).first;
            }
            term = term * it->second;
        }
        const double c = coeff.get_d();
        EvalReport scaled = c * term;
        scaled.abs_error_bound += std::fabs(c) * std::numeric_limits<double>::epsilon() * std::fabs(term.value);
        total = total + scaled;
    }
    return total;
}

std::string ZetaPolynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [monomial, coeff] : terms_) {
        const bool negative = coeff < 0;
        const Rational magnitude = abs(coeff);
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;

        const bool unit = magnitude == 1;
        if (!unit || monomial.empty()) {
            os << zetatail::to_string(magnitude);
        }
        bool need_star = !unit || monomial.empty();
        for (std::size_t i = 0; i < monomial.size();) {
            std::size_t j = i;
            while (j < monomial.size() && monomial[j] == monomial[i]) {
                ++j;
            }
            os << (need_star ? "*" : "") << "zeta(" << monomial[i] << ")";
            if (j - i > 1) {
                os << "^" << (j - i);
            }
            need_star = true;
            i = j;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// IntegerIndex

IntegerIndex::IntegerIndex(std::vector<int> args) : args_(std::move(args)) {
    if (args_.empty()) {
        throw DomainError("index must be nonempty");
    }
    if (args_.front() < 2) {
        throw DomainError("index is not admissible: first entry must be >= 2");
    }
    for (int a : args_) {
        if (a < 1) {
            throw DomainError("index entries must be positive integers");
        }
    }
}

int IntegerIndex::weight() const {
    int w = 0;
    for (int a : args_) {
        w += a;
    }
    return w;
}

MzvIndex IntegerIndex::as_mzv_index() const {
    return MzvIndex{std::vector<double>(args_.begin(), args_.end())};
}

std::string IntegerIndex::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < args_.size(); ++i) {
        os << (i ? "," : "") << args_[i];
    }
    return os.str();
}

EvalReport MzvRelation::evaluate_mzv_side(double target_eps) const {
    const double eps_each = target_eps / static_cast<double>(std::max<std::size_t>(1, mzv_side.size()));
    EvalReport total{0.0, 0.0, 0};
    for (const auto& term : mzv_side) {
        total = total + term.coeff.get_d() * mzv(term.index.as_mzv_index(), eps_each);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Euler reductions

ZetaPolynomial reduce_n1(int n) {
    if (n < 2) {
        throw DomainError("zeta(n,1) reduction needs n >= 2");
    }
    ZetaPolynomial p;
    p.add_term({n + 1}, Rational(n, 2));
    for (int j = 2; j <= n - 1; ++j) {
        p.add_term({j, n + 1 - j}, Rational(-1, 2));
    }
    return p;
}

ZetaPolynomial reduce_double_odd(int m, int n) {
    if (m < 2 || n < 2) {
        throw DomainError("zeta(m,n) reduction needs m >= 2 and n >= 2 (use reduce_n1 for n = 1)");
    }
    if ((m + n) % 2 == 0) {
        throw DomainError("zeta(m,n) reduction needs m + n odd");
    }
    const int w = m + n;
    const int sign_m = m % 2 == 0 ? 1 : -1;  // (-1)^m
    ZetaPolynomial p;
    p.add_term({w}, Rational(sign_m * binomial(w, n) - 1) / 2);
    if (sign_m == 1) {
        p.add_term({m, n}, Rational(1));
    }
    for (int j = 1; j <= (w - 1) / 2; ++j) {
        const Rational c = binomial(2 * j - 2, m - 1) + binomial(2 * j - 2, n - 1);
        if (c == 0) {
            continue;
        }
        // j = 1 would give zeta(1); its binomials vanish for m, n >= 2.
        p.add_term({2 * j - 1, w - 2 * j + 1}, -sign_m * c);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Identity generators

MzvRelation sum_theorem_identity(int n, int k) {
    if (k < 2 || n <= k || n > 10) {
        throw DomainError("sum theorem needs n > k >= 2 and n <= 10");
    }
    MzvRelation rel;
    for (auto& index : admissible_indices(n)) {
        if (static_cast<int>(index.depth()) == k) {
            rel.mzv_side.push_back({Rational(1), std::move(index)});
        }
    }
    std::sort(rel.mzv_side.begin(), rel.mzv_side.end(),
              [](const MzvTerm& a, const MzvTerm& b) { return a.index > b.index; });
    rel.zeta_side = ZetaPolynomial::zeta(n);
    return rel;
}

MzvRelation binom_relation(int p, int q) {
    if (p < 1 || q < 1 || p + q < 3) {
        throw DomainError("binomial relation needs positive p, q with p + q >= 3");
    }
    const int n = p + q;
    MzvRelation rel;
    for (int i = p + 1; i <= n - 1; ++i) {
        rel.mzv_side.push_back({binomial(i - 1, p - 1), IntegerIndex{i, n - i}});
    }
    for (int i = q + 1; i <= n - 1; ++i) {
        rel.mzv_side.push_back({binomial(i - 1, q - 1), IntegerIndex{i, n - i}});
    }
    rel.zeta_side = ZetaPolynomial::zeta(n);
    return rel;
}

MzvRelation product_relation(int n, int m) {
    if (n < 2 || m < 2) {
        throw DomainError("product relation needs n, m >= 2");
    }
    MzvRelation rel;
    if (n == m) {
        rel.mzv_side.push_back({Rational(2), IntegerIndex{n, n}});
    } else {
        rel.mzv_side.push_back({Rational(1), IntegerIndex{n, m}});
        rel.mzv_side.push_back({Rational(1), IntegerIndex{m, n}});
    }
    rel.mzv_side.push_back({Rational(1), IntegerIndex{n + m}});
    rel.zeta_side.add_term({n, m}, Rational(1));
    return rel;
}

IntegerIndex duality(const IntegerIndex& index) {
    const int n = index.weight();
    // Sigma: partial sums, a strictly increasing subset of {1..n} ending at n.
    std::set<int> partial;
    int running = 0;
    for (int a : index.args()) {
        running += a;
        partial.insert(running);
    }
    // C_n: complement in {1..n}.
    std::vector<int> complement;
    for (int i = 1; i <= n; ++i) {
        if (!partial.contains(i)) {
            complement.push_back(i);
        }
    }
    // R_n: (n+1-a_k, ..., n+1-a_1).
    std::vector<int> reflected;
    for (auto it = complement.rbegin(); it != complement.rend(); ++it) {
        reflected.push_back(n + 1 - *it);
    }
    // Sigma^{-1}: successive differences.
    std::vector<int> out;
    int previous = 0;
    for (int a : reflected) {
        out.push_back(a - previous);
        previous = a;
    }
    return IntegerIndex(std::move(out));
}

std::vector<IntegerIndex> admissible_indices(int weight) {
    if (weight < 2 || weight > 16) {
        throw BoundError("admissible index enumeration supports weights 2..16");
    }
    std::vector<IntegerIndex> out;
    // Compositions of the weight with first part >= 2, built without the k <= 8 cap.
    std::vector<int> prefix;
    auto recurse = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            if (prefix.front() >= 2) {
                out.emplace_back(prefix);
            }
            return;
        }
        for (int part = 1; part <= remaining; ++part) {
            prefix.push_back(part);
            self(self, remaining - part);
            prefix.pop_back();
        }
    };
    recurse(recurse, weight);
    return out;
}

}  // namespace zetatail
