#include "zetatail/verify.hpp"

#include <cmath>
#include <cstdio>

#include "zetatail/errors.hpp"
#include "zetatail/tails.hpp"

namespace zetatail {

namespace {

ZetaPolynomial poly(std::initializer_list<std::pair<Rational, Monomial>> terms) {
    ZetaPolynomial p;
    for (const auto& [c, m] : terms) {
        p.add_term(m, c);
    }
    return p;
}

std::string join(const std::vector<double>& values) {
    std::string out;
    char buf[32];
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.6g", values[i]);
        out += (i ? "," : "");
        out += buf;
    }
    return out;
}

std::string join(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? "," : "") + std::to_string(values[i]);
    }
    return out;
}

double eps_for_depth(std::size_t depth, double target_eps) {
    return depth <= 2 ? target_eps : std::max(target_eps, kDefaultDeepEps / 10.0);
}

void identity_checks(std::vector<CheckRecord>& out, double eps) {
    for (const auto& form : known_tail_sums()) {
        const ExponentList exps(form.exponents);
        const double e = eps_for_depth(exps.size(), eps);
        const EvalReport brute = brute_tail_product_sum(exps, e);
        out.push_back(make_check("tail_sum.closed_form(" + join(form.exponents) + ")", brute,
                                 form.value.evaluate(e), form.tolerance));
        out.push_back(make_check("tail_sum.formula(" + join(form.exponents) + ")", brute,
                                 evaluate_formula(tail_product_formula(exps), exps, e), form.tolerance));
    }

    out.push_back(make_check("integral.zeta(2,1)", mzv_integral(2.0, 1.0, eps), zeta(3.0, eps), 1e-8));

    for (double k : {2.0, 2.5, 3.0}) {
        const auto kk1 = proposition_kk1(k, eps);
        out.push_back(make_check("proposition.kk1(" + join(std::vector<double>{k}) + ")", kk1.lhs, kk1.rhs, 1e-7));
        const auto sq = proposition_square(k, eps);
        out.push_back(make_check("proposition.square(" + join(std::vector<double>{k}) + ")", sq.lhs, sq.rhs, 1e-7));
    }

    for (int n = 2; n <= 6; ++n) {
        out.push_back(make_check("reduce.n1(" + std::to_string(n) + ")", mzv(MzvIndex{{double(n), 1.0}}, eps),
                                 reduce_n1(n).evaluate(eps), 1e-8));
    }
    for (int w = 5; w <= 9; w += 2) {
        for (int m = 2; m <= w - 2; ++m) {
            const int n = w - m;
            out.push_back(make_check("reduce.double_odd(" + join(std::vector<int>{m, n}) + ")",
                                     mzv(MzvIndex{{double(m), double(n)}}, eps), reduce_double_odd(m, n).evaluate(eps),
                                     1e-8));
        }
    }

    for (int p = 3; p <= 5; ++p) {
        out.push_back(make_check("square.closed_form(" + std::to_string(p) + ")",
                                 brute_tail_product_sum(ExponentList{double(p), double(p)}, eps),
                                 integer_square_closed_form(p).evaluate(eps), 1e-8));
    }

    for (int w = 2; w <= 6; ++w) {
        for (const auto& index : admissible_indices(w)) {
            const IntegerIndex dual = duality(index);
            const double e = eps_for_depth(std::max(index.depth(), dual.depth()), eps);
            out.push_back(make_check("duality(" + index.to_string() + ")", mzv_extended(index.as_mzv_index(), e),
                                     mzv_extended(dual.as_mzv_index(), e), 1e-8));
        }
    }

    for (int n = 3; n <= 6; ++n) {
        for (int k = 2; k <= 3 && k < n; ++k) {
            const auto rel = sum_theorem_identity(n, k);
            const double e = eps_for_depth(static_cast<std::size_t>(k), eps);
            out.push_back(make_check("sum_theorem(" + join(std::vector<int>{n, k}) + ")", rel.evaluate_mzv_side(e),
                                     rel.zeta_side.evaluate(e), 1e-8));
        }
    }

    for (int p = 1; p <= 4; ++p) {
        for (int q = 1; q <= 4; ++q) {
            if (p + q < 3) {
                continue;
            }
            const auto rel = binom_relation(p, q);
            out.push_back(make_check("binom_relation(" + join(std::vector<int>{p, q}) + ")",
                                     rel.evaluate_mzv_side(eps), rel.zeta_side.evaluate(eps), 1e-8));
        }
    }
    for (int n = 2; n <= 4; ++n) {
        for (int m = n; m <= 4; ++m) {
            const auto rel = product_relation(n, m);
            out.push_back(make_check("product_relation(" + join(std::vector<int>{n, m}) + ")",
                                     rel.evaluate_mzv_side(eps), rel.zeta_side.evaluate(eps), 1e-8));
        }
    }
}

void random_checks(std::vector<CheckRecord>& out, std::uint64_t seed, double eps) {
    PortableRng rng(seed);
    const auto lists = random_exponent_lists(rng, 50);
    for (std::size_t i = 0; i < lists.size(); ++i) {
        const ExponentList exps(lists[i]);
        const double e = eps_for_depth(exps.size(), eps);
        char name[96];
        std::snprintf(name, sizeof name, "random.formula[%02zu](%s)", i, join(lists[i]).c_str());
        out.push_back(make_check(name, brute_tail_product_sum(exps, e),
                                 evaluate_formula(tail_product_formula(exps), exps, e), 1e-6));
    }
    const auto pairs = random_mzv_pairs(rng, 20);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [r, q] = pairs[i];
        char name[96];
        std::snprintf(name, sizeof name, "random.integral[%02zu](%s)", i, join(std::vector<double>{r, q}).c_str());
        out.push_back(make_check(name, mzv_integral(r, q, eps), mzv(MzvIndex{{r, q}}, eps), 1e-7));
    }
}

}  // namespace

CheckRecord make_check(std::string name, const EvalReport& lhs, const EvalReport& rhs, double tolerance) {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.lhs = lhs.value;
    rec.rhs = rhs.value;
    rec.diff = std::fabs(lhs.value - rhs.value);
    rec.bound = tolerance + lhs.abs_error_bound + rhs.abs_error_bound;
    rec.pass = rec.diff <= rec.bound;
    return rec;
}

Suite parse_suite(const std::string& name) {
    if (name == "paper") {
        return Suite::paper;
    }
    if (name == "random") {
        return Suite::random;
    }
    if (name == "all") {
        return Suite::all;
    }
    throw DomainError("unknown suite: " + name);
}

std::vector<ClosedForm> known_tail_sums() {
    return {
        {{2, 2}, poly({{Rational(3), {3}}, {Rational(-5, 2), {4}}}), 1e-8},
        {{3, 2}, poly({{Rational(2), {4}}, {Rational(-1), {2, 3}}}), 1e-8},
        {{4, 3}, poly({{Rational(-5, 6), {6}}, {Rational(3, 2), {3, 3}}, {Rational(-1), {3, 4}}}), 1e-8},
        {{3, 3}, poly({{Rational(-10), {5}}, {Rational(6), {2, 3}}, {Rational(-1), {3, 3}}}), 1e-8},
        {{2, 2, 2}, poly({{Rational(9), {2, 3}}, {Rational(-25, 2), {5}}, {Rational(-35, 8), {6}}}), 1e-7},
        {{3, 2, 2}, poly({{Rational(7, 6), {6}}, {Rational(3, 2), {3, 3}}, {Rational(-1), {2, 2, 3}}}), 1e-7},
        {{3, 3, 2},
         poly({{Rational(77, 8), {7}}, {Rational(3), {2, 2, 3}}, {Rational(-10), {2, 5}}, {Rational(-1), {2, 3, 3}}}),
         1e-7},
        {{2, 2, 2, 2},
         poly({{Rational(-301, 4), {7}},
               {Rational(10), {2, 5}},
               {Rational(102, 5), {2, 2, 3}},
               {Rational(-175, 24), {8}}}),
         1e-6},
    };
}

std::vector<std::vector<double>> random_exponent_lists(PortableRng& rng, int count) {
    std::vector<std::vector<double>> out;
    while (static_cast<int>(out.size()) < count) {
        const int k = rng.uniform() < 0.5 ? 2 : 3;
        std::vector<double> exps;
        double sum = 0.0;
        for (int j = 0; j < k; ++j) {
            exps.push_back(rng.uniform(1.2, 4.0));
            sum += exps.back();
        }
        if (sum > k + 1 + 0.05) {
            out.push_back(std::move(exps));
        }
    }
    return out;
}

std::vector<std::pair<double, double>> random_mzv_pairs(PortableRng& rng, int count) {
    std::vector<std::pair<double, double>> out;
    for (int i = 0; i < count; ++i) {
        const double r = rng.uniform(1.2, 4.0);
        out.emplace_back(r, rng.uniform(2.2 - r, 4.0));
    }
    return out;
}

std::vector<CheckRecord> run_suite(Suite suite, std::uint64_t seed, double target_eps) {
    std::vector<CheckRecord> out;
    if (suite == Suite::paper || suite == Suite::all) {
        identity_checks(out, target_eps);
    }
    if (suite == Suite::random || suite == Suite::all) {
        random_checks(out, seed, target_eps);
    }
    return out;
}

}  // namespace zetatail
