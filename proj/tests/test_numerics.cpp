#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "zetatail/asymptotic.hpp"
#include "zetatail/errors.hpp"
#include "zetatail/numerics.hpp"
#include "zetatail/quadrature.hpp"
#include "zetatail/verify.hpp"

using namespace zetatail;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta3 = 1.2020569031595942853997381615114;

// Reference values are rounded to double; allow a few ulps on top of the reported bound.
bool within(const EvalReport& r, double reference, double slack = 0.0) {
    const double ulps = 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(reference);
    return std::fabs(r.value - reference) <= r.abs_error_bound + ulps + slack;
}

bool agree(const EvalReport& a, const EvalReport& b, double slack = 0.0) {
    return std::fabs(a.value - b.value) <= a.abs_error_bound + b.abs_error_bound + slack;
}

}  // namespace

TEST_CASE("quadrature") {
    const auto e = integrate([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-13);
    CHECK(e.converged);
    CHECK(std::fabs(e.value - (std::exp(1.0) - 1.0)) < 1e-13);

    const auto s = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12);
    CHECK(s.converged);
    CHECK(std::fabs(s.value - 2.0 / 3.0) < 1e-12);

    const auto osc = integrate([](double x) { return std::sin(50.0 * x); }, 0.0, kPi, 1e-12);
    CHECK(std::fabs(osc.value - (1.0 - std::cos(50.0 * kPi)) / 50.0) < 1e-12);
}

TEST_CASE("asymptotic Hurwitz tail agrees with the summed tail") {
    for (double s : {1.5, 2.0, 3.7}) {
        const auto series = AsymptoticSeries::hurwitz_tail(s, 16);
        for (double n : {64.0, 200.0, 5000.0}) {
            const auto ev = series.evaluate(n);
            const EvalReport direct = tail(s, static_cast<std::int64_t>(n), 1e-14);
            CHECK(std::fabs(ev.value - direct.value) <= ev.truncation_bound + direct.abs_error_bound + 1e-15 * direct.value);
        }
    }
    CHECK_THROWS_AS(AsymptoticSeries::power(-0.5, 16).tail_sum(), DomainError);
}

TEST_CASE("zeta against closed forms") {
    const EvalReport z2 = zeta(2.0);
    CHECK(z2.abs_error_bound <= kDefaultEps);
    CHECK(within(z2, kPi * kPi / 6.0));
    CHECK(within(zeta(4.0, 1e-12), std::pow(kPi, 4) / 90.0));
    CHECK(within(zeta(2.5, 1e-12), 1.34148725725091717975676969335));
    CHECK(within(zeta(1.2, 1e-10), 5.5915824411777518836136712615));

    for (double s : {1.01, 1.5, 2.0, 7.3, 40.0}) {
        CHECK(zeta(s, 1e-10).abs_error_bound <= 1e-10);
    }
}

TEST_CASE("zeta(3) against a ten-million-term partial sum with integral bracket") {
    const long n_max = 10'000'000;
    long double partial = 0.0L;
    for (long i = n_max; i >= 1; --i) {
        const long double x = static_cast<long double>(i);
        partial += 1.0L / (x * x * x);
    }
    // sum_{i>N} i^-3 lies between the integrals from N+1 and from N.
    const long double n = static_cast<long double>(n_max);
    const long double lo = partial + 0.5L / ((n + 1) * (n + 1));
    const long double hi = partial + 0.5L / (n * n);
    const EvalReport z = zeta(3.0, 1e-13);
    CHECK(static_cast<long double>(z.value) >= lo - z.abs_error_bound - 1e-16L);
    CHECK(static_cast<long double>(z.value) <= hi + z.abs_error_bound + 1e-16L);
}

TEST_CASE("zeta errors") {
    CHECK_THROWS_AS(zeta(1.0), DomainError);
    CHECK_THROWS_AS(zeta(1.0 + 1e-7), DomainError);
    CHECK_THROWS_AS(zeta(0.5), DomainError);
    CHECK_THROWS_AS(zeta(NAN), DomainError);
    CHECK_THROWS_AS(zeta(2.0, 0.0), DomainError);
    CHECK_THROWS_AS(zeta(2.0, 1e-18), PrecisionError);
}

TEST_CASE("tails") {
    for (double p : {1.5, 2.0, 3.3}) {
        CHECK(agree(tail(p, 0), zeta(p)));
    }
    CHECK(agree(tail(2.0, 1, 1e-12), zeta(2.0, 1e-12) - EvalReport{1.0, 0.0, 1}, 1e-15));

    const EvalReport t = tail(3.0, 10, 1e-14);
    CHECK(t.value >= 0.5 / (11.0 * 11.0));
    CHECK(t.value <= 0.5 / (10.0 * 10.0));

    // Far out the tail is ~ n^{1-p}/(p-1) and must keep its relative accuracy.
    const EvalReport far = tail(2.0, 1'000'000'000, 1e-20);
    CHECK(std::fabs(far.value - (1.0 / 1e9 - 0.5 / 1e18)) < 1e-25);

    CHECK_THROWS_AS(tail(1.0, 3), DomainError);
    CHECK_THROWS_AS(tail(2.0, -1), DomainError);
}

TEST_CASE("polylog closed forms") {
    CHECK(within(polylog(1.0, 0.5), std::log(2.0)));
    for (double x : {0.1, 0.7, 0.999, 1.0 - 1e-9}) {
        const double one_minus_x = 1.0 - x;  // exact in double for these x
        const double li1 = -std::log(one_minus_x);
        const double li0 = x / one_minus_x;
        const double lim1 = x / (one_minus_x * one_minus_x);
        CHECK(within(polylog(1.0, x, 1e-13 * std::max(1.0, li1)), li1));
        CHECK(within(polylog(0.0, x, 1e-13 * std::max(1.0, li0)), li0));
        CHECK(within(polylog(-1.0, x, 1e-13 * std::max(1.0, lim1)), lim1));
    }
    CHECK(within(polylog(2.0, 0.3, 1e-14), 0.326129510075476056330411191919));

    // Leading term for small x.
    const double x = 1e-9;
    CHECK(std::fabs(polylog(3.3, x).value - x) < 1e-17);

    CHECK_THROWS_AS(polylog(2.0, 0.0), DomainError);
    CHECK_THROWS_AS(polylog(2.0, 1.0), DomainError);
    CHECK_THROWS_AS(polylog(2.0, 1.5), DomainError);
}

TEST_CASE("Li_2(0.3) against a sixty-term sum with geometric remainder") {
    double sum = 0.0;
    double power = 1.0;
    for (int j = 1; j <= 60; ++j) {
        power *= 0.3;
        sum += power / (static_cast<double>(j) * j);
    }
    // Terms beyond 60 are below 0.3^61 / 61^2 and shrink geometrically by 0.3.
    const double remainder = std::pow(0.3, 61) / (61.0 * 61.0) / (1.0 - 0.3);
    const EvalReport li = polylog(2.0, 0.3, 1e-14);
    CHECK(li.value >= sum - li.abs_error_bound - 1e-16);
    CHECK(li.value <= sum + remainder + li.abs_error_bound + 1e-16);
}

TEST_CASE("Li_q(e^-t) on both sides of the method switch") {
    for (double q : {2.5, 0.7, -1.5, -3.7}) {
        const PolylogAtExp li(q);
        for (double t : {0.2, 0.25, 0.3}) {
            long double sum = 0.0L;
            for (int j = 2000; j >= 1; --j) {
                sum += std::exp(-static_cast<long double>(t) * j) * std::pow(static_cast<long double>(j), -q);
            }
            const EvalReport r = li(t);
            CHECK(std::fabs(r.value - static_cast<double>(sum)) <= r.abs_error_bound + 1e-14 * std::fabs(r.value));
        }
    }
    CHECK(within(PolylogAtExp(2.5)(0.2), 1.00145801352041711468182273211));
    CHECK(within(PolylogAtExp(-1.5)(0.01), 132934.013247765082247299276111));
    CHECK(within(PolylogAtExp(0.7)(1e-4), 44.6348141691742773630000524127));
    CHECK(within(PolylogAtExp(2.5)(1e-6), 1.34148464723811011825602395754));
    CHECK(within(PolylogAtExp(-3.7)(0.3), 4425.23270965735088582634561142));
}

TEST_CASE("Li_q(e^-t) near t = 0") {
    const PolylogAtExp li1(1.0);
    for (double t : {0.2, 1e-3, 1e-8, 1e-100}) {
        const double ref = -std::log(-std::expm1(-t));
        CHECK(within(li1(t), ref));
    }
    // Li_2(e^-t) = zeta(2) + t (log t - 1) - t^2/4 + t^3/72 + O(t^5).
    const PolylogAtExp li2(2.0);
    for (double t : {1e-3, 1e-6}) {
        const double ref = kPi * kPi / 6.0 + t * (std::log(t) - 1.0) - t * t / 4.0 + t * t * t / 72.0;
        CHECK(within(li2(t), ref, 1e-15));
    }
}

TEST_CASE("mzv against known values") {
    CHECK(agree(mzv(MzvIndex{{2.0, 1.0}}), zeta(3.0)));
    CHECK(within(mzv(MzvIndex{{2.0, 1.0}}), kZeta3));
    CHECK(within(mzv(MzvIndex{{3.0, 1.0}}), std::pow(kPi, 4) / 360.0));
    CHECK(within(mzv(MzvIndex{{2.0, 1.0, 1.0}}, kDefaultDeepEps), std::pow(kPi, 4) / 90.0));
    CHECK(within(mzv(MzvIndex{{2.0, 2.0, 2.0}}, kDefaultDeepEps), std::pow(kPi, 6) / 5040.0));
    CHECK(within(mzv(MzvIndex{{2.0, 2.0, 2.0, 2.0}}, kDefaultDeepEps), std::pow(kPi, 8) / 362880.0));
    for (double s : {1.3, 2.0, 4.5}) {
        CHECK(agree(mzv(MzvIndex{{s}}), zeta(s)));
    }
    CHECK(within(mzv(MzvIndex{{2.5, 1.7}}), 0.424054824274085749087838338009));
    CHECK(within(mzv(MzvIndex{{1.3, 0.9}}), 18.0096288511566373349510649517));
    CHECK(within(mzv(MzvIndex{{3.0, -0.5}}), 0.867436431479421018917990144753));
    CHECK(within(mzv(MzvIndex{{1.5, 0.9}}), 5.64868930953859345436802251018));
    CHECK(within(mzv(MzvIndex{{2.0, 0.5}}), 2.10695498079232957598997898892));
}

TEST_CASE("mzv(2.5, 1.7) against a truncated double sum with bracketing remainder") {
    const int n_max = 20000;
    // S = sum_{N >= n1 > n2 >= 1} n1^-2.5 n2^-1.7, accumulated with inner suffix sums.
    long double suffix = 0.0L;
    long double s = 0.0L;
    long double outer = 0.0L;
    for (int n = n_max; n >= 1; --n) {
        const long double x = n;
        s += std::pow(x, -1.7L) * suffix;
        suffix += std::pow(x, -2.5L);
        outer += std::pow(x, -1.7L);
    }
    // Missing terms with n2 <= N < n1: each inner tail lies between the integrals from N+1 and N.
    // Terms with n2 > N add at most sum_{n2>N} n2^-1.7 n2^-1.5 / 1.5 <= N^-2.2 / (2.2 * 1.5).
    const long double n = n_max;
    const long double lo = s + outer * std::pow(n + 1, -1.5L) / 1.5L;
    const long double hi = s + outer * std::pow(n, -1.5L) / 1.5L + std::pow(n, -2.2L) / (2.2L * 1.5L);
    const EvalReport r = mzv(MzvIndex{{2.5, 1.7}});
    CHECK(static_cast<long double>(r.value) >= lo - r.abs_error_bound);
    CHECK(static_cast<long double>(r.value) <= hi + r.abs_error_bound);
}

TEST_CASE("mzv errors") {
    CHECK_THROWS_AS(mzv(MzvIndex{{1.0, 2.0}}), DomainError);
    CHECK_THROWS_AS(mzv(MzvIndex{{}}), DomainError);
    CHECK_THROWS_AS(mzv(MzvIndex{{2.0, 1.0, 1.0, 1.0, 1.0}}), UnsupportedDepthError);
    CHECK(within(mzv_extended(MzvIndex{{2.0, 1.0, 1.0, 1.0, 1.0}}, kDefaultDeepEps), std::pow(kPi, 6) / 945.0));
    CHECK_THROWS_AS(mzv(MzvIndex{{2.0, 1.0}}, 1e-18), PrecisionError);
}

TEST_CASE("integral representation") {
    CHECK(within(mzv_integral(2.0, 1.0), kZeta3, 1e-8));
    CHECK(agree(mzv_integral(2.0, 1.0), zeta(3.0)));
    CHECK(std::fabs(mzv_integral(2.5, 1.7).value - mzv(MzvIndex{{2.5, 1.7}}).value) < 1e-7);
    CHECK(within(mzv_integral(2.5, 1.7), 0.424054824274085749087838338009));
    CHECK(within(mzv_integral(3.0, -0.5), 0.867436431479421018917990144753));
    CHECK(within(mzv_integral(1.5, 0.9), 5.64868930953859345436802251018));
    CHECK(within(mzv_integral(3.5, 1.5), 0.145864081979352134536649092565));
    CHECK(within(mzv_integral(1.2, 1.1, 1e-8), 19.0500030905703497765298357472));

    CHECK_THROWS_AS(mzv_integral(1.0, 2.0), DomainError);
    CHECK_THROWS_AS(mzv_integral(2.0, -0.5), DomainError);
}

TEST_CASE("integral and nested sum agree on random pairs") {
    PortableRng rng(7);
    for (const auto& [r, q] : random_mzv_pairs(rng, 20)) {
        CAPTURE(r);
        CAPTURE(q);
        CHECK(agree(mzv_integral(r, q), mzv(MzvIndex{{r, q}}), 1e-7));
    }
}

TEST_CASE("brute-force tail product sums") {
    const double z3 = kZeta3;
    const double z4 = std::pow(kPi, 4) / 90.0;
    const double z2 = kPi * kPi / 6.0;
    CHECK(within(brute_tail_product_sum(ExponentList{2.0, 2.0}), 3.0 * z3 - 2.5 * z4, 1e-14));
    CHECK(within(brute_tail_product_sum(ExponentList{3.0, 2.0}), 2.0 * z4 - z2 * z3, 1e-14));
    CHECK(within(brute_tail_product_sum(ExponentList{3.0, 3.0}), 0.049607751916443211955));
    CHECK(within(brute_tail_product_sum(ExponentList{4.0, 3.0}), 0.018611198130921826954));
    CHECK(within(brute_tail_product_sum(ExponentList{2.0, 2.0, 2.0}), 0.38326631720157599838));
    CHECK(within(brute_tail_product_sum(ExponentList{3.0, 2.0, 2.0}), 0.10177615030108724515));
    CHECK(within(brute_tail_product_sum(ExponentList{3.0, 3.0, 2.0}), 0.029357416914455733704));
    CHECK(within(brute_tail_product_sum(ExponentList{2.0, 2.0, 2.0, 2.0}), 0.20881722218173482575));

    // Single factor: sum_n sum_{i>n} i^-p = sum_i (i-1) i^-p.
    CHECK(within(brute_tail_product_sum(ExponentList{3.5}), 1.34148725725091717975676969335 - 1.12673386731705664642781249185,
                 1e-15));

    CHECK_THROWS_AS(brute_tail_product_sum(ExponentList{1.5, 1.4}), DomainError);
    CHECK_THROWS_AS(brute_tail_product_sum(ExponentList{2.0, 1.0}), DomainError);
    CHECK_THROWS_AS(brute_tail_product_sum(ExponentList{2.0}), DomainError);
}

TEST_CASE("product relation for real arguments") {
    PortableRng rng(11);
    for (int i = 0; i < 20; ++i) {
        const double n = rng.uniform(1.3, 4.0);
        const double m = rng.uniform(1.3, 4.0);
        CAPTURE(n);
        CAPTURE(m);
        const EvalReport lhs = zeta(n) * zeta(m);
        const EvalReport rhs = mzv(MzvIndex{{n, m}}) + mzv(MzvIndex{{m, n}}) + zeta(n + m);
        CHECK(agree(lhs, rhs));
    }
}

TEST_CASE("halving the target never moves a value by more than the previous bound") {
    const auto honest = [](auto&& eval) {
        double eps = 1e-6;
        EvalReport previous = eval(eps);
        for (int i = 0; i < 8; ++i) {
            eps /= 2.0;
            const EvalReport next = eval(eps);
            CHECK(std::fabs(next.value - previous.value) <= previous.abs_error_bound);
            CHECK(next.abs_error_bound <= eps);
            previous = next;
        }
    };
    for (double s : {1.1, 2.0, 5.5}) {
        honest([s](double e) { return zeta(s, e); });
    }
    honest([](double e) { return tail(1.7, 12, e); });
    honest([](double e) { return polylog(-0.5, 0.97, e); });
    honest([](double e) { return mzv(MzvIndex{{2.5, 1.7}}, e); });
    honest([](double e) { return mzv(MzvIndex{{2.0, 1.5, 1.0}}, e); });
    honest([](double e) { return mzv_integral(2.2, 0.3, e); });
    honest([](double e) { return brute_tail_product_sum(ExponentList{1.6, 2.4, 1.9}, e); });
}

TEST_CASE("report arithmetic") {
    const EvalReport a{1.0, 1e-10, 3};
    const EvalReport b{2.0, 2e-10, 5};
    const EvalReport sum = a + b;
    CHECK(sum.value == 3.0);
    CHECK(sum.abs_error_bound >= 3e-10);
    const EvalReport prod = a * b;
    CHECK(prod.value == 2.0);
    CHECK(prod.abs_error_bound >= 2.0 * 1e-10 + 1.0 * 2e-10);
    const EvalReport scaled = -3.0 * a;
    CHECK(scaled.value == -3.0);
    CHECK(scaled.abs_error_bound >= 3e-10);
    CHECK((a - b).value == -1.0);
}
