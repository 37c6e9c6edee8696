#include "zetatail/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "zetatail/asymptotic.hpp"
#include "zetatail/quadrature.hpp"

namespace zetatail {

namespace {

constexpr double kUnit = std::numeric_limits<double>::epsilon();

// Terms kept in the asymptotic tail expansions, including the guard band.
constexpr std::size_t kSeriesTerms = 16;

// Li_q(e^-t) switches from the direct series to Euler-Maclaurin below this t.
constexpr double kPolylogSwitch = 0.25;

// Euler-Maclaurin correction pairs used for Li_q(e^-t) near t = 0.
constexpr int kPolylogEmPairs = 8;

// Neumaier compensated accumulation.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

void require_eps(double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        throw DomainError("target_eps must be positive and finite");
    }
}

void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) {
        throw DomainError(std::string(name) + " must be finite");
    }
}

EvalReport checked(EvalReport report, double eps, const char* what) {
    if (!(report.abs_error_bound <= eps)) {
        std::ostringstream os;
        os << what << ": error bound " << report.abs_error_bound << " exceeds target " << eps;
        throw PrecisionError(os.str());
    }
    return report;
}

struct EmTail {
    double value;
    double bound;
};

double em_remainder_factor(double s) {
    return s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) / 30240.0;
}

// sum_{i >= m} i^-s through the B4 correction; the B6 term bounds the rest.
EmTail euler_maclaurin_tail(double s, double m) {
    const double ms = std::pow(m, -s);
    const double m2 = m * m;
    const double value = m * ms / (s - 1.0) + 0.5 * ms + s * ms / (12.0 * m) -
                         s * (s + 1.0) * (s + 2.0) * ms / (720.0 * m2 * m);
    const double bound = em_remainder_factor(s) * ms / (m2 * m2 * m);
    return {value, bound};
}

std::int64_t em_cutoff(double s, double eps) {
    const double m = std::pow(em_remainder_factor(s) / eps, 1.0 / (s + 5.0));
    if (!(m < 1e8)) {
        throw PrecisionError("Euler-Maclaurin cutoff exceeds iteration cap");
    }
    return std::max<std::int64_t>(2, static_cast<std::int64_t>(std::ceil(m)));
}

void require_zeta_argument(double s) {
    require_finite(s, "s");
    if (!(s > 1.0 + kBoundaryGuard)) {
        std::ostringstream os;
        os << "zeta argument " << s << " too close to or below 1";
        throw DomainError(os.str());
    }
}

EvalReport tail_unchecked(double p, std::int64_t n, double eps) {
    const std::int64_t m = std::max(n + 1, em_cutoff(p, 0.25 * eps));
    if (m - n > 10'000'000) {
        throw PrecisionError("direct summation length exceeds iteration cap");
    }
    CompensatedSum sum;
    for (std::int64_t i = n + 1; i < m; ++i) {
        sum.add(std::pow(static_cast<double>(i), -p));
    }
    const EmTail em = euler_maclaurin_tail(p, static_cast<double>(m));
    sum.add(em.value);
    const double value = sum.value();
    return {value, em.bound + 4.0 * kUnit * value, m - n};
}

// Pochhammer (q)_i as a running product.
std::vector<double> rising_factorials(double q, int count) {
    std::vector<double> out(static_cast<std::size_t>(count) + 1, 1.0);
    for (int i = 1; i <= count; ++i) {
        out[static_cast<std::size_t>(i)] = out[static_cast<std::size_t>(i) - 1] * (q + i - 1);
    }
    return out;
}

}  // namespace

EvalReport operator+(const EvalReport& a, const EvalReport& b) {
    const double v = a.value + b.value;
    return {v, a.abs_error_bound + b.abs_error_bound + kUnit * std::fabs(v),
            a.terms_used + b.terms_used};
}

EvalReport operator-(const EvalReport& a, const EvalReport& b) {
    const double v = a.value - b.value;
    return {v, a.abs_error_bound + b.abs_error_bound + kUnit * std::fabs(v),
            a.terms_used + b.terms_used};
}

EvalReport operator*(const EvalReport& a, const EvalReport& b) {
    const double v = a.value * b.value;
    const double bound = std::fabs(a.value) * b.abs_error_bound + std::fabs(b.value) * a.abs_error_bound +
                         a.abs_error_bound * b.abs_error_bound + kUnit * std::fabs(v);
    return {v, bound, a.terms_used + b.terms_used};
}

EvalReport operator*(double c, const EvalReport& a) {
    const double v = c * a.value;
    return {v, std::fabs(c) * a.abs_error_bound + kUnit * std::fabs(v), a.terms_used};
}

EvalReport zeta(double s, double target_eps) {
    require_zeta_argument(s);
    require_eps(target_eps);
    return checked(tail_unchecked(s, 0, target_eps), target_eps, "zeta");
}

EvalReport tail(double p, std::int64_t n, double target_eps) {
    require_zeta_argument(p);
    require_eps(target_eps);
    if (n < 0) {
        throw DomainError("tail start must be nonnegative");
    }
    return checked(tail_unchecked(p, n, target_eps), target_eps, "tail");
}

// ---------------------------------------------------------------------------
// Polylogarithm

PolylogAtExp::PolylogAtExp(double q) : q_(q) {
    require_finite(q, "polylog order");
    direct_count_ = std::max(64, static_cast<int>(std::ceil(4.0 * (std::fabs(q) + 2.0 * kPolylogEmPairs))));
    inverse_powers_.resize(static_cast<std::size_t>(direct_count_) + 1);
    for (int k = 1; k <= direct_count_; ++k) {
        inverse_powers_[static_cast<std::size_t>(k)] = std::pow(static_cast<double>(k), -q);
    }
}

EvalReport PolylogAtExp::operator()(double t) const {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("Li_q(e^-t) needs finite t > 0");
    }
    return t >= kPolylogSwitch ? direct_series(t) : euler_maclaurin(t);
}

EvalReport PolylogAtExp::direct_series(double t) const {
    const double x = std::exp(-t);
    auto inverse_power = [&](std::int64_t k) {
        return k <= direct_count_ ? inverse_powers_[static_cast<std::size_t>(k)]
                                  : std::pow(static_cast<double>(k), -q_);
    };
    CompensatedSum sum;
    for (std::int64_t k = 1; k <= 1'000'000; ++k) {
        sum.add(std::exp(-static_cast<double>(k) * t) * inverse_power(k));
        const double next = std::exp(-static_cast<double>(k + 1) * t) * inverse_power(k + 1);
        // Remainder after k terms: geometric domination of the term ratio.
        double ratio = x;
        if (q_ < 0.0) {
            ratio = x * std::pow(1.0 + 1.0 / static_cast<double>(k + 1), -q_);
        }
        if (ratio >= 1.0) {
            continue;
        }
        const double remainder = next / (1.0 - ratio);
        const double value = sum.value();
        if (remainder <= 0.25 * kUnit * value) {
            return {value, remainder + 8.0 * kUnit * value, k};
        }
    }
    throw PrecisionError("polylog series did not converge within the term cap");
}

EvalReport PolylogAtExp::euler_maclaurin(double t) const {
    // sum_{k>=1} h(k), h(x) = x^-q e^{-tx}: direct to K-1, then Euler-Maclaurin at K.
    const int big_k = direct_count_;
    const double kk = static_cast<double>(big_k);
    CompensatedSum sum;
    for (int k = 1; k < big_k; ++k) {
        sum.add(std::exp(-static_cast<double>(k) * t) * inverse_powers_[static_cast<std::size_t>(k)]);
    }

    // integral_K^inf x^-q e^{-tx} dx = K^{1-q} integral_0^inf exp((1-q)u - z e^u) du, z = tK.
    const double z = t * kk;
    const double cutoff = 50.0 + 2.0 * std::fabs(q_);
    const double upper = std::log(cutoff / z);
    const double one_minus_q = 1.0 - q_;
    const auto quad = integrate([&](double u) { return std::exp(one_minus_q * u - z * std::exp(u)); }, 0.0,
                                upper, 0.0, 1e-13, 2000);
    if (!quad.converged) {
        throw PrecisionError("incomplete-gamma quadrature did not converge");
    }
    // Tail past u = upper: z^{q-1} Gamma(1-q, cutoff) <= z^{q-1} cutoff^{-q} e^{-cutoff} / (1 - max(0,-q)/cutoff).
    const double gamma_tail = std::pow(z, q_ - 1.0) * std::pow(cutoff, -q_) * std::exp(-cutoff) /
                              (1.0 - std::max(0.0, -q_) / cutoff);
    const double k_scale = std::pow(kk, one_minus_q);
    const double integral = k_scale * quad.value;
    const double integral_err = k_scale * (quad.error + gamma_tail);

    const double e_tk = std::exp(-t * kk);
    const double h_k = inverse_powers_[static_cast<std::size_t>(big_k)] * e_tk;
    sum.add(integral);
    sum.add(0.5 * h_k);

    // h^{(m)}(K) = (-1)^m h(K) sum_i C(m,i) (q)_i K^-i t^{m-i}
    constexpr int kOrder = 2 * kPolylogEmPairs;
    const auto rising = rising_factorials(q_, kOrder);
    auto derivative_sum = [&](int m, bool absolute) {
        double total = 0.0;
        double binom = 1.0;
        for (int i = 0; i <= m; ++i) {
            const double rise = absolute ? std::fabs(rising[static_cast<std::size_t>(i)])
                                         : rising[static_cast<std::size_t>(i)];
            total += binom * rise * std::pow(kk, -static_cast<double>(i)) * std::pow(t, static_cast<double>(m - i));
            binom = binom * (m - i) / (i + 1);
        }
        return total;
    };
    double factorial = 1.0;
    for (int j = 1; j <= kPolylogEmPairs; ++j) {
        factorial *= (2.0 * j - 1.0) * (2.0 * j);
        const double deriv = -derivative_sum(2 * j - 1, false) * h_k;
        sum.add(-bernoulli_even(static_cast<std::size_t>(j)) / factorial * deriv);
    }
    // |R| <= 2 zeta(2J) / (2 pi)^{2J} * integral_K^inf |h^{(2J)}|, and
    // |h^{(2J)}(x)| <= x^-q e^{-tx} * P(K) for x >= K.
    const double two_pi = 2.0 * std::numbers::pi;
    const double remainder = 2.0 * 1.0001 / std::pow(two_pi, kOrder) * derivative_sum(kOrder, true) *
                             (integral + integral_err);

    const double value = sum.value();
    return {value, integral_err + remainder + 8.0 * kUnit * value, big_k + quad.evaluations};
}

EvalReport polylog(double q, double x, double target_eps) {
    require_finite(q, "q");
    require_eps(target_eps);
    if (!(x > 0.0 && x < 1.0)) {
        throw DomainError("polylog argument must lie in (0, 1)");
    }
    const double t = -std::log(x);
    EvalReport r = PolylogAtExp(q)(t);
    // log(x) carries one rounding; d Li / dt = -Li_{q-1}, bounded by (|q| + 1) Li / t near t = 0.
    r.abs_error_bound += 4.0 * (std::fabs(q) + 2.0) * kUnit * std::fabs(r.value);
    return checked(r, target_eps, "polylog");
}

// ---------------------------------------------------------------------------
// Multiple zeta values

namespace {

EvalReport nested_mzv(const MzvIndex& index, double target_eps, std::size_t max_depth) {
    require_eps(target_eps);
    const std::size_t depth = index.depth();
    if (depth == 0) {
        throw DomainError("mzv index must be nonempty");
    }
    if (depth > max_depth) {
        throw UnsupportedDepthError("mzv depth " + std::to_string(depth) + " exceeds " + std::to_string(max_depth));
    }
    for (double a : index.args) {
        require_finite(a, "mzv argument");
    }
    if (!(convergence_margin(index.args) > kBoundaryGuard)) {
        throw DomainError("mzv index does not converge (or lies within 1e-6 of the boundary)");
    }

    // Z_j(n) = sum_{n_1 > ... > n_j > n} n_1^-a_1 ... n_j^-a_j; zeta(index) = Z_depth(0).
    std::vector<AsymptoticSeries> series;
    series.push_back(AsymptoticSeries::power(-index.args[0], kSeriesTerms).tail_sum());
    for (std::size_t j = 1; j < depth; ++j) {
        series.push_back(series.back().shifted(-index.args[j]).tail_sum());
    }

    std::vector<double> z(depth + 1);
    std::vector<double> err(depth + 1);
    std::vector<double> rnd(depth + 1);
    EvalReport best{0.0, INFINITY, 0};
    for (std::int64_t n_start = 4 * static_cast<std::int64_t>(kSeriesTerms); n_start <= (1 << 16); n_start *= 2) {
        z[0] = 1.0;
        err[0] = rnd[0] = 0.0;
        for (std::size_t j = 1; j <= depth; ++j) {
            const auto e = series[j - 1].evaluate(static_cast<double>(n_start));
            z[j] = e.value;
            err[j] = e.truncation_bound;
            rnd[j] = 4.0 * kUnit * std::fabs(e.value);
        }
        // Backward recursion Z_j(n-1) = Z_j(n) + n^-a_j Z_{j-1}(n); every addend is positive.
        for (std::int64_t n = n_start; n >= 1; --n) {
            const double dn = static_cast<double>(n);
            for (std::size_t j = depth; j >= 1; --j) {
                const double w = std::pow(dn, -index.args[j - 1]);
                z[j] += w * z[j - 1];
                err[j] += w * err[j - 1];
                rnd[j] += w * rnd[j - 1] + 3.0 * kUnit * z[j];
            }
        }
        EvalReport report{z[depth], err[depth] + rnd[depth], n_start};
        if (report.abs_error_bound <= target_eps) {
            return report;
        }
        if (report.abs_error_bound < best.abs_error_bound) {
            best = report;
        } else {
            break;
        }
    }
    return checked(best, target_eps, "mzv");
}

}  // namespace

EvalReport mzv(const MzvIndex& index, double target_eps) { return nested_mzv(index, target_eps, 4); }

EvalReport mzv_extended(const MzvIndex& index, double target_eps) {
    return nested_mzv(index, target_eps, static_cast<std::size_t>(kMaxArity));
}

EvalReport mzv_integral(double r, double q, double target_eps) {
    require_finite(r, "r");
    require_finite(q, "q");
    require_eps(target_eps);
    if (!(r > 1.0 + kBoundaryGuard) || !(r + q - 2.0 > kBoundaryGuard)) {
        throw DomainError("integral representation needs r > 1 and q > 2 - r");
    }
    const double gamma_r = std::tgamma(r);
    const double budget = target_eps * gamma_r;
    const PolylogAtExp li(q);

    // [T, inf): Li_q(e^-t) <= e^{-t} Li_q(e^-T) e^T and 1/(e^t - 1) <= e^{-t} / (1 - e^-T), so the
    // piece is at most C 2^-r Gamma(r, 2T) with Gamma(r, x) <= x^{r-1} e^-x / (1 - (r-1)/x).
    double upper = 8.0;
    double upper_bound = INFINITY;
    for (; upper <= 800.0; upper *= 1.5) {
        if (2.0 * upper <= r - 1.0) {
            continue;
        }
        const double c = li(upper).value * std::exp(upper) / -std::expm1(-upper);
        const double x = 2.0 * upper;
        upper_bound = c * std::pow(2.0, -r) * std::pow(x, r - 1.0) * std::exp(-x) / (1.0 - (r - 1.0) / x);
        if (upper_bound <= budget / 8.0) {
            break;
        }
    }
    if (!(upper_bound <= budget / 8.0)) {
        throw PrecisionError("could not bound the integrand's exponential tail");
    }

    // [0, tau): t / (e^t - 1) <= 1 and Li_q(e^-t) <= A t^-beta give A tau^{r-1-beta} / (r-1-beta).
    double amplitude = 0.0;
    double beta = 0.0;
    if (q > 1.0 + kBoundaryGuard) {
        const EvalReport zq = zeta(q, 1e-6);
        amplitude = zq.value + zq.abs_error_bound;
    } else {
        const double qq = q < 1.0 ? q : 1.0 - std::min(0.5, 0.5 * (r - 1.0));
        beta = 1.0 - qq;
        amplitude = std::tgamma(1.0 - qq);
        if (qq < 0.0) {
            amplitude += std::pow(-qq / std::numbers::e, -qq);
        }
    }
    const double rate = r - 1.0 - beta;
    double lower = std::pow(budget / 8.0 * rate / amplitude, 1.0 / rate);
    lower = std::min(lower, 1.0);
    if (!(lower > 1e-300)) {
        throw PrecisionError("endpoint cutoff underflows; parameters too close to the boundary");
    }
    const double lower_bound = amplitude * std::pow(lower, rate) / rate;

    // Substituting t = e^-s turns the t -> 0 singularity into exponential decay in s.
    double li_relative = 0.0;
    auto integrand = [&](double s) {
        const double t = std::exp(-s);
        const EvalReport l = li(t);
        if (l.value > 0.0) {
            li_relative = std::max(li_relative, l.abs_error_bound / l.value);
        }
        return std::pow(t, r) * l.value / std::expm1(t);
    };
    const auto quad = integrate(integrand, -std::log(upper), -std::log(lower), budget / 2.0, 0.0, 20000);
    if (!quad.converged) {
        throw PrecisionError("quadrature for the integral representation did not converge");
    }
    const double err = quad.error + upper_bound + lower_bound + 1.01 * li_relative * std::fabs(quad.value) +
                       8.0 * kUnit * std::fabs(quad.value);
    const double value = quad.value / gamma_r;
    EvalReport report{value, err / gamma_r + 4.0 * kUnit * std::fabs(value), quad.evaluations};
    return checked(report, target_eps, "mzv_integral");
}

// ---------------------------------------------------------------------------
// Tail-product oracle

EvalReport brute_tail_product_sum(const ExponentList& exponents, double target_eps) {
    require_eps(target_eps);
    exponents.require_tail_exponents();
    const std::size_t k = exponents.size();
    if (!(exponents.sum() > static_cast<double>(k) + 1.0 + kBoundaryGuard)) {
        throw DomainError("tail-product sum needs i_1 + ... + i_k > k + 1");
    }

    // Beyond the cutoff: sum_{n > N} prod_j T_j(n) from the product of the factor expansions.
    AsymptoticSeries product = AsymptoticSeries::hurwitz_tail(exponents[0], kSeriesTerms);
    for (std::size_t j = 1; j < k; ++j) {
        product = product * AsymptoticSeries::hurwitz_tail(exponents[j], kSeriesTerms);
    }
    const AsymptoticSeries outer = product.tail_sum();

    EvalReport best{0.0, INFINITY, 0};
    for (std::int64_t cutoff = 128; cutoff <= (1 << 20); cutoff *= 2) {
        const auto n_max = static_cast<std::size_t>(cutoff);
        // tails[j][n] = T_j(n) for n = 1..N, recursing down from the Euler-Maclaurin value at N.
        std::vector<std::vector<double>> tails(k, std::vector<double>(n_max + 1));
        std::vector<double> offsets(k);
        for (std::size_t j = 0; j < k; ++j) {
            const EmTail em = euler_maclaurin_tail(exponents[j], static_cast<double>(cutoff + 1));
            tails[j][n_max] = em.value;
            offsets[j] = em.bound + 8.0 * kUnit * em.value;
            for (std::size_t n = n_max; n >= 2; --n) {
                tails[j][n - 1] = tails[j][n] + std::pow(static_cast<double>(n), -exponents[j]);
            }
        }

        CompensatedSum sum;
        double offset_effect = 0.0;
        for (std::size_t n = 1; n <= n_max; ++n) {
            double prod = 1.0;
            for (std::size_t j = 0; j < k; ++j) {
                prod *= tails[j][n];
            }
            sum.add(prod);
            for (std::size_t j = 0; j < k; ++j) {
                double others = offsets[j];
                for (std::size_t i = 0; i < k; ++i) {
                    if (i != j) {
                        others *= tails[i][n] + offsets[i];
                    }
                }
                offset_effect += others;
            }
        }
        const auto remainder = outer.evaluate(static_cast<double>(cutoff));
        sum.add(remainder.value);
        const double value = sum.value();
        const double rounding =
            (static_cast<double>(k) * static_cast<double>(cutoff + 3) + 2.0) * kUnit * std::fabs(value);
        EvalReport report{value, offset_effect + remainder.truncation_bound + rounding, cutoff};
        if (report.abs_error_bound <= target_eps) {
            return report;
        }
        if (report.abs_error_bound < best.abs_error_bound) {
            best = report;
        } else {
            break;
        }
    }
    return checked(best, target_eps, "brute_tail_product_sum");
}

}  // namespace zetatail
