#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zetatail/numerics.hpp"
#include "zetatail/symbolic.hpp"

namespace zetatail {

struct CheckRecord {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double diff = 0.0;
    /// Tolerance plus both sides' error bounds.
    double bound = 0.0;
    bool pass = false;
};

CheckRecord make_check(std::string name, const EvalReport& lhs, const EvalReport& rhs, double tolerance);

enum class Suite { paper, random, all };

Suite parse_suite(const std::string& name);

/// Known closed forms of sum_n prod_j tail(i_j, n) for small integer exponent lists.
struct ClosedForm {
    std::vector<double> exponents;
    ZetaPolynomial value;
    double tolerance;
};
std::vector<ClosedForm> known_tail_sums();

/// Uniform doubles from the top 53 bits of std::mt19937_64, whose output sequence is
/// fixed by the standard (std::uniform_real_distribution is not).
class PortableRng {
public:
    explicit PortableRng(std::uint64_t seed) : engine_(seed) {}
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

/// Exponent lists with k in {2, 3}, entries in (1.2, 4) and sum > k + 1.
std::vector<std::vector<double>> random_exponent_lists(PortableRng& rng, int count);

/// Pairs (r, q) with 1.2 < r < 4 and 2.2 - r < q < 4.
std::vector<std::pair<double, double>> random_mzv_pairs(PortableRng& rng, int count);

/// Runs every check of the suite in a fixed order.
std::vector<CheckRecord> run_suite(Suite suite, std::uint64_t seed, double target_eps = kDefaultEps);

}  // namespace zetatail
