#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "zetatail/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = zetatail::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

void check_round_trip(const std::string& text) {
    const auto parsed = nlohmann::ordered_json::parse(text);
    CHECK(parsed.dump(2) + "\n" == text);
}

double field(const std::string& text, const std::string& key) {
    std::istringstream is(text);
    std::string name;
    double value = 0.0;
    while (is >> name) {
        if (name == key) {
            is >> value;
            return value;
        }
        is.ignore(1 << 20, '\n');
    }
    FAIL("missing field " << key);
    return 0.0;
}

}  // namespace

TEST_CASE("dual") {
    const auto r = run({"dual", "--args", "2,1,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "2,3\n");
    const auto j = run({"dual", "--args", "3", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out)["dual"] == nlohmann::json::array({2, 1}));
    check_round_trip(j.out);
    CHECK(run({"dual", "--args", "1,2"}).code == 2);
}

TEST_CASE("zeta and mzv") {
    const auto z = run({"zeta", "--args", "2"});
    CHECK(z.code == 0);
    CHECK(std::fabs(field(z.out, "value") - 1.6449340668482264) <= field(z.out, "error_bound"));
    CHECK(field(z.out, "error_bound") <= 1e-9);

    const auto m = run({"mzv", "--args", "2,1", "--format", "json", "--eps", "1e-11"});
    CHECK(m.code == 0);
    const auto j = nlohmann::json::parse(m.out);
    CHECK(j["value"].get<double>() == doctest::Approx(1.2020569031595942).epsilon(1e-12));
    CHECK(j["abs_error_bound"].get<double>() <= 1e-11);
    check_round_trip(m.out);

    const auto csv = run({"mzv", "--args", "3,1", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("value,abs_error_bound,terms_used\n", 0) == 0);
}

TEST_CASE("tail-sum with the oracle") {
    const auto r = run({"tail-sum", "--exponents", "2,2", "--brute"});
    CHECK(r.code == 0);
    const double value = field(r.out, "value");
    const double brute = field(r.out, "brute");
    CHECK(value == doctest::Approx(0.90036262520093738).epsilon(1e-10));
    CHECK(brute == doctest::Approx(0.90036262520093738).epsilon(1e-10));
    CHECK(field(r.out, "diff") <= field(r.out, "error_bound") + field(r.out, "brute_error_bound"));

    const auto j = run({"tail-sum", "--exponents", "3,2.5,2", "--brute", "--format", "json", "--eps", "1e-7"});
    CHECK(j.code == 0);
    check_round_trip(j.out);
}

TEST_CASE("formula") {
    const auto text = run({"formula", "--exponents", "p,q"});
    CHECK(text.code == 0);
    CHECK(text.out == "zeta(p,q-1) + zeta(q,p-1) + zeta(p+q-1) - zeta(p)*zeta(q)\n");

    const auto j = run({"formula", "--exponents", "p,q,r", "--format", "json"});
    CHECK(j.code == 0);
    const auto parsed = nlohmann::ordered_json::parse(j.out);
    CHECK(parsed["k"] == 3);
    CHECK(parsed["terms"].size() == 13);
    CHECK(parsed["product_coeff"] == "-1");
    check_round_trip(j.out);

    const auto numeric = run({"formula", "--exponents", "2,2", "--format", "csv"});
    CHECK(numeric.code == 0);
    CHECK(numeric.out.rfind("coeff,blocks,offset_last\n", 0) == 0);

    CHECK(run({"formula", "--exponents", "1.5,1.4"}).code == 2);
    CHECK(run({"formula", "--exponents", "p,2+"}).code == 64);
}

TEST_CASE("reduce") {
    const auto r = run({"reduce", "--args", "3,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "3*zeta(2)*zeta(3) - 11/2*zeta(5)\n");
    CHECK(run({"reduce", "--args", "2,1"}).out == "zeta(3)\n");
    const auto j = run({"reduce", "--args", "5,4", "--format", "json"});
    CHECK(j.code == 0);
    check_round_trip(j.out);
    CHECK(run({"reduce", "--args", "2,2"}).code == 2);
    CHECK(run({"reduce", "--args", "2.5,2"}).code == 64);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 64);
    CHECK(run({"bogus"}).code == 64);
    CHECK(run({"zeta", "--args", "2", "--format", "xml"}).code == 64);
    CHECK(run({"zeta", "--args", "2", "--eps", "-1"}).code == 64);
    CHECK(run({"zeta", "--args", "abc"}).code == 64);
    CHECK(run({"zeta"}).code == 64);
    CHECK(run({"zeta", "--args", "1"}).code == 2);
    CHECK(run({"mzv", "--args", "1,2"}).code == 2);
    CHECK(run({"mzv", "--args", "2,1,1,1,1"}).code == 2);
    CHECK(run({"zeta", "--args", "2", "--eps", "1e-18"}).code == 3);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify is deterministic") {
    const auto a = run({"verify", "--suite", "paper"});
    const auto b = run({"verify", "--suite", "paper"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("FAIL") == std::string::npos);

    const auto j = run({"verify", "--suite", "random", "--seed", "5", "--format", "json"});
    CHECK(j.code == 0);
    const auto parsed = nlohmann::ordered_json::parse(j.out);
    CHECK(parsed["failures"] == 0);
    CHECK(parsed["checks"].size() == 70);
    check_round_trip(j.out);
    CHECK(run({"verify", "--suite", "random", "--seed", "5", "--format", "json"}).out == j.out);

    CHECK(run({"verify", "--suite", "nope"}).code == 64);
}
