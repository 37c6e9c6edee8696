#include "zetatail/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "zetatail/errors.hpp"
#include "zetatail/json_io.hpp"
#include "zetatail/numerics.hpp"
#include "zetatail/symbolic.hpp"
#include "zetatail/tails.hpp"
#include "zetatail/verify.hpp"

namespace zetatail::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

std::string value_str(double v) { return fmt("%.17g", v); }
std::string bound_str(double v) { return fmt("%.3e", v); }

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) {
            throw UsageError("empty entry in list '" + text + "'");
        }
        out.push_back(item);
    }
    if (out.empty()) {
        throw UsageError("list must be nonempty");
    }
    return out;
}

bool parse_real(const std::string& token, double& value) {
    try {
        std::size_t used = 0;
        value = std::stod(token, &used);
        return used == token.size() && std::isfinite(value);
    } catch (const std::exception&) {
        return false;
    }
}

std::vector<double> reals(const std::string& text, const char* flag) {
    if (text.empty()) {
        throw UsageError(std::string(flag) + " is required");
    }
    std::vector<double> out;
    for (const auto& token : split(text)) {
        double v = 0.0;
        if (!parse_real(token, v)) {
            throw UsageError("not a real number: '" + token + "'");
        }
        out.push_back(v);
    }
    return out;
}

std::vector<int> integers(const std::string& text, const char* flag) {
    std::vector<int> out;
    for (double v : reals(text, flag)) {
        if (v != std::floor(v) || std::fabs(v) > 1e6) {
            throw UsageError(std::string(flag) + " needs integers");
        }
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? "," : "") + std::to_string(values[i]);
    }
    return out;
}

Json report_json(const EvalReport& r) {
    return Json{{"value", r.value}, {"abs_error_bound", r.abs_error_bound}, {"terms_used", r.terms_used}};
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void print_report(std::ostream& out, Format format, const std::string& command, const std::vector<double>& args,
                  const EvalReport& r) {
    switch (format) {
        case Format::text:
            out << "value " << value_str(r.value) << "\nerror_bound " << bound_str(r.abs_error_bound) << '\n';
            break;
        case Format::json: {
            Json j{{"command", command}, {"args", args}};
            j.update(report_json(r));
            print_json(out, j);
            break;
        }
        case Format::csv:
            out << "value,abs_error_bound,terms_used\n"
                << value_str(r.value) << ',' << bound_str(r.abs_error_bound) << ',' << r.terms_used << '\n';
            break;
    }
}

int cmd_zeta(const RunConfig& cfg, std::ostream& out) {
    const auto args = reals(cfg.args.empty() ? cfg.exponents : cfg.args, "--args");
    if (args.size() != 1) {
        throw UsageError("zeta takes a single argument");
    }
    print_report(out, cfg.format, "zeta", args, zeta(args[0], cfg.eps));
    return 0;
}

int cmd_mzv(const RunConfig& cfg, std::ostream& out) {
    const auto args = reals(cfg.args.empty() ? cfg.exponents : cfg.args, "--args");
    print_report(out, cfg.format, "mzv", args, mzv(MzvIndex{args}, cfg.eps));
    return 0;
}

int cmd_tail_sum(const RunConfig& cfg, std::ostream& out) {
    const auto exps_v = reals(cfg.exponents.empty() ? cfg.args : cfg.exponents, "--exponents");
    const ExponentList exps(exps_v);
    const EvalReport value = evaluate_formula(tail_product_formula(exps), exps, cfg.eps);
    if (!cfg.brute) {
        print_report(out, cfg.format, "tail-sum", exps_v, value);
        return 0;
    }
    const EvalReport oracle = brute_tail_product_sum(exps, cfg.eps);
    const double diff = std::fabs(value.value - oracle.value);
    switch (cfg.format) {
        case Format::text:
            out << "value " << value_str(value.value) << "\nerror_bound " << bound_str(value.abs_error_bound)
                << "\nbrute " << value_str(oracle.value) << "\nbrute_error_bound " << bound_str(oracle.abs_error_bound)
                << "\ndiff " << bound_str(diff) << '\n';
            break;
        case Format::json: {
            Json j{{"command", "tail-sum"}, {"args", exps_v}};
            j.update(report_json(value));
            j["brute"] = report_json(oracle);
            j["diff"] = diff;
            print_json(out, j);
            break;
        }
        case Format::csv:
            out << "value,abs_error_bound,brute,brute_abs_error_bound,diff\n"
                << value_str(value.value) << ',' << bound_str(value.abs_error_bound) << ','
                << value_str(oracle.value) << ',' << bound_str(oracle.abs_error_bound) << ',' << bound_str(diff)
                << '\n';
            break;
    }
    return 0;
}

std::string coeff_prefix(const Rational& c) {
    return c == 1 ? "" : to_string(c) + "*";
}

std::string block_text(const BlockTerm& term, const std::vector<std::string>& names) {
    std::string out = "zeta(";
    for (std::size_t b = 0; b < term.blocks.size(); ++b) {
        out += b ? "," : "";
        for (std::size_t i = 0; i < term.blocks[b].size(); ++i) {
            out += (i ? "+" : "") + names[static_cast<std::size_t>(term.blocks[b][i] - 1)];
        }
        if (term.last_offset && b + 1 == term.blocks.size()) {
            out += "-1";
        }
    }
    return out + ")";
}

std::string product_text(const TailFormula& f, const std::vector<std::string>& names) {
    std::string out = "- ";
    if (f.product_coeff != -1) {
        out = (f.product_coeff < 0 ? "- " : "+ ") + coeff_prefix(abs(f.product_coeff));
    }
    for (std::size_t j = 0; j < names.size(); ++j) {
        out += (j ? "*" : "") + ("zeta(" + names[j] + ")");
    }
    return out;
}

int cmd_formula(const RunConfig& cfg, std::ostream& out) {
    const auto tokens = split(cfg.exponents.empty() ? cfg.args : cfg.exponents);
    static const std::regex symbol("[A-Za-z_][A-Za-z0-9_]*");
    std::vector<double> values;
    bool numeric = true;
    for (const auto& t : tokens) {
        double v = 0.0;
        if (parse_real(t, v)) {
            values.push_back(v);
        } else if (std::regex_match(t, symbol)) {
            numeric = false;
        } else {
            throw UsageError("exponent must be a number or a symbol name: '" + t + "'");
        }
    }
    const TailFormula f = numeric ? tail_product_formula(ExponentList(values))
                                  : tail_product_formula_symbolic(static_cast<int>(tokens.size()));

    switch (cfg.format) {
        case Format::text: {
            std::string line;
            for (const auto& term : f.zeta_terms) {
                line += (line.empty() ? "" : " + ") + coeff_prefix(term.coeff) + block_text(term, tokens);
            }
            out << line << ' ' << product_text(f, tokens) << '\n';
            break;
        }
        case Format::json:
            print_json(out, to_json(f));
            break;
        case Format::csv:
            out << "coeff,blocks,offset_last\n";
            for (const auto& term : f.zeta_terms) {
                std::string blocks;
                for (std::size_t b = 0; b < term.blocks.size(); ++b) {
                    blocks += (b ? "|" : "") + join_ints(term.blocks[b]);
                }
                out << to_string(term.coeff) << ",\"" << blocks << "\"," << (term.last_offset ? "true" : "false")
                    << '\n';
            }
            out << to_string(f.product_coeff) << ",product,false\n";
            break;
    }
    return 0;
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out) {
    const auto args = integers(cfg.args.empty() ? cfg.exponents : cfg.args, "--args");
    if (args.size() != 2) {
        throw UsageError("reduce takes two arguments m,n");
    }
    const ZetaPolynomial p = args[1] == 1 ? reduce_n1(args[0]) : reduce_double_odd(args[0], args[1]);
    switch (cfg.format) {
        case Format::text:
            out << p.to_string() << '\n';
            break;
        case Format::json:
            print_json(out, to_json(p));
            break;
        case Format::csv:
            out << "coeff,monomial\n";
            for (const auto& [m, c] : p.terms()) {
                out << to_string(c) << ",\"" << join_ints(m) << "\"\n";
            }
            break;
    }
    return 0;
}

int cmd_dual(const RunConfig& cfg, std::ostream& out) {
    const IntegerIndex index(integers(cfg.args.empty() ? cfg.exponents : cfg.args, "--args"));
    const IntegerIndex dual = duality(index);
    if (cfg.format == Format::json) {
        print_json(out, Json{{"args", index.args()}, {"dual", dual.args()}});
    } else {
        out << dual.to_string() << '\n';
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto records = run_suite(parse_suite(cfg.suite), cfg.seed, cfg.eps);
    const auto failures = std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.pass; });
    switch (cfg.format) {
        case Format::text: {
            std::size_t width = 4;
            for (const auto& r : records) {
                width = std::max(width, r.name.size());
            }
            char line[512];
            std::snprintf(line, sizeof line, "%-*s  %23s  %23s  %10s  %10s  %s\n", static_cast<int>(width), "name",
                          "lhs", "rhs", "|diff|", "bound", "result");
            out << line;
            for (const auto& r : records) {
                std::snprintf(line, sizeof line, "%-*s  %23.17g  %23.17g  %10.3e  %10.3e  %s\n",
                              static_cast<int>(width), r.name.c_str(), r.lhs, r.rhs, r.diff, r.bound,
                              r.pass ? "pass" : "FAIL");
                out << line;
            }
            out << records.size() - static_cast<std::size_t>(failures) << '/' << records.size() << " checks passed\n";
            break;
        }
        case Format::json: {
            Json checks = Json::array();
            for (const auto& r : records) {
                checks.push_back(Json{{"name", r.name},
                                      {"lhs", r.lhs},
                                      {"rhs", r.rhs},
                                      {"diff", r.diff},
                                      {"bound", r.bound},
                                      {"pass", r.pass}});
            }
            print_json(out, Json{{"suite", cfg.suite}, {"seed", cfg.seed}, {"checks", checks}, {"failures", failures}});
            break;
        }
        case Format::csv:
            out << "name,lhs,rhs,diff,bound,pass\n";
            for (const auto& r : records) {
                out << '"' << r.name << "\"," << value_str(r.lhs) << ',' << value_str(r.rhs) << ','
                    << bound_str(r.diff) << ',' << bound_str(r.bound) << ',' << (r.pass ? "true" : "false") << '\n';
            }
            break;
    }
    return failures == 0 ? 0 : static_cast<int>(ExitCode::check_failed);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Multiple zeta values and sums of products of zeta tails", "zetatail"};
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
    const std::vector<std::pair<std::string, std::string>> commands{
        {"zeta", "Riemann zeta at a real argument"},
        {"mzv", "multiple zeta value with real arguments"},
        {"tail-sum", "sum over n of a product of zeta tails"},
        {"formula", "grouped-zeta expansion of a tail product sum"},
        {"reduce", "double zeta value as a polynomial in single zetas"},
        {"dual", "dual index of an admissible integer index"},
        {"verify", "run a verification suite"},
    };
    for (const auto& [name, description] : commands) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->add_option("--exponents", cfg.exponents, "comma-separated exponents");
        sub->add_option("--args", cfg.args, "comma-separated arguments");
        sub->add_option("--eps", cfg.eps, "absolute error target")->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "text, json or csv")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_flag("--brute", cfg.brute, "also evaluate the direct-summation oracle");
        sub->add_option("--suite", cfg.suite, "paper, random or all")
            ->check(CLI::IsMember({"paper", "random", "all"}));
        sub->add_option("--seed", cfg.seed, "random suite seed");
        sub->callback([&cfg, name = name] { cfg.command = name; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
    }

    try {
        if (cfg.command == "zeta") return cmd_zeta(cfg, out);
        if (cfg.command == "mzv") return cmd_mzv(cfg, out);
        if (cfg.command == "tail-sum") return cmd_tail_sum(cfg, out);
        if (cfg.command == "formula") return cmd_formula(cfg, out);
        if (cfg.command == "reduce") return cmd_reduce(cfg, out);
        if (cfg.command == "dual") return cmd_dual(cfg, out);
        if (cfg.command == "verify") return cmd_verify(cfg, out);
        throw UsageError("unknown command");
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return static_cast<int>(ExitCode::usage);
    } catch (const PrecisionError& e) {
        err << "precision error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::precision);
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::domain);
    } catch (const BoundError& e) {
        err << "domain error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::domain);
    }
}

}  // namespace zetatail::cli
