#include "zetatail/json_io.hpp"

#include "zetatail/errors.hpp"

namespace zetatail {

Json to_json(const ZetaPolynomial& poly) {
    Json terms = Json::array();
    for (const auto& [monomial, coeff] : poly.terms()) {
        terms.push_back(Json{{"coeff", to_string(coeff)}, {"monomial", monomial}});
    }
    return Json{{"terms", std::move(terms)}};
}

ZetaPolynomial zeta_polynomial_from_json(const Json& j) {
    ZetaPolynomial poly;
    try {
        for (const auto& term : j.at("terms")) {
            poly.add_term(term.at("monomial").get<Monomial>(), parse_rational(term.at("coeff").get<std::string>()));
        }
    } catch (const Json::exception& e) {
        throw DomainError(std::string("malformed zeta polynomial JSON: ") + e.what());
    }
    return poly;
}

Json to_json(const TailFormula& formula) {
    Json terms = Json::array();
    for (const auto& term : formula.zeta_terms) {
        terms.push_back(Json{{"coeff", to_string(term.coeff)},
                             {"blocks", term.blocks},
                             {"offset_last", term.last_offset}});
    }
    return Json{{"k", formula.k}, {"terms", std::move(terms)}, {"product_coeff", to_string(formula.product_coeff)}};
}

TailFormula tail_formula_from_json(const Json& j) {
    TailFormula formula;
    try {
        formula.k = j.at("k").get<int>();
        for (const auto& term : j.at("terms")) {
            BlockTerm t;
            t.coeff = parse_rational(term.at("coeff").get<std::string>());
            t.blocks = term.at("blocks").get<std::vector<std::vector<int>>>();
            t.last_offset = term.at("offset_last").get<bool>();
            formula.zeta_terms.push_back(std::move(t));
        }
        formula.product_coeff = parse_rational(j.at("product_coeff").get<std::string>());
    } catch (const Json::exception& e) {
        throw DomainError(std::string("malformed tail formula JSON: ") + e.what());
    }
    return formula;
}

}  // namespace zetatail
