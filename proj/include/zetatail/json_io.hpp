#pragma once

#include <json.hpp>

#include "zetatail/symbolic.hpp"
#include "zetatail/tails.hpp"

namespace zetatail {

using Json = nlohmann::ordered_json;

/// {"terms":[{"coeff":"a/b","monomial":[...]}]}
Json to_json(const ZetaPolynomial& poly);
ZetaPolynomial zeta_polynomial_from_json(const Json& j);

/// {"k":k,"terms":[{"coeff":"a/b","blocks":[[...]],"offset_last":true}],"product_coeff":"-1"}
Json to_json(const TailFormula& formula);
TailFormula tail_formula_from_json(const Json& j);

}  // namespace zetatail
