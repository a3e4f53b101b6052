#pragma once

#include <json.hpp>

#include "abcalc/fresco.hpp"
#include "abcalc/gaussmanin.hpp"
#include "abcalc/poles.hpp"
#include "abcalc/saturation.hpp"

namespace abcalc {

// Insertion-ordered JSON keeps command output byte-deterministic.
using Json = nlohmann::ordered_json;

// {"lambdas": ["2","1"], "series": [["1","1/2"]]}; every series coefficient
// list starts at b^0 and must begin with "1".
FrescoPresentation presentation_from_json(const Json& j);
Json presentation_to_json(const FrescoPresentation& p);

// {"rank": r, "precision": O, "a_matrix": [[["0","1"], ...], ...]} row-major,
// each entry a coefficient list from b^0 upward.
AbModulePresentation abmodule_from_json(const Json& j);
Json abmodule_to_json(const AbModulePresentation& m);

// {"monomials": [[1,2,0,0], ...], "coefficients": ["1", ...],
//  "distinguished": [1,1,1,1], "form": [0,0,0,0]}; all but "monomials"
// optional.
MonomialInput monomial_input_from_json(const Json& j);

Json recurrence_result_to_json(const RecurrenceResult& r);

// {"q": 1, "cap": 4, "xi_class": "-7/10",
//  "family": {"0": [{"loc": "-7/10", "ord": 2, "exact": true}]}}
LedgerFamily family_from_json(const Json& j);
Json family_to_json(const LedgerFamily& f);

struct LedgerScriptOp {
  enum class Kind { A, B, Linear, Series } kind;
  Rational lambda0;
  TruncatedSeries series{1};
};

// Ordered list of {"op": "a" | "b"} | {"op": "linear", "lambda0": "7/10"} |
// {"op": "series", "coeffs": ["1","1"]}.
std::vector<LedgerScriptOp> script_from_json(const Json& j);

Json verdict_to_json(const GeometricVerdict& v);

// {"coefficients": [...ascending...], "rendered": "(x + 1)^2"}
Json polynomial_to_json(const Polynomial& p);

Json saturation_result_to_json(const SaturationResult& r);

Json series_to_json(const TruncatedSeries& s);

}  // namespace abcalc
