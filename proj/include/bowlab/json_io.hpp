#pragma once

#include "bowlab/hilbert.hpp"
#include "bowlab/matrix.hpp"
#include "bowlab/shapes.hpp"

#include <json.hpp>

#include <stdexcept>

namespace bowlab {

using Json = nlohmann::json;

// Malformed JSON payloads (wrong type, missing key, bad encoding). Kept
// distinct from ValidationError so the CLI can map schema problems to usage
// errors and domain failures to validation failures.
class JsonSchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rationals encode as JSON integers when integral and within the int64
// range, otherwise as "p/q" strings. Input accepts integers and strings.
Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json rat_mat_to_json(const RatMat& m);
RatMat rat_mat_from_json(const Json& j);

// Polynomials encode as expression strings ("x^2 - 3*x + 1/2"); input also
// accepts an ascending coefficient array or a bare number/string constant.
Json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const Json& j);

Json poly_mat_to_json(const PolyMat& m);
PolyMat poly_mat_from_json(const Json& j);

Json mu_to_json(const Mu& mu);
Mu mu_from_json(const Json& j);

Json membership_report_to_json(const MembershipReport& rep);

// Presentation documents: {"gens": ["x1", ...], "rels": [[term, ...], ...]}
// where each term is {"coef": rational, "exps": [int per generator]}.
Presentation presentation_from_json(const Json& j);
Json presentation_to_json(const Presentation& pres);

} // namespace bowlab
