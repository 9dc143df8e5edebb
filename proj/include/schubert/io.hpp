#pragma once

// Structured-text (JSON) forms of flags, matrices and polynomial systems.
// Rationals travel as canonical "p/q" strings so round trips are bit-exact.

#include <json.hpp>
#include <string>

#include "schubert/certify.hpp"
#include "schubert/coordinates.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/solve.hpp"

namespace schubert {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

/// {"n": n, "basis": [[row strings]...]}
Json flag_to_json(const FlagMatrix& f);
FlagMatrix flag_from_json(const Json& j);

/// {"format", "kind", "variables": [{name, group}], "equations": [[["coef", [exps]], ...], ...]}
Json system_to_json(const PolySystem<Rational>& s);
PolySystem<Rational> system_from_json(const Json& j);

/// Decimal text with enough digits to round-trip a double.
std::string exact_decimal(double x);

/// {"format", "solutions": [{"path", "status", "residual", "iterations", "point": [["re", "im"], ...]}]}
Json solutions_to_json(const std::vector<TrackedSolution>& sols);
std::vector<TrackedSolution> solutions_from_json(const Json& j);

/// {"format", "certificates": [{"point", "alpha", "beta", "gamma", "certified", "real", "distinct_from"}]}
Json certificates_to_json(const std::vector<Certificate>& certs);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace schubert
