#pragma once

// Text and JSON forms of scalars, polynomials, point sets, Dh sequences,
// decompositions and rank certificates, plus ASCII Dh diagrams.
//
// Polynomial grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := int ['/' int] | '{m:' int '}(' zexpr ')' | var ['^' int]
//           | 'expand' '(' '(' expr ')' '^' int ')'
//   var    := x | y | z | x0 | x1 | ...     (upper case for dual forms)

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "waring/classify.hpp"

namespace waring {

using Json = nlohmann::ordered_json;

/// "p/q", "-3", "{m:3}(1 + 2*z)" or "{m:3} 1 + 2*z".
Cyclotomic parse_scalar(std::string_view text);
std::string format_scalar(const Cyclotomic& a);

/// nvars = 0 infers the count from the highest variable used (at least 2).
/// Upper-case variables give a dual form.
Form parse_poly(std::string_view text, int nvars = 0);
std::string format_poly(const Form& f);

/// Comma-separated coordinates, e.g. "1,1,0".
Point parse_point(std::string_view text);
std::vector<Cyclotomic> parse_scalar_list(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);

Json scalar_json(const Cyclotomic& a);
Cyclotomic scalar_from_json(const Json& j);

Json point_json(const Point& p);
Json pointset_json(const Points& x);
/// Accepts pointset-v1 objects or a bare array of points.
Points pointset_from_json(const Json& j);

Json dh_json(const DhSequence& dh);
Json resolution_json(const ResolutionDegrees& res);
Json decomposition_json(const Decomposition& dec);
Json certificate_json(const RankCertificate& cert);
Json error_json(const Error& e);

/// One column per degree, '#' per unit of height, bottom-aligned, with a
/// degree axis. With `inner`, cells below inner(t) are '#' and the rest of
/// `outer` is 'o'.
std::string render_dh(const DhSequence& outer, const std::optional<DhSequence>& inner = std::nullopt);

std::string join_ints(const std::vector<int>& v, std::string_view sep = " ");

}  // namespace waring
