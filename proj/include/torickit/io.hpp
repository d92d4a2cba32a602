#pragma once

#include "torickit/fan.hpp"
#include "torickit/holmap.hpp"

#include <string>

#include "json.hpp"

namespace torickit {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// On-disk fan: {"schema_version", "name", "dimension", "generators",
/// "maximal_cones"}, with 1-based ray indices in "maximal_cones".
struct FanDocument {
    std::string name;
    Fan fan;
};

/// Throws ParseError on malformed input.
FanDocument parse_fan_document(const std::string& text);
Json fan_to_json(const Fan& f, const std::string& name = {});

/// {"schema_version", "polynomials": [{"coefficients": [c_0, ..., c_{d-1}]}]}
/// where each c_j is ["p/q", "p/q*i"] (or a single string such as "1/2-3*i")
/// and the leading 1 is implicit.
PolyTuple parse_poly_tuple(const std::string& text);
Json poly_tuple_to_json(const PolyTuple& t);

Json coefficient_to_json(const GaussianRational& c);
GaussianRational coefficient_from_json(const Json& j);
Json polynomial_to_json(const Polynomial& p);

Json integer_to_json(const Integer& x);
Json int_vector_to_json(const IntVector& v);
/// 1-based index list.
Json index_set_to_json(IndexSet s);

}  // namespace torickit
