#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbitkit/symplectic.hpp"

namespace orbitkit {

using Json = nlohmann::json;

// Scalars: {"re": {"num": "..", "den": ".."}, "im": {...}}. On input a plain
// integer or a "p/q" string is also accepted for real values.
Json to_json(const GaussianRational& a);
GaussianRational scalar_from_json(const Json& j);

// Matrices: {"n": n, "entries": [[...], ...]} row-major.
Json to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j);

/// "i,j" with 0-based indices.
std::string root_key(const Root& a);
Root root_from_key(const std::string& key);

Json to_json(const ParabolicData& p, std::span<const WeylCoset> atlas);

/// {"sigma": [perm], "z": {"i,j": scalar}, "xi": {"i,j": scalar}}.
Json to_json(const ParabolicData& p, const ChartPoint& cp);
/// Missing coordinates default to zero; unknown keys or a perm outside the
/// atlas throw ParseError.
ChartPoint chart_point_from_json(const ParabolicData& p, std::span<const WeylCoset> atlas, const Json& j);

/// Coordinates over delta_u as a {"i,j": scalar} object.
Json coordinates_to_json(const ParabolicData& p, const std::vector<GaussianRational>& v);

/// {"F": matrix, "witness": matrix (optional)}.
Json to_json(const OrbitPoint& f);
OrbitPoint orbit_point_from_json(const Json& j);

Json to_json(const PullbackReport& r);

/// Parses "3,1,0" or "1/2,-1/2" into a weight; throws ParseError.
WeightLambda parse_lambda(const std::string& text);

}  // namespace orbitkit
