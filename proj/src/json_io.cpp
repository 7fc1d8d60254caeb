#include "orbitkit/json_io.hpp"

#include <sstream>

namespace orbitkit {

namespace {

Json rational_to_json(const mpq_class& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

std::string integer_field(const Json& part, const char* key) {
  if (!part.is_object() || !part.contains(key)) {
    throw Error(ErrorCode::kParseError, std::string("scalar part needs \"") + key + "\"");
  }
  const Json& v = part.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error(ErrorCode::kParseError, std::string("\"") + key + "\" must be an integer string");
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kParseError, what);
}

}  // namespace

Json to_json(const GaussianRational& a) { return {{"re", rational_to_json(a.re())}, {"im", rational_to_json(a.im())}}; }

GaussianRational scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return GaussianRational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return GaussianRational::parse_rational(j.get<std::string>());
  require(j.is_object() && j.contains("re"), "scalar must be an object with \"re\" and \"im\"");
  const Json& re = j.at("re");
  std::string im_num = "0";
  std::string im_den = "1";
  if (j.contains("im")) {
    im_num = integer_field(j.at("im"), "num");
    im_den = integer_field(j.at("im"), "den");
  }
  return GaussianRational::from_parts(integer_field(re, "num"), integer_field(re, "den"), im_num, im_den);
}

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.rows()}, {"entries", std::move(rows)}};
}

QMatrix matrix_from_json(const Json& j) {
  require(j.is_object() && j.contains("entries"), "matrix needs \"entries\"");
  const Json& rows = j.at("entries");
  require(rows.is_array() && !rows.empty(), "\"entries\" must be a non-empty array of rows");
  const std::size_t n = rows.size();
  if (j.contains("n")) require(j.at("n").is_number_integer() && j.at("n").get<std::size_t>() == n, "\"n\" disagrees with entries");
  QMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    require(rows[r].is_array() && rows[r].size() == n, "matrix must be square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar_from_json(rows[r][c]);
  }
  return m;
}

std::string root_key(const Root& a) { return std::to_string(a.i) + "," + std::to_string(a.j); }

Root root_from_key(const std::string& key) {
  std::istringstream in(key);
  Root a{};
  char comma = 0;
  require(static_cast<bool>(in >> a.i >> comma >> a.j) && comma == ',' && in.peek() == EOF,
          "coordinate key must look like \"i,j\": " + key);
  return a;
}

Json to_json(const ParabolicData& p, std::span<const WeylCoset> atlas) {
  Json lambda = Json::array();
  for (const auto& v : p.lambda) lambda.push_back(to_json(v));
  Json roots = Json::array();
  for (const Root& a : p.delta_u) roots.push_back({a.i, a.j});
  Json cosets = Json::array();
  for (const WeylCoset& c : atlas) cosets.push_back(c.perm());
  return {{"lambda", lambda}, {"blocks", p.block_sizes}, {"delta_u", roots}, {"cosets", cosets}};
}

Json coordinates_to_json(const ParabolicData& p, const std::vector<GaussianRational>& v) {
  if (v.size() != p.dim()) throw Error(ErrorCode::kDimensionMismatch, "coordinate count != |delta(u)|");
  Json out = Json::object();
  for (std::size_t k = 0; k < p.dim(); ++k) out[root_key(p.delta_u[k])] = to_json(v[k]);
  return out;
}

Json to_json(const ParabolicData& p, const ChartPoint& cp) {
  return {{"sigma", cp.sigma.perm()}, {"z", coordinates_to_json(p, cp.z)}, {"xi", coordinates_to_json(p, cp.xi)}};
}

namespace {

std::vector<GaussianRational> coordinates_from_json(const ParabolicData& p, const Json& j, const char* name) {
  std::vector<GaussianRational> v(p.dim());
  if (j.is_null()) return v;
  require(j.is_object(), std::string("\"") + name + "\" must be an object keyed by \"i,j\"");
  for (const auto& [key, value] : j.items()) {
    auto idx = p.index_of(root_from_key(key));
    require(idx.has_value(), std::string("\"") + name + "\" key " + key + " is not a root of u");
    v[*idx] = scalar_from_json(value);
  }
  return v;
}

}  // namespace

ChartPoint chart_point_from_json(const ParabolicData& p, std::span<const WeylCoset> atlas, const Json& j) {
  require(j.is_object(), "chart point must be an object");
  std::vector<int> perm;
  if (j.contains("sigma")) {
    require(j.at("sigma").is_array(), "\"sigma\" must be a permutation array");
    perm = j.at("sigma").get<std::vector<int>>();
  } else {
    perm.resize(p.n());
    for (std::size_t k = 0; k < p.n(); ++k) perm[k] = static_cast<int>(k);
  }
  const WeylCoset* sigma = nullptr;
  for (const WeylCoset& c : atlas) {
    if (c.perm() == perm) sigma = &c;
  }
  require(sigma != nullptr, "\"sigma\" is not a minimal coset representative of this atlas");
  return {*sigma, coordinates_from_json(p, j.value("z", Json()), "z"),
          coordinates_from_json(p, j.value("xi", Json()), "xi")};
}

Json to_json(const OrbitPoint& f) {
  Json out{{"F", to_json(f.f)}};
  if (f.witness) out["witness"] = to_json(*f.witness);
  return out;
}

OrbitPoint orbit_point_from_json(const Json& j) {
  require(j.is_object() && j.contains("F"), "orbit point needs \"F\"");
  OrbitPoint f{matrix_from_json(j.at("F")), std::nullopt};
  if (j.contains("witness")) f.witness = matrix_from_json(j.at("witness"));
  return f;
}

Json to_json(const PullbackReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"a", f.a}, {"b", f.b}, {"lhs", to_json(f.lhs)}, {"rhs", to_json(f.rhs)}});
  }
  return {{"pairs_checked", r.pairs_checked}, {"failures", failures}};
}

WeightLambda parse_lambda(const std::string& text) {
  WeightLambda w;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::size_t b = item.find_first_not_of(" \t");
    std::size_t e = item.find_last_not_of(" \t");
    require(b != std::string::npos, "empty entry in lambda");
    w.values.push_back(GaussianRational::parse_rational(item.substr(b, e - b + 1)));
  }
  require(!w.values.empty(), "lambda is empty");
  return w;
}

}  // namespace orbitkit
