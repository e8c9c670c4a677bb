#include "tropenum/curve_document.hpp"

#include <numeric>

#include "json.hpp"

#include "tropenum/errors.hpp"

namespace tropenum {

using nlohmann::json;

CurveDocument make_document(const TropicalCurve& curve) {
  CurveDocument doc;
  const CurveStats stats = curve_stats(curve);
  doc.degree = stats.degree;
  for (const auto& v : curve.vertices)
    doc.vertices.push_back(
        {v.position.x, v.position.y, curve.subdivision.cells[v.cell].polygon});
  for (const auto& e : curve.bounded_edges)
    doc.edges.push_back({e.from, e.to, e.weight, {e.dual.a, e.dual.b}});
  for (const auto& r : curve.rays)
    doc.rays.push_back({r.vertex, r.direction, r.weight, {r.dual.a, r.dual.b}});
  doc.stats.nodes = stats.nodes;
  doc.stats.betti1 = stats.betti1;
  doc.stats.welschinger_sign = stats.welschinger_sign;
  doc.stats.multiplicities = stats.trivalent_multiplicities;
  return doc;
}

namespace {

json point_json(LatticePoint p) { return json::array({p.i, p.j}); }

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string write_json(const CurveDocument& doc) {
  json root = json::object();
  root["degree"] = optional_json(doc.degree);

  json vertices = json::array();
  for (const auto& v : doc.vertices) {
    json cell = json::array();
    for (const auto& p : v.dual_cell) cell.push_back(point_json(p));
    vertices.push_back({{"dual_cell", cell}, {"x", to_string(v.x)}, {"y", to_string(v.y)}});
  }
  root["vertices"] = std::move(vertices);

  json edges = json::array();
  for (const auto& e : doc.edges)
    edges.push_back({{"dual", {point_json(e.dual[0]), point_json(e.dual[1])}},
                     {"from", e.from},
                     {"to", e.to},
                     {"weight", e.weight}});
  root["edges"] = std::move(edges);

  json rays = json::array();
  for (const auto& r : doc.rays)
    rays.push_back({{"dir", {r.dir.dx, r.dir.dy}},
                    {"dual", {point_json(r.dual[0]), point_json(r.dual[1])}},
                    {"vertex", r.vertex},
                    {"weight", r.weight}});
  root["rays"] = std::move(rays);

  root["stats"] = {{"betti1", optional_json(doc.stats.betti1)},
                   {"multiplicities", doc.stats.multiplicities},
                   {"nodes", doc.stats.nodes},
                   {"welschinger_sign", optional_json(doc.stats.welschinger_sign)}};
  return root.dump(2) + "\n";
}

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw SyntaxError("invalid curve document: " + what);
}

LatticePoint read_point(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    bad("lattice point must be [i, j]");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

std::array<LatticePoint, 2> read_segment(const json& j) {
  if (!j.is_array() || j.size() != 2) bad("dual segment must hold two points");
  return {read_point(j[0]), read_point(j[1])};
}

template <typename T>
T read_number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) bad(std::string("missing integer '") + key + "'");
  return j.at(key).get<T>();
}

template <typename T>
std::optional<T> read_optional(const json& j, const char* key) {
  if (!j.contains(key)) bad(std::string("missing '") + key + "'");
  if (j.at(key).is_null()) return std::nullopt;
  return read_number<T>(j, key);
}

Rational read_rational(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) bad(std::string("missing rational '") + key + "'");
  return parse_rational(j.at(key).get<std::string>());
}

}  // namespace

CurveDocument read_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) bad("top level must be an object");
  for (const char* key : {"vertices", "edges", "rays"})
    if (!root.contains(key) || !root.at(key).is_array()) bad(std::string("missing array '") + key + "'");
  if (!root.contains("stats") || !root.at("stats").is_object()) bad("missing 'stats'");

  CurveDocument doc;
  doc.degree = read_optional<int>(root, "degree");
  for (const auto& v : root.at("vertices")) {
    CurveDocument::Vertex vertex{read_rational(v, "x"), read_rational(v, "y"), {}};
    if (!v.contains("dual_cell") || !v.at("dual_cell").is_array()) bad("missing 'dual_cell'");
    for (const auto& p : v.at("dual_cell")) vertex.dual_cell.push_back(read_point(p));
    doc.vertices.push_back(std::move(vertex));
  }
  const auto index_ok = [&](std::size_t i) { return i < doc.vertices.size(); };
  for (const auto& e : root.at("edges")) {
    CurveDocument::Edge edge{read_number<std::size_t>(e, "from"), read_number<std::size_t>(e, "to"),
                             read_number<std::int64_t>(e, "weight"),
                             read_segment(e.value("dual", json()))};
    if (!index_ok(edge.from) || !index_ok(edge.to)) bad("edge vertex index out of range");
    if (edge.weight < 1) bad("edge weight must be positive");
    doc.edges.push_back(edge);
  }
  for (const auto& r : root.at("rays")) {
    const auto dir = r.value("dir", json());
    if (!dir.is_array() || dir.size() != 2 || !dir[0].is_number_integer() || !dir[1].is_number_integer())
      bad("ray direction must be [a, b]");
    CurveDocument::RayEntry ray{read_number<std::size_t>(r, "vertex"),
                                {dir[0].get<std::int64_t>(), dir[1].get<std::int64_t>()},
                                read_number<std::int64_t>(r, "weight"),
                                read_segment(r.value("dual", json()))};
    if (!index_ok(ray.vertex)) bad("ray vertex index out of range");
    if (ray.weight < 1) bad("ray weight must be positive");
    if (std::gcd(ray.dir.dx, ray.dir.dy) != 1) bad("ray direction must be primitive");
    doc.rays.push_back(ray);
  }
  const json& stats = root.at("stats");
  doc.stats.nodes = read_number<std::size_t>(stats, "nodes");
  doc.stats.betti1 = read_optional<int>(stats, "betti1");
  doc.stats.welschinger_sign = read_optional<int>(stats, "welschinger_sign");
  if (!stats.contains("multiplicities") || !stats.at("multiplicities").is_array())
    bad("missing 'multiplicities'");
  for (const auto& m : stats.at("multiplicities")) {
    if (!m.is_number_integer()) bad("multiplicities must be integers");
    doc.stats.multiplicities.push_back(m.get<std::int64_t>());
  }
  return doc;
}

}  // namespace tropenum
