#include "tropenum/dualcurve.hpp"

#include <numeric>
#include <set>

#include "tropenum/errors.hpp"

namespace tropenum {

std::int64_t lattice_length(const Segment& s) {
  return std::gcd(s.b.i - s.a.i, s.b.j - s.a.j);
}

namespace {

Direction primitive(std::int64_t dx, std::int64_t dy) {
  const std::int64_t g = std::gcd(dx, dy);
  return g == 0 ? Direction{0, 0} : Direction{dx / g, dy / g};
}

// Outward normal of the counterclockwise side a -> b.
Direction outward_normal(LatticePoint a, LatticePoint b) {
  const LatticePoint e = b - a;
  return primitive(e.j, -e.i);
}

// The point where the three terms at a, b, c (non-collinear) are equal.
RationalPoint solve_equal_terms(const TropicalPolynomial& poly, LatticePoint a, LatticePoint b,
                                LatticePoint c) {
  const Rational& ca = poly.coefficient(a);
  const Rational r1 = ca - poly.coefficient(b);
  const Rational r2 = ca - poly.coefficient(c);
  const LatticePoint u = b - a;
  const LatticePoint w = c - a;
  const Rational det = cross(u, w);
  return {(r1 * w.j - r2 * u.j) / det, (r2 * u.i - r1 * w.i) / det};
}

void require_two_dimensional(const std::vector<LatticePoint>& hull) {
  if (hull.size() < 3)
    throw DegenerateSupport("Newton polygon has dimension " + std::to_string(hull.size() - 1) +
                            "; a plane curve needs a 2-dimensional support");
}

std::vector<std::pair<Cell, RationalPoint>> lifted_faces(const TropicalPolynomial& poly) {
  require_two_dimensional(newton_polygon(poly));
  const auto pts = poly.support();
  const std::size_t n = pts.size();

  // Keyed by the marked set so every face is found once and ordered stably.
  std::map<std::vector<LatticePoint>, RationalPoint> faces;
  // Membership masks of faces found so far; triples inside one are skipped.
  std::vector<std::vector<bool>> found;
  std::map<LatticePoint, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) index[pts[k]] = k;
  const auto covered = [&](std::size_t a, std::size_t b, std::size_t c) {
    for (const auto& mask : found)
      if (mask[a] && mask[b] && mask[c]) return true;
    return false;
  };

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        if (orient(pts[a], pts[b], pts[c]) == 0) continue;
        if (covered(a, b, c)) continue;
        const RationalPoint at = solve_equal_terms(poly, pts[a], pts[b], pts[c]);
        auto winners = poly.argmax_terms(at);
        if (!std::binary_search(winners.begin(), winners.end(), pts[a])) continue;
        std::vector<bool> mask(n, false);
        for (const auto& w : winners) mask[index[w]] = true;
        found.push_back(std::move(mask));
        faces.emplace(std::move(winners), at);
      }

  std::vector<std::pair<Cell, RationalPoint>> out;
  out.reserve(faces.size());
  for (auto& [marked, at] : faces) out.push_back({Cell{convex_hull(marked), marked}, at});
  return out;
}

Subdivision assemble(std::vector<Cell> cells, std::vector<LatticePoint> support) {
  std::map<Segment, std::vector<std::size_t>> incidence;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const auto& poly = cells[k].polygon;
    for (std::size_t s = 0; s < poly.size(); ++s)
      incidence[Segment(poly[s], poly[(s + 1) % poly.size()])].push_back(k);
  }
  Subdivision sub;
  sub.cells = std::move(cells);
  sub.support = std::move(support);
  for (auto& [seg, owners] : incidence) sub.edges.push_back({seg, std::move(owners)});
  return sub;
}

// Position of `seg` among the sides of `cell`; sides are numbered from polygon[0].
std::size_t side_index(const Cell& cell, const Segment& seg) {
  const auto& p = cell.polygon;
  for (std::size_t s = 0; s < p.size(); ++s)
    if (Segment(p[s], p[(s + 1) % p.size()]) == seg) return s;
  throw std::logic_error("segment is not a side of the cell");
}

// Outward normal of `seg` as a side of `cell`.
Direction outward_normal(const Cell& cell, const Segment& seg) {
  const auto& p = cell.polygon;
  const std::size_t s = side_index(cell, seg);
  return outward_normal(p[s], p[(s + 1) % p.size()]);
}

}  // namespace

Subdivision dual_subdivision(const TropicalPolynomial& poly) {
  std::vector<Cell> cells;
  for (auto& [cell, at] : lifted_faces(poly)) cells.push_back(std::move(cell));
  return assemble(std::move(cells), newton_polygon(poly));
}

TropicalCurve extract_curve(const TropicalPolynomial& poly) {
  auto faces = lifted_faces(poly);
  TropicalCurve curve;
  std::vector<Cell> cells;
  for (std::size_t k = 0; k < faces.size(); ++k) {
    curve.vertices.push_back({faces[k].second, k});
    cells.push_back(std::move(faces[k].first));
  }
  curve.subdivision = assemble(std::move(cells), newton_polygon(poly));

  const auto& sub = curve.subdivision;
  for (const auto& edge : sub.edges) {
    const std::int64_t weight = lattice_length(edge.segment);
    const std::size_t first = edge.cells.front();
    const Direction out = outward_normal(sub.cells[first], edge.segment);
    if (edge.cells.size() == 1) {
      curve.rays.push_back({first, out, weight, edge.segment});
    } else {
      curve.bounded_edges.push_back({first, edge.cells[1], weight, edge.segment, out});
    }
  }
  return curve;
}

std::vector<std::size_t> check_balancing(const TropicalCurve& curve) {
  std::vector<std::pair<std::int64_t, std::int64_t>> sum(curve.vertices.size(), {0, 0});
  const auto add = [&](std::size_t v, Direction d, std::int64_t w) {
    if (v >= sum.size()) return;
    sum[v].first += w * d.dx;
    sum[v].second += w * d.dy;
  };
  for (const auto& e : curve.bounded_edges) {
    add(e.from, e.direction, e.weight);
    add(e.to, Direction{-e.direction.dx, -e.direction.dy}, e.weight);
  }
  for (const auto& r : curve.rays) add(r.vertex, r.direction, r.weight);

  std::vector<std::size_t> bad;
  for (std::size_t v = 0; v < sum.size(); ++v)
    if (sum[v] != std::pair<std::int64_t, std::int64_t>{0, 0}) bad.push_back(v);
  return bad;
}

std::map<Direction, std::int64_t> ray_census(const TropicalCurve& curve) {
  std::map<Direction, std::int64_t> census;
  for (const auto& r : curve.rays) census[r.direction] += r.weight;
  return census;
}

int degree(const TropicalCurve& curve) {
  const auto census = ray_census(curve);
  for (const auto& [dir, w] : census)
    if (dir != kWest && dir != kSouth && dir != kNorthEast)
      throw NotStandardForm("ray direction (" + std::to_string(dir.dx) + "," +
                            std::to_string(dir.dy) + ") is not West, South or North East");
  const auto count = [&](Direction d) {
    const auto it = census.find(d);
    return it == census.end() ? std::int64_t{0} : it->second;
  };
  const std::int64_t w = count(kWest), s = count(kSouth), ne = count(kNorthEast);
  if (w != s || w != ne)
    throw Imbalanced("weighted ray counts differ: W=" + std::to_string(w) + " S=" +
                     std::to_string(s) + " NE=" + std::to_string(ne));
  return static_cast<int>(w);
}

bool is_triangle(const Cell& cell) { return cell.polygon.size() == 3; }

bool is_parallelogram(const Cell& cell) {
  const auto& p = cell.polygon;
  return p.size() == 4 && p[0] + p[2] == p[1] + p[3];
}

std::int64_t vertex_multiplicity(const TropicalCurve& curve, std::size_t vertex) {
  if (vertex >= curve.vertices.size()) throw NotTrivalent("vertex index out of range");
  const Cell& cell = curve.subdivision.cells[curve.vertices[vertex].cell];
  if (!is_triangle(cell))
    throw NotTrivalent("vertex " + std::to_string(vertex) + " is dual to a " +
                       std::to_string(cell.polygon.size()) + "-gon");
  return std::abs(doubled_area(cell.polygon));
}

std::size_t node_count(const TropicalCurve& curve) {
  std::size_t nodes = 0;
  for (const auto& v : curve.vertices)
    if (is_parallelogram(curve.subdivision.cells[v.cell])) ++nodes;
  return nodes;
}

bool is_simple(const TropicalCurve& curve) {
  for (const auto& cell : curve.subdivision.cells)
    if (!is_triangle(cell) && !is_parallelogram(cell)) return false;
  return true;
}

namespace {

void require_simple(const TropicalCurve& curve) {
  if (!is_simple(curve))
    throw NotSimple("curve has a vertex dual to a cell that is neither a triangle nor a "
                    "parallelogram");
}

}  // namespace

std::int64_t curve_multiplicity(const TropicalCurve& curve) {
  require_simple(curve);
  std::int64_t product = 1;
  for (std::size_t v = 0; v < curve.vertices.size(); ++v)
    if (is_triangle(curve.subdivision.cells[curve.vertices[v].cell]))
      product *= vertex_multiplicity(curve, v);
  return product;
}

int welschinger_sign(const TropicalCurve& curve) {
  require_simple(curve);
  std::int64_t interior = 0;
  for (const auto& cell : curve.subdivision.cells) {
    if (!is_triangle(cell)) continue;
    const auto& p = cell.polygon;
    if (std::abs(doubled_area(p)) % 2 == 0) return 0;
    interior += interior_points(p[0], p[1], p[2]);
  }
  return interior % 2 == 0 ? 1 : -1;
}

int betti1(const TropicalCurve& curve) {
  require_simple(curve);
  const auto& cells = curve.subdivision.cells;

  // Graph vertex ids: one per trivalent vertex, two per node (one per pair of
  // parallel sides).
  std::vector<std::size_t> first_id(curve.vertices.size());
  std::size_t ids = 0;
  for (std::size_t v = 0; v < curve.vertices.size(); ++v) {
    first_id[v] = ids;
    ids += is_parallelogram(cells[curve.vertices[v].cell]) ? 2 : 1;
  }
  const auto branch = [&](std::size_t v, const Segment& dual) {
    const Cell& cell = cells[curve.vertices[v].cell];
    if (!is_parallelogram(cell)) return first_id[v];
    return first_id[v] + side_index(cell, dual) % 2;
  };

  std::vector<std::size_t> parent(ids);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = ids;
  for (const auto& e : curve.bounded_edges) {
    const std::size_t a = find(branch(e.from, e.dual)), b = find(branch(e.to, e.dual));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  // Each ray adds one edge and one leaf, so it never changes E - V + C.
  return static_cast<int>(curve.bounded_edges.size()) - static_cast<int>(ids) +
         static_cast<int>(components);
}

bool is_rational(const TropicalCurve& curve) { return betti1(curve) == 0; }

bool membership_oracle(const TropicalPolynomial& poly, const RationalPoint& p) {
  return poly.argmax_terms(p).size() >= 2;
}

namespace {

// p on the closed segment from `base` along `dir` for parameter t in [0, limit]
// (no upper limit when `limit` is absent).
bool on_parametrized(const RationalPoint& base, Direction dir, const RationalPoint& p,
                     const std::optional<Rational>& limit) {
  const Rational rx = p.x - base.x, ry = p.y - base.y;
  if (rx * dir.dy != ry * dir.dx) return false;
  const Rational t = dir.dx != 0 ? rx / dir.dx : ry / dir.dy;
  return t >= 0 && (!limit || t <= *limit);
}

}  // namespace

bool lies_on_curve(const TropicalCurve& curve, const RationalPoint& p) {
  for (const auto& e : curve.bounded_edges) {
    const auto& from = curve.vertices[e.from].position;
    const auto& to = curve.vertices[e.to].position;
    const Rational span = e.direction.dx != 0 ? (to.x - from.x) / e.direction.dx
                                              : (to.y - from.y) / e.direction.dy;
    if (on_parametrized(from, e.direction, p, span)) return true;
  }
  for (const auto& r : curve.rays)
    if (on_parametrized(curve.vertices[r.vertex].position, r.direction, p, std::nullopt))
      return true;
  return false;
}

CurveStats curve_stats(const TropicalCurve& curve) {
  CurveStats stats;
  try {
    stats.degree = degree(curve);
  } catch (const NotStandardForm&) {
  } catch (const Imbalanced&) {
  }
  stats.nodes = node_count(curve);
  for (std::size_t v = 0; v < curve.vertices.size(); ++v)
    if (is_triangle(curve.subdivision.cells[curve.vertices[v].cell]))
      stats.trivalent_multiplicities.push_back(vertex_multiplicity(curve, v));
  if (is_simple(curve)) {
    stats.betti1 = betti1(curve);
    stats.welschinger_sign = welschinger_sign(curve);
  }
  return stats;
}

}  // namespace tropenum
