#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "tropenum/dualcurve.hpp"
#include "tropenum/errors.hpp"

using namespace tropenum;
using namespace tropenum::testing;

namespace {

using PointSet = std::vector<LatticePoint>;

std::set<PointSet> cell_sets(const Subdivision& sub, bool marked) {
  std::set<PointSet> out;
  for (const auto& cell : sub.cells) {
    PointSet s = marked ? cell.marked : cell.polygon;
    std::sort(s.begin(), s.end());
    out.insert(s);
  }
  return out;
}

TropicalPolynomial uniform(const PointSet& support) {
  std::vector<TropicalPolynomial::Term> terms;
  for (const auto& p : support) terms.emplace_back(p, Rational(0));
  return TropicalPolynomial(terms);
}

// Tropical product: exponents add, coefficients add, overlaps take the max.
TropicalPolynomial tropical_product(const TropicalPolynomial& f, const TropicalPolynomial& g) {
  std::map<LatticePoint, Rational> acc;
  for (const auto& [p, a] : f.terms())
    for (const auto& [q, b] : g.terms()) {
      const auto [it, fresh] = acc.emplace(p + q, a + b);
      if (!fresh && a + b > it->second) it->second = a + b;
    }
  return TropicalPolynomial(std::vector<TropicalPolynomial::Term>(acc.begin(), acc.end()));
}

std::int64_t total_doubled_area(const Subdivision& sub) {
  std::int64_t sum = 0;
  for (const auto& cell : sub.cells) sum += std::abs(doubled_area(cell.polygon));
  return sum;
}

}  // namespace

TEST_CASE("dual subdivision of the line and the four-triangle conic") {
  const auto line = dual_subdivision(line_polynomial());
  REQUIRE(line.cells.size() == 1);
  CHECK(line.cells[0].polygon == PointSet{{0, 0}, {1, 0}, {0, 1}});

  const auto conic = dual_subdivision(four_triangle_conic());
  const std::set<PointSet> expected{{{0, 0}, {0, 1}, {1, 0}},
                                    {{0, 1}, {1, 0}, {1, 1}},
                                    {{1, 0}, {1, 1}, {2, 0}},
                                    {{0, 1}, {0, 2}, {1, 1}}};
  CHECK(cell_sets(conic, false) == expected);
  CHECK(cell_sets(conic, true) == upper_hull_faces(four_triangle_conic()));
}

TEST_CASE("concave lift on T_3 is a unimodular triangulation") {
  const auto sub = dual_subdivision(concave_lift(3));
  CHECK(sub.cells.size() == 9);
  for (const auto& cell : sub.cells) {
    CHECK(cell.polygon.size() == 3);
    CHECK(std::abs(doubled_area(cell.polygon)) == 1);
  }
  CHECK(cell_sets(sub, true) == upper_hull_faces(concave_lift(3)));
}

TEST_CASE("degenerate supports are rejected") {
  CHECK_THROWS_AS(extract_curve(make_polynomial({{{0, 0}, 0}, {{1, 0}, 0}})), DegenerateSupport);
  CHECK_THROWS_AS(extract_curve(parse_expression("max(0, x)")), DegenerateSupport);
  CHECK_THROWS_AS(dual_subdivision(make_polynomial({{{2, 3}, 5}})), DegenerateSupport);
  CHECK_THROWS_AS(dual_subdivision(make_polynomial({{{0, 0}, 0}, {{1, 1}, 0}, {{2, 2}, 3}})),
                  DegenerateSupport);
}

TEST_CASE("curve of the tropical line") {
  const auto curve = extract_curve(line_polynomial());
  REQUIRE(curve.vertices.size() == 1);
  CHECK(curve.vertices[0].position == RationalPoint{0, 0});
  CHECK(curve.bounded_edges.empty());
  CHECK(ray_census(curve) == std::map<Direction, std::int64_t>{{kWest, 1}, {kSouth, 1}, {kNorthEast, 1}});
  CHECK(check_balancing(curve).empty());
  CHECK(degree(curve) == 1);
  CHECK(vertex_multiplicity(curve, 0) == 1);
  CHECK(node_count(curve) == 0);
  CHECK(is_simple(curve));
  CHECK(curve_multiplicity(curve) == 1);
  CHECK(welschinger_sign(curve) == 1);
  CHECK(is_rational(curve));
}

TEST_CASE("curve of the four-triangle conic") {
  const auto curve = extract_curve(four_triangle_conic());
  CHECK(curve.vertices.size() == 4);
  CHECK(curve.bounded_edges.size() == 3);
  CHECK(curve.rays.size() == 6);
  CHECK(ray_census(curve) == std::map<Direction, std::int64_t>{{kWest, 2}, {kSouth, 2}, {kNorthEast, 2}});
  CHECK(check_balancing(curve).empty());
  CHECK(degree(curve) == 2);
  CHECK(curve_multiplicity(curve) == 1);
  CHECK(betti1(curve) == 0);
  CHECK(is_rational(curve));
  for (const auto& e : curve.bounded_edges) CHECK(e.weight == 1);
}

TEST_CASE("single-cell quadratic has weight-2 rays") {
  const auto curve = extract_curve(uniform({{0, 0}, {2, 0}, {0, 2}}));
  REQUIRE(curve.vertices.size() == 1);
  CHECK(curve.vertices[0].position == RationalPoint{0, 0});
  CHECK(ray_census(curve) == std::map<Direction, std::int64_t>{{kWest, 2}, {kSouth, 2}, {kNorthEast, 2}});
  for (const auto& r : curve.rays) CHECK(r.weight == 2);
  CHECK(degree(curve) == 2);
  CHECK(vertex_multiplicity(curve, 0) == 4);
}

TEST_CASE("concave-lift cubic") {
  const auto curve = extract_curve(concave_lift(3));
  CHECK(curve.vertices.size() == 9);
  CHECK(curve.bounded_edges.size() == 9);
  CHECK(curve.rays.size() == 9);
  CHECK(degree(curve) == 3);
  CHECK(node_count(curve) == 0);
  CHECK(is_simple(curve));
  CHECK(betti1(curve) == 1);
  CHECK_FALSE(is_rational(curve));
  CHECK(welschinger_sign(curve) == 1);
}

TEST_CASE("vertex multiplicity and the Welschinger sign of single triangles") {
  const auto fat = extract_curve(uniform({{0, 0}, {2, 1}, {1, 2}}));
  CHECK(vertex_multiplicity(fat, 0) == 3);
  CHECK(curve_multiplicity(fat) == 3);
  CHECK(welschinger_sign(fat) == -1);
  CHECK_THROWS_AS(degree(fat), NotStandardForm);

  const auto even = extract_curve(uniform({{0, 0}, {1, 0}, {0, 2}}));
  CHECK(vertex_multiplicity(even, 0) == 2);
  CHECK(welschinger_sign(even) == 0);
}

TEST_CASE("product rule with one fat triangle") {
  const auto poly = make_polynomial(
      {{{0, 0}, 0}, {{2, 1}, 0}, {{1, 2}, 0}, {{1, 0}, -1}, {{0, 1}, -1}});
  const auto curve = extract_curve(poly);
  CHECK(cell_sets(curve.subdivision, true) == upper_hull_faces(poly));
  REQUIRE(curve.vertices.size() == 3);
  CHECK(check_balancing(curve).empty());
  CHECK(curve_multiplicity(curve) == 3);
  CHECK(welschinger_sign(curve) == -1);
}

TEST_CASE("non-simple curves") {
  const auto pentagon = extract_curve(uniform({{0, 0}, {1, 0}, {2, 1}, {1, 2}, {0, 1}}));
  CHECK(pentagon.subdivision.cells.size() == 1);
  CHECK(pentagon.subdivision.cells[0].polygon.size() == 5);
  CHECK(check_balancing(pentagon).empty());
  CHECK_FALSE(is_simple(pentagon));
  CHECK_THROWS_AS(curve_multiplicity(pentagon), NotSimple);
  CHECK_THROWS_AS(welschinger_sign(pentagon), NotSimple);
  CHECK_THROWS_AS(is_rational(pentagon), NotSimple);
  CHECK_THROWS_AS(vertex_multiplicity(pentagon, 0), NotTrivalent);
}

TEST_CASE("two crossing lines form a node") {
  const auto other = make_polynomial({{{0, 0}, 0}, {{1, 0}, 1}, {{0, 1}, -2}});
  const auto curve = extract_curve(tropical_product(line_polynomial(), other));
  CHECK(check_balancing(curve).empty());
  CHECK(node_count(curve) == 1);
  CHECK(is_simple(curve));
  CHECK(degree(curve) == 2);
  CHECK(curve_multiplicity(curve) == 1);
  // Two components, each a tree.
  CHECK(betti1(curve) == 0);
}

TEST_CASE("a line crossing a conic twice stays a forest after resolving nodes") {
  const auto shifted = make_polynomial({{{0, 0}, 0}, {{1, 0}, Rational(-3, 2)}, {{0, 1}, Rational(-1, 3)}});
  const auto curve = extract_curve(tropical_product(four_triangle_conic(), shifted));
  CHECK(check_balancing(curve).empty());
  CHECK(degree(curve) == 3);
  REQUIRE(is_simple(curve));
  CHECK(node_count(curve) == 2);
  // Without splitting nodes the crossing would close a cycle.
  CHECK(betti1(curve) == 0);
}

TEST_CASE("balancing reports tampered vertices") {
  auto curve = extract_curve(line_polynomial());
  curve.rays.pop_back();
  CHECK(check_balancing(curve) == std::vector<std::size_t>{0});

  auto extra = extract_curve(line_polynomial());
  extra.rays.push_back(extra.rays.front());
  CHECK_THROWS_AS(degree(extra), Imbalanced);
}

TEST_CASE("membership oracle on the line") {
  const auto line = line_polynomial();
  CHECK(membership_oracle(line, {0, 0}));
  CHECK_FALSE(membership_oracle(line, {5, -1}));
  CHECK(membership_oracle(line, {2, 2}));
  const auto curve = extract_curve(line);
  CHECK(lies_on_curve(curve, {2, 2}));
  CHECK(lies_on_curve(curve, {-7, 0}));
  CHECK_FALSE(lies_on_curve(curve, {5, -1}));
}

TEST_CASE("curve properties over random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + trial % 5;
    const auto poly = random_triangle_polynomial(rng, d);
    const auto curve = extract_curve(poly);
    const auto& sub = curve.subdivision;
    CAPTURE(render(poly));

    CHECK(cell_sets(sub, true) == upper_hull_faces(poly));
    CHECK(total_doubled_area(sub) == d * d);

    std::size_t interior_edges = 0;
    std::int64_t boundary_length = 0;
    for (const auto& e : sub.edges) {
      if (e.cells.size() == 2) ++interior_edges;
      else boundary_length += lattice_length(e.segment);
    }
    CHECK(curve.vertices.size() == sub.cells.size());
    CHECK(curve.bounded_edges.size() == interior_edges);
    std::int64_t ray_weight = 0;
    for (const auto& r : curve.rays) ray_weight += r.weight;
    CHECK(boundary_length == ray_weight);

    CHECK(check_balancing(curve).empty());
    CHECK(degree(curve) == d);

    for (const auto& e : curve.bounded_edges) {
      CHECK(e.weight == lattice_length(e.dual));
      const LatticePoint s = e.dual.b - e.dual.a;
      CHECK(e.direction.dx * s.i + e.direction.dy * s.j == 0);
      const auto& a = curve.vertices[e.from].position;
      const auto& b = curve.vertices[e.to].position;
      CHECK((b.x - a.x) * e.direction.dy == (b.y - a.y) * e.direction.dx);
      CHECK((b.x - a.x) * e.direction.dx + (b.y - a.y) * e.direction.dy > 0);
    }

    if (is_simple(curve)) {
      const int sign = welschinger_sign(curve);
      CHECK(std::abs(sign) <= 1);
      CHECK((curve_multiplicity(curve) - sign) % 2 == 0);
    }

    const auto shifted = extract_curve(poly.translated(Rational(17, 3)));
    CHECK(cell_sets(shifted.subdivision, true) == cell_sets(sub, true));
    REQUIRE(shifted.vertices.size() == curve.vertices.size());
    for (std::size_t v = 0; v < curve.vertices.size(); ++v)
      CHECK(shifted.vertices[v].position == curve.vertices[v].position);

    for (const auto& p : points_on_curve(curve, rng, 40)) {
      CHECK(membership_oracle(poly, p));
      CHECK(lies_on_curve(curve, p));
    }
    for (int k = 0; k < 40; ++k) {
      const RationalPoint p{random_rational(rng, 60, 11), random_rational(rng, 60, 11)};
      CHECK(membership_oracle(poly, p) == lies_on_curve(curve, p));
    }
  }
}
