#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tropenum/tropoly.hpp"

namespace tropenum {

/// Lattice segment with endpoints stored in sorted order.
struct Segment {
  LatticePoint a;
  LatticePoint b;

  Segment() = default;
  Segment(LatticePoint p, LatticePoint q) : a(std::min(p, q)), b(std::max(p, q)) {}

  friend auto operator<=>(const Segment&, const Segment&) = default;
};

/// Number of primitive lattice steps on the segment.
std::int64_t lattice_length(const Segment& s);

/// Integer direction with coprime components.
struct Direction {
  std::int64_t dx = 0;
  std::int64_t dy = 0;

  friend auto operator<=>(const Direction&, const Direction&) = default;
};

inline constexpr Direction kWest{-1, 0};
inline constexpr Direction kSouth{0, -1};
inline constexpr Direction kNorthEast{1, 1};

struct Cell {
  std::vector<LatticePoint> polygon;  ///< convex, counterclockwise
  std::vector<LatticePoint> marked;   ///< every support point on the lifted face
};

struct SubdivisionEdge {
  Segment segment;
  std::vector<std::size_t> cells;  ///< one cell on the boundary, two inside
};

/// Regular subdivision of the Newton polygon induced by the coefficients.
struct Subdivision {
  std::vector<Cell> cells;
  std::vector<SubdivisionEdge> edges;
  std::vector<LatticePoint> support;  ///< Newton polygon
};

/// Throws DegenerateSupport when the Newton polygon is not 2-dimensional.
Subdivision dual_subdivision(const TropicalPolynomial& poly);

struct CurveVertex {
  RationalPoint position;
  std::size_t cell = 0;
};

struct BoundedEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::int64_t weight = 1;
  Segment dual;
  Direction direction;  ///< primitive, pointing from `from` to `to`
};

struct Ray {
  std::size_t vertex = 0;
  Direction direction;
  std::int64_t weight = 1;
  Segment dual;
};

struct TropicalCurve {
  Subdivision subdivision;
  std::vector<CurveVertex> vertices;
  std::vector<BoundedEdge> bounded_edges;
  std::vector<Ray> rays;
};

/// Corner locus of `poly` with weights and dual cells.
TropicalCurve extract_curve(const TropicalPolynomial& poly);

/// Indices of vertices where the weighted outgoing directions do not sum to zero.
std::vector<std::size_t> check_balancing(const TropicalCurve& curve);

/// Weighted count of West rays; all rays must be W, S or NE with equal totals.
int degree(const TropicalCurve& curve);

std::map<Direction, std::int64_t> ray_census(const TropicalCurve& curve);

/// Normalized area of the dual triangle. Throws NotTrivalent.
std::int64_t vertex_multiplicity(const TropicalCurve& curve, std::size_t vertex);

bool is_triangle(const Cell& cell);
bool is_parallelogram(const Cell& cell);

std::size_t node_count(const TropicalCurve& curve);
bool is_simple(const TropicalCurve& curve);

/// Product of trivalent multiplicities. Throws NotSimple.
std::int64_t curve_multiplicity(const TropicalCurve& curve);

/// 0 if some trivalent vertex has even multiplicity, otherwise the parity of
/// interior lattice points over all dual triangles. Throws NotSimple.
int welschinger_sign(const TropicalCurve& curve);

/// First Betti number of the parameterizing graph, with nodes resolved into
/// two crossing branches. Throws NotSimple.
int betti1(const TropicalCurve& curve);
bool is_rational(const TropicalCurve& curve);

/// True iff the maximum is attained at least twice at `p`.
bool membership_oracle(const TropicalPolynomial& poly, const RationalPoint& p);

/// Exact test of `p` against the extracted vertices, edges and rays.
bool lies_on_curve(const TropicalCurve& curve, const RationalPoint& p);

struct CurveStats {
  std::optional<int> degree;
  std::size_t nodes = 0;
  std::vector<std::int64_t> trivalent_multiplicities;
  std::optional<int> betti1;            ///< absent when the curve is not simple
  std::optional<int> welschinger_sign;  ///< absent when the curve is not simple
};

CurveStats curve_stats(const TropicalCurve& curve);

}  // namespace tropenum
