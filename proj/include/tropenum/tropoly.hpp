#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropenum/rational.hpp"

namespace tropenum {

struct LatticePoint {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.i + b.i, a.j + b.j}; }
  friend LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.i - b.i, a.j - b.j}; }
};

/// z-component of the planar cross product.
inline std::int64_t cross(LatticePoint a, LatticePoint b) { return a.i * b.j - a.j * b.i; }

/// Orientation of (a, b, c): positive for a left turn.
inline std::int64_t orient(LatticePoint a, LatticePoint b, LatticePoint c) {
  return cross(b - a, c - a);
}

std::string to_string(LatticePoint p);

/// A point of the real plane with exact coordinates.
struct RationalPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// Max-plus polynomial max_{(i,j)} (i*x + j*y + c_ij) over a finite support.
class TropicalPolynomial {
 public:
  using Term = std::pair<LatticePoint, Rational>;

  /// Throws EmptySupport or DuplicateTerm; duplicates are never merged.
  explicit TropicalPolynomial(const std::vector<Term>& terms);

  const std::map<LatticePoint, Rational>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  std::vector<LatticePoint> support() const;
  const Rational& coefficient(LatticePoint p) const { return terms_.at(p); }

  Rational evaluate(const Rational& x, const Rational& y) const;
  Rational evaluate(const RationalPoint& p) const { return evaluate(p.x, p.y); }

  /// Every support point whose affine term attains the maximum, sorted.
  std::vector<LatticePoint> argmax_terms(const Rational& x, const Rational& y) const;
  std::vector<LatticePoint> argmax_terms(const RationalPoint& p) const {
    return argmax_terms(p.x, p.y);
  }

  /// Same support, every coefficient shifted by `k`.
  TropicalPolynomial translated(const Rational& k) const;

  friend bool operator==(const TropicalPolynomial&, const TropicalPolynomial&) = default;

 private:
  std::map<LatticePoint, Rational> terms_;
};

TropicalPolynomial make_polynomial(const std::vector<TropicalPolynomial::Term>& terms);

/// Term-table text: one `i j c` per line, `#` comments and blank lines skipped.
TropicalPolynomial parse_term_table(std::string_view text);

/// `max(term, term, ...)` with affine terms in x and y.
TropicalPolynomial parse_expression(std::string_view text);

/// Term table sorted by (i, j); lines joined by '\n' without a trailing newline.
std::string render(const TropicalPolynomial& poly);

/// Convex hull of the points, counterclockwise from the lexicographically
/// smallest one. Collinear boundary points are dropped; the result may be a
/// single point or a segment.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points);

std::vector<LatticePoint> newton_polygon(const TropicalPolynomial& poly);

/// d when the Newton polygon is the triangle (0,0), (d,0), (0,d).
std::optional<int> standard_degree(const TropicalPolynomial& poly);

/// Interior lattice points of a lattice triangle, by Pick's theorem.
std::int64_t interior_points(LatticePoint a, LatticePoint b, LatticePoint c);

/// Twice the signed area of a closed polygon given by its vertices.
std::int64_t doubled_area(const std::vector<LatticePoint>& polygon);

}  // namespace tropenum
