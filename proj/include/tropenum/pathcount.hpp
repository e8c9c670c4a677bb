#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <tuple>
#include <string>
#include <unordered_map>
#include <vector>

#include "tropenum/rational.hpp"
#include "tropenum/tropoly.hpp"

namespace tropenum {

/// Generic linear functionals used to order the triangle's lattice points.
enum class LambdaPreset {
  XMinusEpsY,  ///< x ascending, then y descending
  RowMajor,    ///< (d+1)x + y ascending
};

/// The lattice points of T_d = {x, y >= 0, x + y <= d} in lambda order.
class PathDomain {
 public:
  PathDomain(int d, LambdaPreset preset);

  int degree() const noexcept { return d_; }
  LambdaPreset preset() const noexcept { return preset_; }
  const std::vector<LatticePoint>& points() const noexcept { return points_; }
  LatticePoint p() const { return points_.front(); }
  LatticePoint q() const { return points_.back(); }

  bool contains(LatticePoint v) const { return v.i >= 0 && v.j >= 0 && v.i + v.j <= d_; }
  /// Position in lambda order; -1 outside the triangle.
  int rank(LatticePoint v) const;

  /// Steps of a top-level path: 3d - 1.
  int path_steps() const noexcept { return 3 * d_ - 1; }

  /// Boundary arc from p to q through every lattice point on it, on the left
  /// (`left` = true) or right of travel.
  std::vector<LatticePoint> boundary_arc(bool left) const;

 private:
  int d_;
  LambdaPreset preset_;
  std::vector<LatticePoint> points_;
  std::vector<int> rank_;  // indexed by i * (d+1) + j
};

PathDomain lambda_order(int d, LambdaPreset preset);

using LatticePath = std::vector<LatticePoint>;

/// Calls `visit` on every strictly lambda-increasing path from p to q with
/// `steps` steps, in lexicographic order of lambda ranks.
void enumerate_paths(const PathDomain& domain, int steps,
                     const std::function<void(const LatticePath&)>& visit);

/// Top-level enumeration: 3d - 1 steps.
void enumerate_paths(const PathDomain& domain,
                     const std::function<void(const LatticePath&)>& visit);

/// Census without materializing paths.
std::uint64_t count_paths(const PathDomain& domain, int steps);
std::uint64_t count_paths(const PathDomain& domain);

enum class Side {
  Plus,   ///< boundary arc to the left of travel from p to q
  Minus,  ///< boundary arc to the right
};

enum class MultiplicityKind { Complex, Welschinger };

struct MultiplicityResult {
  std::int64_t mu_plus = 0;
  std::int64_t mu_minus = 0;
  std::int64_t mu = 0;
  std::int64_t nu_plus = 0;
  std::int64_t nu_minus = 0;
  std::int64_t nu = 0;
};

/// Memoized evaluator of the corner-cutting recursion for one domain. Not
/// thread-safe; use one per worker.
class MultiplicityEngine {
 public:
  explicit MultiplicityEngine(PathDomain domain);

  const PathDomain& domain() const noexcept { return domain_; }

  /// Throws InvalidPath unless `path` runs from p to q, strictly lambda
  /// increasing, inside the triangle.
  void validate(const LatticePath& path) const;

  std::int64_t side(const LatticePath& path, Side side, MultiplicityKind kind);

  /// Same recursion with the side given directly as a turn orientation.
  std::int64_t oriented(const LatticePath& path, bool toward_left, MultiplicityKind kind);

  MultiplicityResult multiplicity(const LatticePath& path);

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  std::int64_t divide(std::vector<std::uint16_t>& ranks, bool left, MultiplicityKind kind);

  PathDomain domain_;
  std::vector<std::uint16_t> left_arc_;
  std::vector<std::uint16_t> right_arc_;
  std::unordered_map<std::string, std::int64_t> memo_;
};

std::int64_t side_multiplicity(const LatticePath& path, const PathDomain& domain, Side side,
                               MultiplicityKind kind);
MultiplicityResult path_multiplicity(const LatticePath& path, const PathDomain& domain);

struct PathTotals {
  std::uint64_t paths = 0;
  BigInt mu = 0;
  BigInt nu = 0;
};

/// Sums mu and nu over all paths with `steps` steps. `workers` > 1 splits the
/// enumeration by stride; the sums do not depend on the split.
PathTotals path_totals_with_steps(int d, LambdaPreset preset, int steps, unsigned workers = 1);

/// Raw sums over the top-level (3d - 1 step) paths.
PathTotals path_totals(int d, LambdaPreset preset, unsigned workers = 1);

/// Curve counts through n generic points derived from lattice paths.
///
/// The weighted sum over paths with n steps counts every curve of degree d
/// through n points whose components have total Euler characteristic
/// 2 - 2g with n = 3d - 1 + g, reducible ones included. Irreducible counts
/// follow by peeling off the component through the first point:
///
///   all(d, n) = sum over (d1, n1) of C(n-1, n1-1) * irr(d1, n1) * all(d-d1, n-n1)
///
/// with all(0, 0) = 1.
class CurveCounter {
 public:
  explicit CurveCounter(LambdaPreset preset = LambdaPreset::XMinusEpsY, unsigned workers = 1);

  /// Weighted path sum, reducible curves included. Zero when no path exists.
  BigInt all_curves(int d, int points, MultiplicityKind kind);

  BigInt irreducible(int d, int points, MultiplicityKind kind);

 private:
  const PathTotals& totals(int d, int points);

  LambdaPreset preset_;
  unsigned workers_;
  std::map<std::pair<int, int>, PathTotals> totals_;
  std::map<std::tuple<int, int, bool>, BigInt> irreducible_;
};

/// Irreducible rational curves of degree d through 3d - 1 points.
BigInt count_gw(int d, LambdaPreset preset = LambdaPreset::XMinusEpsY, unsigned workers = 1);

/// Signed count of real rational curves of degree d through 3d - 1 real points.
BigInt count_welschinger(int d, LambdaPreset preset = LambdaPreset::XMinusEpsY,
                         unsigned workers = 1);

}  // namespace tropenum
