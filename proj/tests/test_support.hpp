// Shared generators and oracles for the test suites. Nothing here calls into
// the code paths it is used to check.
#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <vector>

#include "tropenum/dualcurve.hpp"
#include "tropenum/tropoly.hpp"

namespace tropenum::testing {

inline Rational random_rational(std::mt19937_64& rng, int num_range, int den_max) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_max);
  return Rational(num(rng), den(rng));
}

/// Support inside T_d containing the three corners, random coefficients.
inline TropicalPolynomial random_triangle_polynomial(std::mt19937_64& rng, int d,
                                                     double keep = 0.7) {
  std::bernoulli_distribution take(keep);
  std::vector<TropicalPolynomial::Term> terms;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) {
      const bool corner = (i == 0 && j == 0) || (i == d && j == 0) || (i == 0 && j == d);
      if (corner || take(rng)) terms.emplace_back(LatticePoint{i, j}, random_rational(rng, 30, 7));
    }
  return TropicalPolynomial(terms);
}

/// Full support of T_d with lift -(i^2 + ij + j^2): strictly concave, dual to
/// the unimodular triangulation by the directions (1,0), (0,1), (1,-1).
inline TropicalPolynomial concave_lift(int d) {
  std::vector<TropicalPolynomial::Term> terms;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) terms.emplace_back(LatticePoint{i, j}, Rational(-(i * i + i * j + j * j)));
  return TropicalPolynomial(terms);
}

inline TropicalPolynomial line_polynomial() {
  return TropicalPolynomial({{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 0}});
}

inline TropicalPolynomial four_triangle_conic() {
  return TropicalPolynomial({{{0, 0}, 0},
                             {{1, 0}, -1},
                             {{0, 1}, -1},
                             {{2, 0}, -4},
                             {{1, 1}, -3},
                             {{0, 2}, -4}});
}

/// Upper faces of the lifted point set (i, j, c_ij), by brute force over
/// triples with a 3D orientation test. Each face is returned as the sorted
/// set of support points lying on it.
inline std::set<std::vector<LatticePoint>> upper_hull_faces(const TropicalPolynomial& poly) {
  struct P3 {
    LatticePoint p;
    Rational x, y, z;
  };
  std::vector<P3> pts;
  for (const auto& [p, c] : poly.terms()) pts.push_back({p, Rational(p.i), Rational(p.j), c});

  std::set<std::vector<LatticePoint>> faces;
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const Rational ux = pts[b].x - pts[a].x, uy = pts[b].y - pts[a].y, uz = pts[b].z - pts[a].z;
        const Rational vx = pts[c].x - pts[a].x, vy = pts[c].y - pts[a].y, vz = pts[c].z - pts[a].z;
        Rational nx = uy * vz - uz * vy, ny = uz * vx - ux * vz, nz = ux * vy - uy * vx;
        if (nz == 0) continue;  // vertical plane: collinear projection
        if (nz < 0) {
          nx = -nx;
          ny = -ny;
          nz = -nz;
        }
        std::vector<LatticePoint> on;
        bool upper = true;
        for (const auto& r : pts) {
          const Rational s = nx * (r.x - pts[a].x) + ny * (r.y - pts[a].y) + nz * (r.z - pts[a].z);
          if (s > 0) {
            upper = false;
            break;
          }
          if (s == 0) on.push_back(r.p);
        }
        if (upper) {
          std::sort(on.begin(), on.end());
          faces.insert(on);
        }
      }
  return faces;
}

/// Exact sample points on the extracted curve: vertices, interior points of
/// bounded edges and points along rays.
inline std::vector<RationalPoint> points_on_curve(const TropicalCurve& curve, std::mt19937_64& rng,
                                                  std::size_t count) {
  std::vector<RationalPoint> out;
  const std::size_t pieces = curve.bounded_edges.size() + curve.rays.size() + curve.vertices.size();
  std::uniform_int_distribution<std::size_t> pick(0, pieces - 1);
  std::uniform_int_distribution<int> num(0, 97);
  while (out.size() < count) {
    std::size_t k = pick(rng);
    if (k < curve.bounded_edges.size()) {
      const auto& e = curve.bounded_edges[k];
      const auto& a = curve.vertices[e.from].position;
      const auto& b = curve.vertices[e.to].position;
      const Rational t(num(rng), 97);
      out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
      continue;
    }
    k -= curve.bounded_edges.size();
    if (k < curve.rays.size()) {
      const auto& r = curve.rays[k];
      const auto& a = curve.vertices[r.vertex].position;
      const Rational t(num(rng), 13);
      out.push_back({a.x + t * r.direction.dx, a.y + t * r.direction.dy});
      continue;
    }
    out.push_back(curve.vertices[k - curve.rays.size()].position);
  }
  return out;
}

}  // namespace tropenum::testing
