#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropenum/dualcurve.hpp"

namespace tropenum {

/// Serializable snapshot of an extracted curve and its statistics.
struct CurveDocument {
  struct Vertex {
    Rational x;
    Rational y;
    std::vector<LatticePoint> dual_cell;
    friend bool operator==(const Vertex&, const Vertex&) = default;
  };
  struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::int64_t weight = 1;
    std::array<LatticePoint, 2> dual;
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  struct RayEntry {
    std::size_t vertex = 0;
    Direction dir;
    std::int64_t weight = 1;
    std::array<LatticePoint, 2> dual;
    friend bool operator==(const RayEntry&, const RayEntry&) = default;
  };
  struct Stats {
    std::size_t nodes = 0;
    std::optional<int> betti1;
    std::optional<int> welschinger_sign;
    std::vector<std::int64_t> multiplicities;
    friend bool operator==(const Stats&, const Stats&) = default;
  };

  std::optional<int> degree;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<RayEntry> rays;
  Stats stats;

  friend bool operator==(const CurveDocument&, const CurveDocument&) = default;
};

CurveDocument make_document(const TropicalCurve& curve);

/// Key-sorted JSON, two-space indent, trailing newline.
std::string write_json(const CurveDocument& doc);

/// Parses and validates a document. Throws SyntaxError.
CurveDocument read_json(std::string_view text);

}  // namespace tropenum
