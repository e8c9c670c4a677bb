#pragma once

#include <string>

#include "tropenum/curve_document.hpp"

namespace tropenum {

struct SvgOptions {
  double ray_length = 2.0;   ///< truncation of rays, in curve units
  double scale = 40.0;       ///< pixels per curve unit
  double stroke_width = 1.5; ///< per unit of weight
};

/// Standalone SVG drawing of the curve; screen y points down, so curve y is
/// flipped here. Identical inputs produce identical bytes.
std::string render_svg(const CurveDocument& doc, const SvgOptions& options = {});

}  // namespace tropenum
