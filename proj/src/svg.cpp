#include "tropenum/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

namespace tropenum {

namespace {

std::string num(double v) {
  if (std::abs(v) < 5e-5) v = 0.0;  // no "-0.0000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

struct Xy {
  double x;
  double y;
};

}  // namespace

std::string render_svg(const CurveDocument& doc, const SvgOptions& opt) {
  std::vector<Xy> pos;
  pos.reserve(doc.vertices.size());
  for (const auto& v : doc.vertices) pos.push_back({v.x.convert_to<double>(), v.y.convert_to<double>()});

  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  if (!pos.empty()) {
    min_x = max_x = pos.front().x;
    min_y = max_y = pos.front().y;
    for (const auto& p : pos) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  min_x -= opt.ray_length;
  min_y -= opt.ray_length;
  max_x += opt.ray_length;
  max_y += opt.ray_length;

  const auto sx = [&](double x) { return num((x - min_x) * opt.scale); };
  const auto sy = [&](double y) { return num((max_y - y) * opt.scale); };
  const auto line = [&](Xy a, Xy b, std::int64_t weight, const char* cls) {
    return "    <line class=\"" + std::string(cls) + "\" x1=\"" + sx(a.x) + "\" y1=\"" + sy(a.y) +
           "\" x2=\"" + sx(b.x) + "\" y2=\"" + sy(b.y) + "\" stroke-width=\"" +
           num(opt.stroke_width * static_cast<double>(weight)) + "\"/>\n";
  };

  const double width = (max_x - min_x) * opt.scale;
  const double height = (max_y - min_y) * opt.scale;
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "  <g fill=\"none\" stroke=\"black\" stroke-linecap=\"round\">\n";
  for (const auto& e : doc.edges) out += line(pos[e.from], pos[e.to], e.weight, "edge");
  for (const auto& r : doc.rays) {
    const Xy base = pos[r.vertex];
    const double dx = static_cast<double>(r.dir.dx), dy = static_cast<double>(r.dir.dy);
    const double len = std::hypot(dx, dy);
    const Xy tip{base.x + opt.ray_length * dx / len, base.y + opt.ray_length * dy / len};
    out += line(base, tip, r.weight, "ray");
  }
  out += "  </g>\n";
  out += "  <g fill=\"black\">\n";
  for (const auto& p : pos)
    out += "    <circle cx=\"" + sx(p.x) + "\" cy=\"" + sy(p.y) + "\" r=\"" +
           num(opt.stroke_width * 1.5) + "\"/>\n";
  out += "  </g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace tropenum
