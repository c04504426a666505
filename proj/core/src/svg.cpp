#include "stabkit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace stabkit {

namespace {

constexpr double kCanvas = 760.0;
constexpr double kMargin = 20.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const GeometricGraph& g,
                       const std::optional<Bipartition>& overlay) {
  const PointSet& ps = g.points();
  std::int64_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  if (ps.size() > 0) {
    min_x = max_x = ps[0].x;
    min_y = max_y = ps[0].y;
    for (int i = 1; i < ps.size(); ++i) {
      min_x = std::min(min_x, ps[i].x);
      max_x = std::max(max_x, ps[i].x);
      min_y = std::min(min_y, ps[i].y);
      max_y = std::max(max_y, ps[i].y);
    }
  }
  const double span = static_cast<double>(
      std::max<std::int64_t>({max_x - min_x, max_y - min_y, 1}));
  const double scale = kCanvas / span;
  // SVG y grows downward; flip so the drawing matches plane coordinates.
  auto sx = [&](double x) { return kMargin + (x - min_x) * scale; };
  auto sy = [&](double y) { return kMargin + (max_y - y) * scale; };

  const double width = kMargin * 2 + (max_x - min_x) * scale;
  const double height = kMargin * 2 + (max_y - min_y) * scale;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fmt(width) + "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " +
         fmt(width) + " " + fmt(height) + "\">\n";

  for (const Edge& e : g.edges()) {
    svg += "  <line x1=\"" + fmt(sx(ps[e.u].x)) + "\" y1=\"" +
           fmt(sy(ps[e.u].y)) + "\" x2=\"" + fmt(sx(ps[e.v].x)) + "\" y2=\"" +
           fmt(sy(ps[e.v].y)) + "\" stroke=\"#1f4e79\" stroke-width=\"1.5\"/>\n";
  }

  if (overlay.has_value() && ps.size() >= 2) {
    // Closest pair across the two sides; the separating line is drawn
    // through its midpoint, perpendicular to it.
    const std::vector<int> a = overlay->side_a_indices();
    const std::vector<int> b = overlay->side_b_indices();
    long double best = std::numeric_limits<long double>::max();
    int ba = a.empty() ? -1 : a[0];
    int bb = b.empty() ? -1 : b[0];
    for (int i : a) {
      for (int j : b) {
        const long double dx = static_cast<long double>(ps[i].x - ps[j].x);
        const long double dy = static_cast<long double>(ps[i].y - ps[j].y);
        const long double d2 = dx * dx + dy * dy;
        if (d2 < best) {
          best = d2;
          ba = i;
          bb = j;
        }
      }
    }
    if (ba >= 0 && bb >= 0) {
      const double mx = (static_cast<double>(ps[ba].x) + ps[bb].x) / 2.0;
      const double my = (static_cast<double>(ps[ba].y) + ps[bb].y) / 2.0;
      double dx = static_cast<double>(ps[bb].x) - ps[ba].x;
      double dy = static_cast<double>(ps[bb].y) - ps[ba].y;
      const double len = std::max(1.0, std::hypot(dx, dy));
      // Perpendicular direction, stretched across the whole drawing.
      const double px = -dy / len;
      const double py = dx / len;
      const double reach = span * 2.0;
      svg += "  <line x1=\"" + fmt(sx(mx - px * reach)) + "\" y1=\"" +
             fmt(sy(my - py * reach)) + "\" x2=\"" + fmt(sx(mx + px * reach)) +
             "\" y2=\"" + fmt(sy(my + py * reach)) +
             "\" stroke=\"#c00000\" stroke-width=\"1.2\" "
             "stroke-dasharray=\"6,4\"/>\n";
    }
  }

  for (int i = 0; i < ps.size(); ++i) {
    const std::string cx = fmt(sx(ps[i].x));
    const std::string cy = fmt(sy(ps[i].y));
    svg += "  <circle cx=\"" + cx + "\" cy=\"" + cy +
           "\" r=\"4\" fill=\"#202020\"/>\n";
    svg += "  <text x=\"" + fmt(sx(ps[i].x) + 6.0) + "\" y=\"" +
           fmt(sy(ps[i].y) - 6.0) + "\" font-size=\"12\" fill=\"#202020\">" +
           std::to_string(i) + "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

void write_svg_file(const std::string& path, const GeometricGraph& g,
                    const std::optional<Bipartition>& overlay) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << render_svg(g, overlay);
}

}  // namespace stabkit
