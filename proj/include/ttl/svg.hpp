#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ttl/thrackle.hpp"

namespace ttl {

namespace detail {

// Fixed-point decimal with two places, rounded half up, computed exactly.
// Floating point never enters, so output bytes depend only on the input.
inline std::string svg_decimal(const Rat& q) {
  Int n = rat_floor(q * 100 + Rat(1, 2));
  bool neg = n < 0;
  Int a = neg ? Int(-n) : n;
  Int whole = a / 100;
  std::string frac = Int(a % 100).str();
  if (frac.size() < 2) frac.insert(frac.begin(), 2 - frac.size(), '0');
  return (neg ? "-" : "") + whole.str() + "." + frac;
}

struct Viewport {
  Rat scale, x_shift, y_shift;  // screen = shift + scale * model, y negated

  std::pair<std::string, std::string> map(const Point& p) const {
    return {svg_decimal(x_shift + scale * p[0]), svg_decimal(y_shift - scale * p[1])};
  }
};

inline Viewport fit_viewport(const std::vector<Point>& pts, const Rat& view, const Rat& margin) {
  Rat xmin = pts[0][0], xmax = xmin, ymin = pts[0][1], ymax = ymin;
  for (const auto& p : pts) {
    if (p[0] < xmin) xmin = p[0];
    if (p[0] > xmax) xmax = p[0];
    if (p[1] < ymin) ymin = p[1];
    if (p[1] > ymax) ymax = p[1];
  }
  Rat width = xmax - xmin, height = ymax - ymin;
  Rat side = width > height ? width : height;
  if (side == 0) side = 1;
  Viewport vp;
  vp.scale = (view - 2 * margin) / side;
  // center each axis inside the square canvas
  vp.x_shift = (view - vp.scale * (xmin + xmax)) / 2;
  vp.y_shift = (view + vp.scale * (ymin + ymax)) / 2;
  return vp;
}

// Cyclic order around an interior reference point, exact sign comparisons only.
inline std::vector<Point> convex_cycle(std::vector<Point> pts) {
  Rat cx = 0, cy = 0;
  for (const auto& p : pts) {
    cx += p[0];
    cy += p[1];
  }
  cx /= int(pts.size());
  cy /= int(pts.size());
  auto half = [&](const Point& p) {
    Rat dy = p[1] - cy;
    if (dy != 0) return dy < 0 ? 1 : 0;
    return p[0] - cx < 0 ? 1 : 0;
  };
  std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rat cross = (a[0] - cx) * (b[1] - cy) - (a[1] - cy) * (b[0] - cx);
    if (cross != 0) return cross > 0;
    // collinear with the reference point: nearer first for determinism
    Rat da = (a[0] - cx) * (a[0] - cx) + (a[1] - cy) * (a[1] - cy);
    Rat db = (b[0] - cx) * (b[0] - cx) + (b[1] - cy) * (b[1] - cy);
    return da < db;
  });
  return pts;
}

}  // namespace detail

// Fixed 640x640 viewport, one element per line, no volatile content: equal
// instances render to equal bytes.
inline std::string render_thrackle_svg(const ThrackleInstance& instance) {
  if (instance.dim != 2)
    throw PreconditionError("render: instance is not 2-dimensional");
  validate_thrackle(instance);
  const Rat view = 640, margin = 40;
  std::vector<Point> all;
  for (const auto& p : instance.W.points) all.push_back(p.coords);
  auto vp = detail::fit_viewport(all, view, margin);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
         "viewBox=\"0 0 640 640\">\n";
  out += "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
  for (std::size_t b = 0; b < instance.body_count(); ++b) {
    auto pts = instance.body_points(b);
    if (pts.size() == 2) {
      auto [x1, y1] = vp.map(pts[0]);
      auto [x2, y2] = vp.map(pts[1]);
      out += "<line x1=\"" + x1 + "\" y1=\"" + y1 + "\" x2=\"" + x2 + "\" y2=\"" + y2 +
             "\" stroke=\"#aa3322\" stroke-width=\"1.5\"/>\n";
    } else {
      out += "<polygon points=\"";
      bool first = true;
      for (const auto& p : detail::convex_cycle(pts)) {
        auto [x, y] = vp.map(p);
        if (!first) out += " ";
        out += x + "," + y;
        first = false;
      }
      out += "\" fill=\"#4477aa\" fill-opacity=\"0.15\" stroke=\"#223355\" stroke-width=\"1\"/>\n";
    }
  }
  std::set<std::string> vertex_ids(instance.V.begin(), instance.V.end());
  for (const auto& p : instance.W.points) {
    auto [x, y] = vp.map(p.coords);
    out += "<circle cx=\"" + x + "\" cy=\"" + y + "\" r=\"3\" fill=\"#222222\"/>\n";
    if (vertex_ids.count(p.id))
      out += "<circle cx=\"" + x + "\" cy=\"" + y +
             "\" r=\"6\" fill=\"none\" stroke=\"#cc7722\" stroke-width=\"1.5\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

inline std::string render_config_svg(const PointConfiguration& config) {
  if (config.dim != 2)
    throw PreconditionError("render: configuration is not 2-dimensional");
  config.validate();
  if (config.points.empty()) throw PreconditionError("render: empty configuration");
  const Rat view = 640, margin = 40;
  std::vector<Point> all;
  for (const auto& p : config.points) all.push_back(p.coords);
  auto vp = detail::fit_viewport(all, view, margin);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
         "viewBox=\"0 0 640 640\">\n";
  out += "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
  for (const auto& p : config.points) {
    auto [x, y] = vp.map(p.coords);
    out += "<circle cx=\"" + x + "\" cy=\"" + y + "\" r=\"4\" fill=\"#223355\"/>\n";
    out += "<text x=\"" + x + "\" y=\"" + y + "\" dx=\"7\" dy=\"-5\" font-family=\"monospace\" "
           "font-size=\"13\" fill=\"#444444\">" + p.id + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace ttl
