#include "bcl/svg.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

namespace bcl {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const ProblemInstance& inst, const Solution& sol) {
  const std::size_t n = inst.size();
  if (sol.y.size() != n || sol.r.size() != n)
    throw std::invalid_argument("deployment length does not match instance");

  const double x0 = 60.0, x1 = 580.0;
  auto px = [&](double t) { return x0 + (x1 - x0) * t; };
  const double axis_y = 44.0;
  const double lane0 = 84.0, lane_h = 30.0;
  const double height = lane0 + lane_h * static_cast<double>(n) + 20.0;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"" +
         num(height) + "\" viewBox=\"0 0 640 " + num(height) + "\">\n";
  svg +=
      "<defs><marker id=\"tip\" markerWidth=\"8\" markerHeight=\"8\" "
      "refX=\"6\" refY=\"3\" orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" "
      "fill=\"#444444\"/></marker></defs>\n";

  // Barrier axis with endpoint labels.
  svg += "<line x1=\"" + num(px(0.0)) + "\" y1=\"" + num(axis_y) + "\" x2=\"" +
         num(px(1.0)) + "\" y2=\"" + num(axis_y) +
         "\" stroke=\"#222222\" stroke-width=\"2\"/>\n";
  for (double tick : {0.0, 1.0}) {
    svg += "<line x1=\"" + num(px(tick)) + "\" y1=\"" + num(axis_y - 6.0) +
           "\" x2=\"" + num(px(tick)) + "\" y2=\"" + num(axis_y + 6.0) +
           "\" stroke=\"#222222\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + num(px(tick)) + "\" y=\"" + num(axis_y - 12.0) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" "
           "font-size=\"14\">" +
           (tick == 0.0 ? "0" : "1") + "</text>\n";
  }

  for (std::size_t i = 0; i < n; ++i) {
    const double cy = lane0 + lane_h * static_cast<double>(i);
    const bool active = sol.r[i] > 0.0;
    // Lane guide.
    svg += "<line x1=\"" + num(px(0.0)) + "\" y1=\"" + num(cy) + "\" x2=\"" +
           num(px(1.0)) + "\" y2=\"" + num(cy) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    if (active) {
      const double left = px(sol.y[i] - sol.r[i]);
      const double right = px(sol.y[i] + sol.r[i]);
      svg += "<rect x=\"" + num(left) + "\" y=\"" + num(cy - 8.0) +
             "\" width=\"" + num(right - left) +
             "\" height=\"16\" fill=\"#8fc1e3\" fill-opacity=\"0.6\"/>\n";
    }
    const double from = px(inst.sensors[i].x);
    const double to = px(sol.y[i]);
    if (num(from) != num(to)) {
      svg += "<line x1=\"" + num(from) + "\" y1=\"" + num(cy) + "\" x2=\"" +
             num(to) + "\" y2=\"" + num(cy) +
             "\" stroke=\"#444444\" stroke-width=\"1.5\" "
             "marker-end=\"url(#tip)\"/>\n";
    }
    // Origin dot, then destination: filled when sensing, hollow when dark.
    svg += "<circle cx=\"" + num(from) + "\" cy=\"" + num(cy) +
           "\" r=\"3\" fill=\"#bbbbbb\"/>\n";
    svg += "<circle cx=\"" + num(to) + "\" cy=\"" + num(cy) + "\" r=\"5\" " +
           (active ? std::string("fill=\"#2b6ea3\"")
                   : std::string("fill=\"none\" stroke=\"#2b6ea3\" "
                                 "stroke-width=\"1.5\"")) +
           "/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace bcl
