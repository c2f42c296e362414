#pragma once

// Deterministic SVG and TikZ emitters for lattice diagrams.  Output is
// byte-stable for fixed input and options: integer pixel coordinates only,
// no timestamps, fixed palette.

#include <cctype>
#include <string>
#include <vector>

#include "slatt/congruence.hpp"
#include "slatt/layout.hpp"
#include "slatt/swing.hpp"

namespace slatt {

struct RenderOptions {
  bool colors = false;        // tint edges by their congruence color
  bool trajectories = false;  // overlay a polyline per trajectory
  int scale = 40;             // pixels per layout unit; keep even
  bool labels = true;
};

namespace detail {

inline const char* palette(int i) {
  static const char* kPalette[] = {
      "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
      "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#aec7e8", "#ffbb78",
  };
  return kPalette[i % 12];
}

struct PixelMap {
  long long minx = 0, maxy = 0;
  int scale = 40, margin = 40;
  long long px(long long x) const { return margin + (x - minx) * scale; }
  long long py(long long y) const { return margin + (maxy - y) * scale; }
};

inline PixelMap pixel_map(const Layout& lay, int scale) {
  PixelMap m;
  m.scale = scale;
  for (long long x : lay.x) m.minx = std::min(m.minx, x);
  for (long long y : lay.y) m.maxy = std::max(m.maxy, y);
  return m;
}

}  // namespace detail

inline std::string render_svg(const Lattice& K, const Layout& lay, const SwingIndex& S,
                              const JiPoset& P, const RenderOptions& opt = {}) {
  const auto m = detail::pixel_map(lay, opt.scale);
  long long width = 2 * m.margin, height = 2 * m.margin;
  for (int e = 0; e < K.size(); ++e) {
    width = std::max(width, m.px(lay.x[e]) + m.margin);
    height = std::max(height, m.py(lay.y[e]) + m.margin);
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) + "\">\n";
  out += "<g stroke-linecap=\"round\">\n";

  for (int i = 0; i < S.edge_count(); ++i) {
    const Edge e = S.edge(i);
    const bool steep = S.classify(i) == EdgeClass::steep;
    const std::string color = opt.colors ? detail::palette(P.edge_color[i]) : "#222222";
    out += "  <line x1=\"" + std::to_string(m.px(lay.x[e.bottom])) + "\" y1=\"" +
           std::to_string(m.py(lay.y[e.bottom])) + "\" x2=\"" +
           std::to_string(m.px(lay.x[e.top])) + "\" y2=\"" +
           std::to_string(m.py(lay.y[e.top])) + "\" stroke=\"" + color +
           "\" stroke-width=\"" + (steep ? "4" : "1.5") + "\"/>\n";
  }

  if (opt.trajectories) {
    const auto& trajs = S.trajectories();
    for (size_t t = 0; t < trajs.size(); ++t) {
      out += "  <polyline fill=\"none\" stroke=\"" + std::string(detail::palette(int(t))) +
             "\" stroke-width=\"1\" stroke-dasharray=\"6 4\" opacity=\"0.6\" points=\"";
      for (size_t i = 0; i < trajs[t].edges.size(); ++i) {
        const Edge e = S.edge(trajs[t].edges[i]);
        // Midpoints are integral because the scale is even.
        const long long mx = (m.px(lay.x[e.bottom]) + m.px(lay.x[e.top])) / 2;
        const long long my = (m.py(lay.y[e.bottom]) + m.py(lay.y[e.top])) / 2;
        if (i) out += " ";
        out += std::to_string(mx) + "," + std::to_string(my);
      }
      out += "\"/>\n";
    }
  }

  for (int e = 0; e < K.size(); ++e)
    out += "  <circle cx=\"" + std::to_string(m.px(lay.x[e])) + "\" cy=\"" +
           std::to_string(m.py(lay.y[e])) +
           "\" r=\"5\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";

  if (opt.labels)
    for (int e = 0; e < K.size(); ++e)
      out += "  <text x=\"" + std::to_string(m.px(lay.x[e]) + 8) + "\" y=\"" +
             std::to_string(m.py(lay.y[e]) - 8) +
             "\" font-family=\"sans-serif\" font-size=\"12\">" + std::to_string(e) +
             "</text>\n";

  out += "</g>\n</svg>\n";
  return out;
}

inline std::string render_tikz(const Lattice& K, const Layout& lay, const SwingIndex& S,
                               const JiPoset& P, const RenderOptions& opt = {}) {
  std::string out;
  if (opt.colors) {
    std::vector<char> used(P.poset.size(), 0);
    for (int c : P.edge_color) used[c] = 1;
    for (int c = 0; c < P.poset.size(); ++c)
      if (used[c]) {
        std::string hex = detail::palette(c) + 1;  // strip '#'
        for (auto& ch : hex) ch = static_cast<char>(std::toupper(ch));
        out += "\\definecolor{col" + std::to_string(c) + "}{HTML}{" + hex + "}\n";
      }
  }
  out += "\\begin{tikzpicture}[scale=0.7]\n";
  for (int i = 0; i < S.edge_count(); ++i) {
    const Edge e = S.edge(i);
    out += "  \\draw";
    std::string style;
    if (S.classify(i) == EdgeClass::steep) style = "very thick";
    if (opt.colors) {
      if (!style.empty()) style += ",";
      style += "col" + std::to_string(P.edge_color[i]);
    }
    if (!style.empty()) out += "[" + style + "]";
    out += " (" + std::to_string(lay.x[e.bottom]) + "," + std::to_string(lay.y[e.bottom]) +
           ") -- (" + std::to_string(lay.x[e.top]) + "," + std::to_string(lay.y[e.top]) +
           ");\n";
  }
  for (int e = 0; e < K.size(); ++e) {
    out += "  \\node[circle,draw,fill=white,inner sep=1.5pt] at (" +
           std::to_string(lay.x[e]) + "," + std::to_string(lay.y[e]) + ") {";
    if (opt.labels) out += "\\tiny " + std::to_string(e);
    out += "};\n";
  }
  out += "\\end{tikzpicture}\n";
  return out;
}

}  // namespace slatt
