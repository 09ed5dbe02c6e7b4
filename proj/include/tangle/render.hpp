#pragma once

// Wire diagrams for tangles. Time runs downwards; every wire is a
// y-monotone polyline and each swap is drawn as a crossing of two
// neighbouring columns.
//
// ASCII layout, per permutation a row of '|' and per layer two glyph rows;
// a crossing occupies columns p*w .. (p+1)*w:
//
//   1 2 3
//   | | |
//   \ / |
//   / \ |
//   | | |
//   2 1 3

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tangle/tangle.hpp"

namespace tangle {

enum class RenderFormat { ascii, svg };

struct RenderSpec {
  int column_width = 2;  // characters (ascii) or pixels (svg) per position
  int row_height = 2;    // glyph rows per layer (ascii, >= 2) or pixels per layer (svg)
  bool labels = true;
  RenderFormat format = RenderFormat::ascii;

  static RenderSpec svg_defaults() { return {24, 24, true, RenderFormat::svg}; }
};

namespace detail {

inline std::string ascii_label_row(const Permutation& p, int width) {
  std::string row;
  bool fits = true;
  for (Wire w : p.wire_order()) fits = fits && static_cast<int>(std::to_string(w + 1).size()) < width + (width == 1);
  if (!fits) {
    for (int k = 0; k < p.size(); ++k) row += (k ? " " : "") + std::to_string(p.wire_at(k) + 1);
    return row;
  }
  for (int k = 0; k < p.size(); ++k) {
    std::string label = std::to_string(p.wire_at(k) + 1);
    if (k + 1 < p.size()) label.resize(width, ' ');
    row += label;
  }
  return row;
}

inline std::string ascii_bar_row(int n, int width) {
  std::string row((n - 1) * width + 1, ' ');
  for (int p = 0; p < n; ++p) row[p * width] = '|';
  return row;
}

inline std::string render_ascii(const Tangle& t, const RenderSpec& spec) {
  const int n = t.order();
  const int w = spec.column_width;
  std::ostringstream out;
  if (spec.labels) out << ascii_label_row(t.front(), w) << '\n';
  out << ascii_bar_row(n, w) << '\n';
  for (int layer = 0; layer + 1 < t.height(); ++layer) {
    const Permutation& before = t.permutations()[layer];
    std::string top = ascii_bar_row(n, w);
    std::string bottom = top;
    for (const auto& s : t.layers()[layer].swaps()) {
      int p = std::min(before.position_of(s.lo), before.position_of(s.hi));
      top[p * w] = '\\';
      top[(p + 1) * w] = '/';
      bottom[p * w] = '/';
      bottom[(p + 1) * w] = '\\';
    }
    out << top << '\n' << bottom << '\n';
    for (int extra = 2; extra < spec.row_height; ++extra) out << ascii_bar_row(n, w) << '\n';
    out << ascii_bar_row(n, w) << '\n';
  }
  if (spec.labels) out << ascii_label_row(t.back(), w) << '\n';
  return out.str();
}

inline constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                                         "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

inline std::string render_svg(const Tangle& t, const RenderSpec& spec) {
  const int n = t.order();
  const int margin = spec.column_width;
  const int label_space = spec.labels ? 16 : 0;
  const int width = 2 * margin + (n - 1) * spec.column_width;
  const int height = 2 * margin + 2 * label_space + (t.height() - 1) * spec.row_height;
  auto x_of = [&](int pos) { return margin + pos * spec.column_width; };
  auto y_of = [&](int row) { return margin + label_space + row * spec.row_height; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  for (Wire wire = 0; wire < n; ++wire) {
    out << "  <polyline class=\"wire\" data-wire=\"" << wire + 1 << "\" fill=\"none\" stroke=\""
        << kPalette[wire % kPalette.size()] << "\" stroke-width=\"2\" points=\"";
    for (int row = 0; row < t.height(); ++row)
      out << (row ? " " : "") << x_of(t.permutations()[row].position_of(wire)) << ',' << y_of(row);
    out << "\"/>\n";
  }
  if (spec.labels) {
    for (int pos = 0; pos < n; ++pos) {
      out << "  <text x=\"" << x_of(pos) << "\" y=\"" << margin + label_space - 4
          << "\" text-anchor=\"middle\" font-size=\"12\">" << t.front().wire_at(pos) + 1 << "</text>\n";
      out << "  <text x=\"" << x_of(pos) << "\" y=\"" << y_of(t.height() - 1) + label_space
          << "\" text-anchor=\"middle\" font-size=\"12\">" << t.back().wire_at(pos) + 1 << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace detail

inline std::string render(const Tangle& t, const RenderSpec& spec = {}) {
  if (spec.column_width < 1 || spec.row_height < 1) throw std::invalid_argument("render dimensions must be positive");
  if (spec.format == RenderFormat::ascii) {
    if (spec.row_height < 2) throw std::invalid_argument("ascii rendering needs row_height >= 2");
    return detail::render_ascii(t, spec);
  }
  return detail::render_svg(t, spec);
}

}  // namespace tangle
