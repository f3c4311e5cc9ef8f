#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>

#include "hpd/hpd_engine.hpp"

namespace hpd::grid {

// Box grids are drawn with the column index alpha increasing DOWNWARD and
// the twist index beta increasing to the RIGHT, with a heavy divider after
// the beta = 0 column separating the kept part from the removed part.
struct GridExtent {
  int alpha_min = 0, alpha_max = 0;
  int beta_min = 0, beta_max = 0;
};

using CellFn = std::function<std::string(engine::Box)>;

[[nodiscard]] inline std::string render_ascii(const GridExtent& e,
                                              const CellFn& cell) {
  std::ostringstream os;
  const int w = 4;
  auto pad = [&](const std::string& s) {
    std::string p = s;
    while (static_cast<int>(p.size()) < w) p.insert(p.begin(), ' ');
    return p;
  };
  os << "  a\\b";
  for (int b = e.beta_min; b <= e.beta_max; ++b) {
    os << pad(std::to_string(b));
    if (b == 0 && b < e.beta_max) os << " ||";
  }
  os << '\n';
  for (int a = e.alpha_min; a <= e.alpha_max; ++a) {
    os << pad(std::to_string(a)) << ' ';
    for (int b = e.beta_min; b <= e.beta_max; ++b) {
      std::string c = cell({a, b});
      if (c.empty()) c = ".";
      os << pad(c);
      if (b == 0 && b < e.beta_max) os << " ||";
    }
    os << '\n';
  }
  return os.str();
}

[[nodiscard]] inline std::string render_svg(const GridExtent& e,
                                            const CellFn& cell) {
  const int cw = 34, ch = 26, margin = 30;
  const int cols = e.beta_max - e.beta_min + 1;
  const int rows = e.alpha_max - e.alpha_min + 1;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
     << margin * 2 + cols * cw << "\" height=\"" << margin * 2 + rows * ch
     << "\" font-family=\"monospace\" font-size=\"12\">\n";
  for (int a = e.alpha_min; a <= e.alpha_max; ++a) {
    int y = margin + (a - e.alpha_min) * ch;
    os << "  <text x=\"" << margin - 22 << "\" y=\"" << y + ch - 8
       << "\">" << a << "</text>\n";
    for (int b = e.beta_min; b <= e.beta_max; ++b) {
      int x = margin + (b - e.beta_min) * cw;
      if (a == e.alpha_min)
        os << "  <text x=\"" << x + cw / 2 - 4 << "\" y=\"" << margin - 8
           << "\">" << b << "</text>\n";
      os << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cw
         << "\" height=\"" << ch
         << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
      std::string c = cell({a, b});
      if (!c.empty())
        os << "  <text x=\"" << x + cw / 2 - 4 << "\" y=\"" << y + ch - 8
           << "\">" << c << "</text>\n";
    }
  }
  if (e.beta_min <= 0 && e.beta_max > 0) {
    int x = margin + (1 - e.beta_min) * cw;
    os << "  <line x1=\"" << x << "\" y1=\"" << margin - 4 << "\" x2=\"" << x
       << "\" y2=\"" << margin + rows * ch + 4
       << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

// Walkthrough rendering: '*' marks the moving object's start box, 'S' the
// boxes accumulated into its support.  A length-one chain has no support
// rows and draws only the start box.
[[nodiscard]] inline GridExtent walkthrough_extent(const engine::GridState& g) {
  GridExtent e{0, std::max(g.i - 1, 0), std::min(2 - g.i, 1), 1};
  return e;
}

[[nodiscard]] inline CellFn walkthrough_cells(const engine::GridState& g) {
  return [&g](engine::Box b) -> std::string {
    if (b.alpha == 0 && b.beta == 1) return "*";
    if (g.support.contains(b)) return "S";
    return "";
  };
}

[[nodiscard]] inline std::string walkthrough_ascii(const engine::GridState& g) {
  return render_ascii(walkthrough_extent(g), walkthrough_cells(g));
}

[[nodiscard]] inline std::string walkthrough_svg(const engine::GridState& g) {
  return render_svg(walkthrough_extent(g), walkthrough_cells(g));
}

}  // namespace hpd::grid
