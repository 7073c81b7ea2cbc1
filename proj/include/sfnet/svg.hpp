#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "sfnet/error.hpp"

namespace sfnet {

namespace detail {

inline std::string fmt2(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

inline double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace detail

struct ViolinGroup {
  std::string label;
  std::vector<double> values;
};

/// Mirrored-KDE violin chart, one violin per group, with a median tick.
/// Output is a pure function of the inputs: fixed grid, fixed formatting,
/// no randomness.
inline std::string render_violin_svg(const std::string& title,
                                     const std::vector<ViolinGroup>& groups) {
  if (groups.empty()) throw EmptyInput("violin groups");
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (const auto& g : groups)
    for (double v : g.values) {
      if (first) {
        lo = hi = v;
        first = false;
      }
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  if (first) throw EmptyInput("violin samples");
  if (hi - lo < 1e-12) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;

  const double cell_w = 110.0, margin_l = 70.0, margin_r = 20.0;
  const double top = 40.0, bottom = 360.0, label_y = 390.0;
  const double width = margin_l + cell_w * static_cast<double>(groups.size()) + margin_r;
  const double height = 410.0;
  const auto y_of = [&](double v) { return bottom - (v - lo) / (hi - lo) * (bottom - top); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt2(width) +
         "\" height=\"" + detail::fmt2(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + detail::fmt2(width / 2) +
         "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" +
         title + "</text>\n";
  // y axis with 5 ticks
  svg += "<line x1=\"" + detail::fmt2(margin_l - 10) + "\" y1=\"" + detail::fmt2(top) +
         "\" x2=\"" + detail::fmt2(margin_l - 10) + "\" y2=\"" + detail::fmt2(bottom) +
         "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double v = lo + (hi - lo) * t / 4.0;
    const double y = y_of(v);
    char lab[48];
    std::snprintf(lab, sizeof(lab), "%.4g", v);
    svg += "<line x1=\"" + detail::fmt2(margin_l - 14) + "\" y1=\"" + detail::fmt2(y) +
           "\" x2=\"" + detail::fmt2(margin_l - 10) + "\" y2=\"" + detail::fmt2(y) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + detail::fmt2(margin_l - 18) + "\" y=\"" + detail::fmt2(y + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + lab +
           "</text>\n";
  }

  constexpr int kGrid = 81;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& g = groups[gi];
    if (g.values.empty()) continue;
    const double cx = margin_l + cell_w * (static_cast<double>(gi) + 0.5);
    const std::size_t n = g.values.size();
    double mean = 0.0;
    for (double v : g.values) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : g.values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(n);
    const double sd = std::sqrt(var);
    // Silverman bandwidth; floor keeps degenerate samples drawable
    const double bw = std::max(1.06 * sd * std::pow(static_cast<double>(n), -0.2),
                               (hi - lo) / 200.0);

    std::vector<double> dens(kGrid, 0.0);
    double dmax = 0.0;
    for (int i = 0; i < kGrid; ++i) {
      const double y = lo + (hi - lo) * i / (kGrid - 1);
      double d = 0.0;
      for (double v : g.values) {
        const double t = (y - v) / bw;
        d += std::exp(-0.5 * t * t);
      }
      dens[static_cast<std::size_t>(i)] = d;
      dmax = std::max(dmax, d);
    }
    const double half_w = cell_w * 0.42;
    std::string pts;
    for (int i = 0; i < kGrid; ++i) {
      const double y = y_of(lo + (hi - lo) * i / (kGrid - 1));
      const double w = dmax > 0 ? dens[static_cast<std::size_t>(i)] / dmax * half_w : 0.0;
      pts += detail::fmt2(cx - w) + "," + detail::fmt2(y) + " ";
    }
    for (int i = kGrid - 1; i >= 0; --i) {
      const double y = y_of(lo + (hi - lo) * i / (kGrid - 1));
      const double w = dmax > 0 ? dens[static_cast<std::size_t>(i)] / dmax * half_w : 0.0;
      pts += detail::fmt2(cx + w) + "," + detail::fmt2(y) + " ";
    }
    svg += "<polygon points=\"" + pts +
           "\" fill=\"#8ab4d8\" fill-opacity=\"0.7\" stroke=\"#2b5d8a\"/>\n";
    const double med_y = y_of(detail::median_of(g.values));
    svg += "<line x1=\"" + detail::fmt2(cx - half_w) + "\" y1=\"" + detail::fmt2(med_y) +
           "\" x2=\"" + detail::fmt2(cx + half_w) + "\" y2=\"" + detail::fmt2(med_y) +
           "\" stroke=\"#17324d\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + detail::fmt2(cx) + "\" y=\"" + detail::fmt2(label_y) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + g.label +
           "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

/// Log-log complementary CDF of a degree sequence (the usual straight-line
/// diagnostic for heavy tails).
inline std::string render_degree_ccdf_svg(const std::string& title,
                                          const std::vector<int>& degrees) {
  std::map<int, std::size_t> counts;
  std::size_t n_pos = 0;
  for (int k : degrees)
    if (k >= 1) {
      ++counts[k];
      ++n_pos;
    }
  if (counts.empty()) throw EmptyInput("degree sequence has no positive degrees");

  // ccdf(k) = P(K >= k) over positive degrees
  std::vector<std::pair<double, double>> pts;  // (log10 k, log10 ccdf)
  std::size_t at_least = n_pos;
  for (const auto& [k, c] : counts) {
    pts.emplace_back(std::log10(static_cast<double>(k)),
                     std::log10(static_cast<double>(at_least) / static_cast<double>(n_pos)));
    at_least -= c;
  }

  double xlo = pts.front().first, xhi = pts.front().first;
  double ylo = pts.front().second, yhi = pts.front().second;
  for (const auto& [x, y] : pts) {
    xlo = std::min(xlo, x);
    xhi = std::max(xhi, x);
    ylo = std::min(ylo, y);
    yhi = std::max(yhi, y);
  }
  if (xhi - xlo < 1e-9) xhi = xlo + 1.0;
  if (yhi - ylo < 1e-9) yhi = ylo + 1.0;

  const double margin = 55.0, w = 520.0, h = 420.0;
  const auto px = [&](double x) { return margin + (x - xlo) / (xhi - xlo) * (w - 2 * margin); };
  const auto py = [&](double y) {
    return h - margin - (y - ylo) / (yhi - ylo) * (h - 2 * margin);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt2(w) + "\" height=\"" +
         detail::fmt2(h) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + detail::fmt2(w / 2) +
         "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" +
         title + "</text>\n";
  svg += "<line x1=\"" + detail::fmt2(margin) + "\" y1=\"" + detail::fmt2(h - margin) + "\" x2=\"" +
         detail::fmt2(w - margin) + "\" y2=\"" + detail::fmt2(h - margin) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + detail::fmt2(margin) + "\" y1=\"" + detail::fmt2(margin) + "\" x2=\"" +
         detail::fmt2(margin) + "\" y2=\"" + detail::fmt2(h - margin) + "\" stroke=\"black\"/>\n";
  for (int d = static_cast<int>(std::ceil(xlo)); d <= static_cast<int>(std::floor(xhi)); ++d) {
    svg += "<text x=\"" + detail::fmt2(px(d)) + "\" y=\"" + detail::fmt2(h - margin + 16) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">1e" +
           std::to_string(d) + "</text>\n";
  }
  for (int d = static_cast<int>(std::ceil(ylo)); d <= static_cast<int>(std::floor(yhi)); ++d) {
    svg += "<text x=\"" + detail::fmt2(margin - 8) + "\" y=\"" + detail::fmt2(py(d) + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">1e" +
           std::to_string(d) + "</text>\n";
  }
  for (const auto& [x, y] : pts) {
    svg += "<circle cx=\"" + detail::fmt2(px(x)) + "\" cy=\"" + detail::fmt2(py(y)) +
           "\" r=\"3\" fill=\"#c04040\" fill-opacity=\"0.8\"/>\n";
  }
  svg += "<text x=\"" + detail::fmt2(w / 2) + "\" y=\"" + detail::fmt2(h - 10) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">degree k</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace sfnet
