// Copyright 2026 The codeppl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// A few static SVG charts: box plots, labelled scatters and parallel
// coordinates. Output is plain text with fixed number formatting so that
// identical inputs give identical files.

#ifndef CODEPPL_SVG_HPP_
#define CODEPPL_SVG_HPP_

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "codeppl/analysis.hpp"

namespace codeppl::svg {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Maps a data interval onto a pixel interval; degenerate ranges are padded.
struct Scale {
  double d0, d1, p0, p1;
  Scale(double lo, double hi, double pix_lo, double pix_hi) : d0(lo), d1(hi), p0(pix_lo), p1(pix_hi) {
    if (!(d1 > d0)) {
      double pad = std::abs(d0) > 0 ? std::abs(d0) * 0.1 : 1.0;
      d0 -= pad;
      d1 += pad;
    }
  }
  double operator()(double v) const { return p0 + (v - d0) / (d1 - d0) * (p1 - p0); }
};

class Canvas {
 public:
  Canvas(int width, int height) : w_(width), h_(height) {}

  void line(double x1, double y1, double x2, double y2, std::string_view stroke = "#333", double width = 1) {
    body_ << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2)
          << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width) << "\"/>\n";
  }
  void rect(double x, double y, double w, double h, std::string_view fill, std::string_view stroke = "#333") {
    body_ << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w) << "\" height=\"" << num(h)
          << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\"/>\n";
  }
  void circle(double cx, double cy, double r, std::string_view fill) {
    body_ << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(r) << "\" fill=\"" << fill
          << "\"/>\n";
  }
  void text(double x, double y, std::string_view s, std::string_view anchor = "middle", int size = 11,
            double rotate = 0) {
    body_ << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"" << size << "\" text-anchor=\""
          << anchor << "\"";
    if (rotate != 0) body_ << " transform=\"rotate(" << num(rotate) << " " << num(x) << " " << num(y) << ")\"";
    body_ << ">" << escape(s) << "</text>\n";
  }
  void polyline(const std::vector<std::pair<double, double>>& pts, std::string_view stroke) {
    body_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) body_ << ' ';
      body_ << num(pts[i].first) << ',' << num(pts[i].second);
    }
    body_ << "\"/>\n";
  }

  std::string str() const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w_ << "\" height=\"" << h_
        << "\" viewBox=\"0 0 " << w_ << ' ' << h_ << "\" font-family=\"sans-serif\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << body_.str() << "</svg>\n";
    return out.str();
  }

 private:
  int w_, h_;
  std::ostringstream body_;
};

inline const char* palette(std::size_t i) {
  static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2",
                                 "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939", "#8c6d31", "#843c39"};
  return colors[i % (sizeof colors / sizeof colors[0])];
}

inline void y_axis(Canvas& c, const Scale& y, double x, int ticks = 5) {
  c.line(x, y.p0, x, y.p1);
  for (int t = 0; t <= ticks; ++t) {
    double v = y.d0 + (y.d1 - y.d0) * t / ticks;
    c.line(x - 4, y(v), x, y(v));
    c.text(x - 6, y(v) + 4, format_double(std::round(v * 100) / 100), "end", 10);
  }
}

// One box per language in the given order; languages without quartiles are
// drawn as a single median marker.
inline std::string boxplot(const std::vector<LanguageSummary>& summaries, std::string_view title) {
  const double left = 70, right = 20, top = 40, bottom = 90, slot = 48;
  const int width = static_cast<int>(left + right + slot * std::max<std::size_t>(1, summaries.size()));
  const int height = 420;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& s : summaries) {
    lo = std::min(lo, s.whisker_low.value_or(s.median));
    hi = std::max(hi, s.whisker_high.value_or(s.median));
  }
  if (summaries.empty()) lo = 0, hi = 1;
  Scale y(lo, hi, height - bottom, top);
  Canvas c(width, height);
  c.text(width / 2.0, 22, title, "middle", 14);
  y_axis(c, y, left - 10);
  c.text(18, (top + height - bottom) / 2, "perplexity", "middle", 11, -90);
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    const auto& s = summaries[i];
    double cx = left + slot * (static_cast<double>(i) + 0.5);
    if (s.q1 && s.q3) {
      c.line(cx, y(*s.whisker_low), cx, y(*s.q1));
      c.line(cx, y(*s.q3), cx, y(*s.whisker_high));
      c.line(cx - 8, y(*s.whisker_low), cx + 8, y(*s.whisker_low));
      c.line(cx - 8, y(*s.whisker_high), cx + 8, y(*s.whisker_high));
      c.rect(cx - 16, y(*s.q3), 32, std::max(0.5, y(*s.q1) - y(*s.q3)), palette(i));
      c.line(cx - 16, y(s.median), cx + 16, y(s.median), "#000", 2);
    } else {
      c.circle(cx, y(s.median), 4, palette(i));
    }
    c.text(cx, height - bottom + 16, s.language, "end", 11, -45);
  }
  return c.str();
}

inline std::string scatter(const Scatter& sc, std::string_view y_label) {
  const double left = 70, right = 30, top = 40, bottom = 60;
  const int width = 640, height = 440;
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& p : sc.points) {
    x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
  }
  if (sc.points.empty()) x0 = y0 = 0, x1 = y1 = 1;
  Scale x(x0, x1, left, width - right);
  Scale y(y0, y1, height - bottom, top);
  Canvas c(width, height);
  c.text(width / 2.0, 22, sc.attribute + " vs " + std::string(y_label), "middle", 14);
  y_axis(c, y, left - 10);
  c.line(left, height - bottom + 10, width - right, height - bottom + 10);
  for (int t = 0; t <= 4; ++t) {
    double v = x.d0 + (x.d1 - x.d0) * t / 4;
    c.text(x(v), height - bottom + 26, format_double(std::round(v * 100) / 100), "middle", 10);
  }
  c.text(width / 2.0, height - 12, sc.attribute, "middle", 11);
  for (std::size_t i = 0; i < sc.points.size(); ++i) {
    const auto& p = sc.points[i];
    c.circle(x(p.x), y(p.y), 4, palette(i));
    c.text(x(p.x) + 6, y(p.y) - 6, p.language, "start", 10);
  }
  return c.str();
}

// One vertical axis per model, one polyline per language.
inline std::string parallel(const ParallelCoordinates& pc) {
  const double left = 80, right = 110, top = 40, bottom = 60;
  const double gap = 140;
  const int width = static_cast<int>(left + right + gap * std::max<std::size_t>(1, pc.models.size() - 1));
  const int height = 440;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& row : pc.value) {
    for (double v : row) {
      if (!std::isnan(v)) lo = std::min(lo, v), hi = std::max(hi, v);
    }
  }
  if (!(hi >= lo)) lo = 0, hi = 1;
  Scale y(lo, hi, height - bottom, top);
  Canvas c(width, height);
  c.text(width / 2.0, 22, "median perplexity by model", "middle", 14);
  y_axis(c, y, left - 10);
  for (std::size_t m = 0; m < pc.models.size(); ++m) {
    double x = left + gap * static_cast<double>(m);
    c.line(x, top, x, height - bottom, "#999");
    c.text(x, height - bottom + 20, pc.models[m], "middle", 11);
  }
  for (std::size_t l = 0; l < pc.languages.size(); ++l) {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t m = 0; m < pc.models.size(); ++m) {
      double v = pc.value[l][m];
      if (!std::isnan(v)) pts.emplace_back(left + gap * static_cast<double>(m), y(v));
    }
    if (pts.empty()) continue;
    c.polyline(pts, palette(l));
    c.text(pts.back().first + 6, pts.back().second + 4, pc.languages[l], "start", 10);
  }
  return c.str();
}

}  // namespace codeppl::svg

#endif  // CODEPPL_SVG_HPP_
