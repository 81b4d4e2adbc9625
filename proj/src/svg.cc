// Copyright 2026 The Connoter Authors.
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

#include "connoter/svg.h"

#include <algorithm>
#include <cmath>

#include "connoter/text.h"

namespace connoter {
namespace {

std::string Num(double v) { return FormatFixed(v, 2); }

std::string Header(double width, double height) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + Num(width) + "\" height=\"" +
         Num(height) + "\" viewBox=\"0 0 " + Num(width) + " " + Num(height) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n"
         "<rect x=\"0\" y=\"0\" width=\"" + Num(width) + "\" height=\"" + Num(height) +
         "\" fill=\"#ffffff\"/>\n";
}

std::string Text(double x, double y, const std::string &content, const char *anchor = "start",
                 const char *extra = "") {
  return "<text x=\"" + Num(x) + "\" y=\"" + Num(y) + "\" text-anchor=\"" + anchor + "\"" +
         extra + ">" + XmlEscape(content) + "</text>\n";
}

std::string Line(double x1, double y1, double x2, double y2, const char *stroke,
                 double width = 1.0) {
  return "<line x1=\"" + Num(x1) + "\" y1=\"" + Num(y1) + "\" x2=\"" + Num(x2) + "\" y2=\"" +
         Num(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" + Num(width) + "\"/>\n";
}

std::string Rect(double x, double y, double w, double h, const std::string &fill) {
  return "<rect x=\"" + Num(x) + "\" y=\"" + Num(y) + "\" width=\"" + Num(w) + "\" height=\"" +
         Num(h) + "\" fill=\"" + fill + "\"/>\n";
}

}  // namespace

std::string XmlEscape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string RenderBarChart(std::span<const Bar> bars, const std::string &title) {
  constexpr double kLabelWidth = 200, kPlotWidth = 400, kRow = 26, kTop = 50, kMargin = 30;
  const double width = kLabelWidth + kPlotWidth + kMargin * 2;
  const double height = kTop + kRow * static_cast<double>(bars.size()) + 50;
  const double left = kLabelWidth + kMargin;
  auto x_of = [&](double v) {
    return left + (std::clamp(v, -1.0, 1.0) + 1.0) / 2.0 * kPlotWidth;
  };
  const double zero = x_of(0.0);
  const double bottom = kTop + kRow * static_cast<double>(bars.size());

  std::string svg = Header(width, height);
  svg += Text(width / 2, 24, title, "middle", " font-size=\"15\"");
  for (double tick : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    svg += Line(x_of(tick), kTop - 6, x_of(tick), bottom, "#e0e0e0");
    svg += Text(x_of(tick), bottom + 18, Num(tick), "middle");
  }
  for (size_t i = 0; i < bars.size(); ++i) {
    const Bar &bar = bars[i];
    const double y = kTop + kRow * static_cast<double>(i);
    const double xv = x_of(bar.value);
    const char *color = bar.value > 0 ? kHasPowerColor
                        : bar.value < 0 ? kLacksPowerColor
                                        : kNeutralColor;
    svg += Text(left - 8, y + kRow / 2 + 4, bar.label, "end");
    svg += Rect(std::min(zero, xv), y + 4, std::max(std::fabs(xv - zero), 1.0), kRow - 8, color);
    if (bar.error) {
      const double lo = x_of(bar.value - *bar.error);
      const double hi = x_of(bar.value + *bar.error);
      const double mid = y + kRow / 2;
      svg += Line(lo, mid, hi, mid, "#333333", 1.5);
      svg += Line(lo, mid - 5, lo, mid + 5, "#333333", 1.5);
      svg += Line(hi, mid - 5, hi, mid + 5, "#333333", 1.5);
    }
  }
  svg += Line(zero, kTop - 6, zero, bottom, "#000000", 1.5);
  svg += Text(x_of(0.0), bottom + 36, "score", "middle");
  svg += "</svg>\n";
  return svg;
}

std::string RenderHeatmap(std::span<const HeatCell> cells, const std::string &title) {
  constexpr double kLabelWidth = 180, kCell = 64, kRow = 26, kTop = 46, kMargin = 20;
  const double width = kMargin + kLabelWidth + kCell + kMargin;
  const double height = kTop + kRow * static_cast<double>(cells.size()) + kMargin;
  std::string svg = Header(std::max(width, 260.0), height);
  svg += Text(kMargin, 24, title, "start", " font-size=\"14\"");
  const double x = kMargin + kLabelWidth;
  for (size_t i = 0; i < cells.size(); ++i) {
    const HeatCell &cell = cells[i];
    const double y = kTop + kRow * static_cast<double>(i);
    svg += Text(x - 8, y + kRow / 2 + 4, cell.label, "end");
    svg += "<rect x=\"" + Num(x) + "\" y=\"" + Num(y) + "\" width=\"" + Num(kCell) +
           "\" height=\"" + Num(kRow) + "\" fill=\"" + XmlEscape(cell.color) +
           "\" stroke=\"#ffffff\" stroke-width=\"1.00\"/>\n";
    svg += Text(x + kCell / 2, y + kRow / 2 + 4, std::to_string(cell.count), "middle");
  }
  svg += "</svg>\n";
  return svg;
}

std::string RenderHistogram(std::span<const HistogramSeries> series, int bins,
                            const std::string &title, const std::string &x_label) {
  bins = std::max(bins, 1);
  constexpr double kLeft = 60, kTop = 50, kPlotWidth = 560, kPlotHeight = 260;
  const double width = kLeft + kPlotWidth + 40;
  const double height = kTop + kPlotHeight + 70;

  double lo = 0, hi = 0;
  bool any = false;
  for (const HistogramSeries &s : series) {
    for (double v : s.values) {
      if (!std::isfinite(v)) continue;
      lo = any ? std::min(lo, v) : v;
      hi = any ? std::max(hi, v) : v;
      any = true;
    }
  }
  if (!any) {
    lo = -1;
    hi = 1;
  } else if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double bin_width = (hi - lo) / bins;
  std::vector<std::vector<size_t>> counts(series.size(), std::vector<size_t>(static_cast<size_t>(bins)));
  size_t max_count = 1;
  for (size_t s = 0; s < series.size(); ++s) {
    for (double v : series[s].values) {
      if (!std::isfinite(v)) continue;
      int b = static_cast<int>(std::floor((v - lo) / bin_width));
      b = std::clamp(b, 0, bins - 1);
      max_count = std::max(max_count, ++counts[s][static_cast<size_t>(b)]);
    }
  }

  std::string svg = Header(width, height);
  svg += Text(width / 2, 24, title, "middle", " font-size=\"15\"");
  const double bottom = kTop + kPlotHeight;
  const double slot = kPlotWidth / bins;
  const double bar = slot / static_cast<double>(std::max<size_t>(series.size(), 1));
  for (size_t s = 0; s < series.size(); ++s) {
    for (int b = 0; b < bins; ++b) {
      size_t c = counts[s][static_cast<size_t>(b)];
      if (c == 0) continue;
      double h = kPlotHeight * static_cast<double>(c) / static_cast<double>(max_count);
      svg += Rect(kLeft + slot * b + bar * static_cast<double>(s), bottom - h, bar, h,
                  series[s].color);
    }
  }
  svg += Line(kLeft, bottom, kLeft + kPlotWidth, bottom, "#000000");
  svg += Line(kLeft, kTop, kLeft, bottom, "#000000");
  for (int k = 0; k <= 4; ++k) {
    double value = lo + (hi - lo) * k / 4.0;
    double x = kLeft + kPlotWidth * k / 4.0;
    svg += Line(x, bottom, x, bottom + 4, "#000000");
    svg += Text(x, bottom + 18, Num(value), "middle");
  }
  svg += Text(kLeft - 8, kTop + 4, std::to_string(max_count), "end");
  svg += Text(kLeft - 8, bottom, "0", "end");
  svg += Text(kLeft + kPlotWidth / 2, bottom + 38, x_label, "middle");
  for (size_t s = 0; s < series.size(); ++s) {
    double y = bottom + 54;
    double x = kLeft + 160.0 * static_cast<double>(s);
    svg += Rect(x, y - 10, 12, 12, series[s].color);
    svg += Text(x + 18, y, series[s].name);
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace connoter
