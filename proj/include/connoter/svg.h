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

#ifndef CONNOTER_SVG_H_
#define CONNOTER_SVG_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace connoter {

inline constexpr const char *kHasPowerColor = "#2e8b57";
inline constexpr const char *kLacksPowerColor = "#e75480";
inline constexpr const char *kNeutralColor = "#bdbdbd";

std::string XmlEscape(std::string_view text);

struct Bar {
  std::string label;
  double value = 0.0;
  std::optional<double> error;  // half-width of the error bar
};

// Horizontal bars over a fixed [-1, +1] axis with a zero line; positive bars
// extend right of the axis and negative bars left.
std::string RenderBarChart(std::span<const Bar> bars, const std::string &title);

struct HeatCell {
  std::string label;
  size_t count = 0;
  std::string color;
};

// Single-column heatmap: one labeled, count-annotated cell per row.
std::string RenderHeatmap(std::span<const HeatCell> cells, const std::string &title);

struct HistogramSeries {
  std::string name;
  std::string color;
  std::vector<double> values;
};

// Grouped histogram of all series over a shared range split into |bins|
// equal-width bins.
std::string RenderHistogram(std::span<const HistogramSeries> series, int bins,
                            const std::string &title, const std::string &x_label);

}  // namespace connoter

#endif  // CONNOTER_SVG_H_
