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

#include "connoter/stats.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

namespace connoter {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

TTestResult Finish(double diff, double se, double df) {
  TTestResult r;
  r.df = df;
  if (se == 0.0) {
    if (diff == 0.0) {
      r.t = 0.0;
      r.p = 1.0;
    } else {
      r.t = diff > 0 ? std::numeric_limits<double>::infinity()
                     : -std::numeric_limits<double>::infinity();
      r.p = 0.0;
    }
    return r;
  }
  r.t = diff / se;
  r.p = StudentTwoSidedP(r.t, df);
  return r;
}

}  // namespace

double Mean(std::span<const double> values) {
  if (values.empty()) return kNaN;
  const double pivot = values.front();
  double shifted = 0.0;
  for (double v : values) shifted += v - pivot;
  return pivot + shifted / static_cast<double>(values.size());
}

double PopulationStd(std::span<const double> values) {
  if (values.empty()) return kNaN;
  const double mean = Mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size()));
}

double SampleVariance(std::span<const double> values) {
  if (values.size() < 2) return kNaN;
  const double mean = Mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(values.size() - 1);
}

double Median(std::span<const double> values) {
  if (values.empty()) return kNaN;
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const size_t mid = sorted.size() / 2;
  if (sorted.size() % 2 == 1) return sorted[mid];
  return (sorted[mid - 1] + sorted[mid]) / 2.0;
}

double StudentTwoSidedP(double t, double df) {
  if (std::isnan(t) || std::isnan(df) || df <= 0) return kNaN;
  if (std::isinf(t)) return 0.0;
  boost::math::students_t dist(df);
  return std::min(1.0, 2.0 * boost::math::cdf(dist, -std::fabs(t)));
}

TTestResult WelchTTest(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) return {kNaN, kNaN, kNaN};
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double qa = SampleVariance(a) / na;
  const double qb = SampleVariance(b) / nb;
  const double se2 = qa + qb;
  const double df = se2 == 0.0 ? na + nb - 2.0
                               : se2 * se2 / (qa * qa / (na - 1.0) + qb * qb / (nb - 1.0));
  return Finish(Mean(a) - Mean(b), std::sqrt(se2), df);
}

TTestResult PooledTTest(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) return {kNaN, kNaN, kNaN};
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double df = na + nb - 2.0;
  const double pooled = ((na - 1.0) * SampleVariance(a) + (nb - 1.0) * SampleVariance(b)) / df;
  return Finish(Mean(a) - Mean(b), std::sqrt(pooled * (1.0 / na + 1.0 / nb)), df);
}

}  // namespace connoter
