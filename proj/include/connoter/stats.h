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

#ifndef CONNOTER_STATS_H_
#define CONNOTER_STATS_H_

#include <cstddef>
#include <span>

namespace connoter {

// Mean computed as x0 + sum(x - x0) / n, so constant samples give their value
// back exactly. NaN for empty input.
double Mean(std::span<const double> values);

// Population standard deviation around Mean(); exactly 0 for constant input.
double PopulationStd(std::span<const double> values);

// Unbiased (n - 1) variance. NaN for fewer than two values.
double SampleVariance(std::span<const double> values);

double Median(std::span<const double> values);

struct TTestResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;  // two-sided
};

// Two-sided p-value of |t| under Student's t with |df| degrees of freedom.
double StudentTwoSidedP(double t, double df);

// Welch's unequal-variance two-sample t-test of mean(a) - mean(b).
// Both groups need at least two values, otherwise t, df and p are NaN. With
// zero standard error, t is 0 (p = 1) when the means agree and +/-inf (p = 0)
// otherwise.
TTestResult WelchTTest(std::span<const double> a, std::span<const double> b);

// Student's pooled-variance two-sample t-test, same conventions as above.
TTestResult PooledTTest(std::span<const double> a, std::span<const double> b);

}  // namespace connoter

#endif  // CONNOTER_STATS_H_
