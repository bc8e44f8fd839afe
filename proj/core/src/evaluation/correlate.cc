// Copyright (c) 2026 twistgen contributors
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

#include "twistgen/evaluation/correlate.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <gsl/gsl_cdf.h>

#include "twistgen/common/error.h"

namespace twistgen {

namespace {

void CheckInputs(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw DataError("correlate: length mismatch");
  if (x.size() < 3) throw DataError("correlate: need at least 3 points");
  for (double v : x) {
    if (!std::isfinite(v)) throw DataError("correlate: non-finite value");
  }
  for (double v : y) {
    if (!std::isfinite(v)) throw DataError("correlate: non-finite value");
  }
}

double PearsonRChecked(const std::vector<double>& x,
                       const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = x[i] - mx;
    double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw DataError("correlate: zero variance makes correlation undefined");
  }
  return sxy / std::sqrt(sxx * syy);
}

// Two-sided p for the null of zero correlation via the exact t transform.
double TwoSidedP(double r, std::size_t n) {
  double df = static_cast<double>(n - 2);
  double denom = 1.0 - r * r;
  if (denom <= 0.0) return 0.0;  // |r| = 1: the statistic diverges
  double t = r * std::sqrt(df / denom);
  return 2.0 * gsl_cdf_tdist_Q(std::fabs(t), df);
}

}  // namespace

std::vector<double> AverageRanks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    double mean_rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mean_rank;
    i = j + 1;
  }
  return ranks;
}

double PearsonR(const std::vector<double>& x, const std::vector<double>& y) {
  CheckInputs(x, y);
  return PearsonRChecked(x, y);
}

double SpearmanRho(const std::vector<double>& x, const std::vector<double>& y) {
  CheckInputs(x, y);
  return PearsonRChecked(AverageRanks(x), AverageRanks(y));
}

Correlation Correlate(const std::vector<double>& x,
                      const std::vector<double>& y) {
  CheckInputs(x, y);
  Correlation c;
  c.n = static_cast<int>(x.size());
  c.pearson_r = PearsonRChecked(x, y);
  c.pearson_p = TwoSidedP(c.pearson_r, x.size());
  c.spearman_rho = PearsonRChecked(AverageRanks(x), AverageRanks(y));
  c.spearman_p = TwoSidedP(c.spearman_rho, x.size());
  return c;
}

}  // namespace twistgen
