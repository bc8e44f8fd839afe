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

#ifndef TWISTGEN_EVALUATION_CORRELATE_H_
#define TWISTGEN_EVALUATION_CORRELATE_H_

#include <vector>

namespace twistgen {

struct Correlation {
  double pearson_r = 0.0;
  double pearson_p = 1.0;
  double spearman_rho = 0.0;
  double spearman_p = 1.0;
  int n = 0;
};

// Product-moment and rank correlations with two-sided p-values from the
// t-distribution (df = n - 2). Ties receive average ranks. Throws DataError
// on length mismatch, n < 3, or zero variance in either input.
Correlation Correlate(const std::vector<double>& x,
                      const std::vector<double>& y);

double PearsonR(const std::vector<double>& x, const std::vector<double>& y);
double SpearmanRho(const std::vector<double>& x, const std::vector<double>& y);

// Average ranks (1-based); tied values share the mean of their rank block.
std::vector<double> AverageRanks(const std::vector<double>& values);

}  // namespace twistgen

#endif  // TWISTGEN_EVALUATION_CORRELATE_H_
