// Copyright 2026 The ctiqa Authors.
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

#pragma once

#include <span>
#include <string>
#include <vector>

namespace ctiqa::metrics {

// All metrics return absolute values. Inputs must have equal length M >= 3
// and be finite; ConstantVector is thrown when either side has no spread.

// |Pearson correlation|.
double plcc(std::span<const double> s, std::span<const double> s_hat);

// |Spearman|: 1 - 6 sum d^2 / (M (M^2 - 1)) when neither side has ties,
// otherwise Pearson on average (fractional) ranks.
double srocc(std::span<const double> s, std::span<const double> s_hat);

// |Kendall tau-a|: 2 (M_c - M_d) / (M (M - 1)); tied pairs count in neither.
double krocc(std::span<const double> s, std::span<const double> s_hat);

struct Summary {
  double plcc = 0.0;
  double srocc = 0.0;
  double krocc = 0.0;
  double overall = 0.0;  // plcc + srocc + krocc
};

Summary overall(std::span<const double> s, std::span<const double> s_hat);

// 1-based average ranks; tied values share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> v);

// "plcc,srocc,krocc,overall" header plus one data row.
std::string summary_csv(const Summary& summary, const std::string& tag = "");

}  // namespace ctiqa::metrics
