// Copyright 2026 The leakc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEAKC_TOOLS_PLOT_H_
#define LEAKC_TOOLS_PLOT_H_

#include <string>
#include <utility>
#include <vector>

namespace leakc_cli {

struct StepSeries {
  std::string name;
  // (value, cdf) breakpoints in increasing value order.
  std::vector<std::pair<double, double>> points;
};

// Single-panel step plot of one or more CDFs.
std::string StepCdfSvg(const std::string& title, const std::string& x_label,
                       const std::vector<StepSeries>& series);

struct RatePlot {
  std::string title;
  std::vector<double> n;
  std::vector<double> gap;  // positive entries only are drawn
  double slope = 0.0;       // log2 gap per observation
  double intercept = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
};

// Log-linear plot: n on a linear axis, gap on a log axis, plus the fitted
// line across the fit window.
std::string RateSvg(const RatePlot& plot);

// Shortest decimal text that reads back to the same double.
std::string FormatDouble(double v);

}  // namespace leakc_cli

#endif  // LEAKC_TOOLS_PLOT_H_
