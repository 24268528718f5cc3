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

#include "leakc/chernoff.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "leakc/composition.h"
#include "leakc/error.h"

namespace leakc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLambdaTolerance = 1e-10;

// log2 sum_x p1^l p2^(1-l) with interior-limit conventions at l in {0, 1}.
double BhattacharyyaLog(std::span<const double> p1, std::span<const double> p2,
                        double lambda) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    if (p1[i] <= 0.0 || p2[i] <= 0.0) continue;
    if (lambda == 0.0) {
      acc += p2[i];
    } else if (lambda == 1.0) {
      acc += p1[i];
    } else {
      acc +=
          std::exp(lambda * std::log(p1[i]) + (1.0 - lambda) * std::log(p2[i]));
    }
  }
  return acc > 0.0 ? std::log2(acc) : -kInf;
}

}  // namespace

ChernoffResult Chernoff(std::span<const double> p1,
                        std::span<const double> p2) {
  if (p1.size() != p2.size()) {
    throw Error(ErrorCode::kLengthMismatch, "Chernoff of unequal lengths");
  }
  auto objective = [&](double l) { return BhattacharyyaLog(p1, p2, l); };
  if (objective(0.5) == -kInf) return ChernoffResult{kInf, 0.5};

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0;
  double hi = 1.0;
  double a = hi - inv_phi * (hi - lo);
  double b = lo + inv_phi * (hi - lo);
  double fa = objective(a);
  double fb = objective(b);
  while (hi - lo > kLambdaTolerance) {
    if (fa <= fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - inv_phi * (hi - lo);
      fa = objective(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + inv_phi * (hi - lo);
      fb = objective(b);
    }
  }
  ChernoffResult best{-objective(0.5 * (lo + hi)), 0.5 * (lo + hi)};
  for (double end : {0.0, 1.0}) {
    const double v = -objective(end);
    if (v > best.information) best = ChernoffResult{v, end};
  }
  best.information = std::max(0.0, best.information);
  return best;
}

double ChernoffInformation(const ProbVec& p1, const ProbVec& p2) {
  return Chernoff(p1.probs(), p2.probs()).information;
}

PairwiseChernoff MinPairwiseChernoff(const Channel& channel) {
  const std::vector<std::size_t> classes =
      EquivalentRowClasses(channel, kDefaultMergeTolerance);
  const std::size_t nx = channel.num_inputs();
  PairwiseChernoff out;
  out.matrix.assign(nx, std::vector<double>(nx, 0.0));
  out.value = kInf;
  bool found = false;
  for (std::size_t a = 0; a < nx; ++a) {
    for (std::size_t b = a + 1; b < nx; ++b) {
      if (classes[a] == classes[b]) continue;
      const double c = ChernoffInformation(channel.row(a), channel.row(b));
      out.matrix[a][b] = out.matrix[b][a] = c;
      if (!found || c < out.value) {
        out.value = c;
        out.x = a;
        out.x_prime = b;
        found = true;
      }
    }
  }
  if (!found) {
    throw Error(ErrorCode::kSingleClass,
                "fewer than two distinct channel rows");
  }
  return out;
}

DecayFit FitDecayRate(std::span<const RatePoint> points,
                      std::uint64_t window_lo, std::uint64_t window_hi) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const RatePoint& pt : points) {
    if (pt.n < window_lo || pt.n > window_hi) continue;
    if (!(pt.gap > 0.0)) {
      throw Error(ErrorCode::kNonPositiveGap,
                  "gap at n=" + std::to_string(pt.n) + " is not positive");
    }
    xs.push_back(static_cast<double>(pt.n));
    ys.push_back(std::log2(pt.gap));
  }
  if (xs.size() < 3) {
    throw Error(ErrorCode::kInsufficientPoints,
                "need at least 3 points in the fit window, have " +
                    std::to_string(xs.size()));
  }
  const double count = static_cast<double>(xs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i] / count;
    mean_y += ys[i] / count;
  }
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    syy += (ys[i] - mean_y) * (ys[i] - mean_y);
  }
  if (sxx == 0.0) {
    throw Error(ErrorCode::kInsufficientPoints, "all fit points share one n");
  }
  DecayFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  fit.points_used = xs.size();
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

RateReport RateExperiment(const MetricSpec& m, const System& sys,
                          std::span<const std::uint64_t> ns, RateMode mode,
                          std::uint64_t window_lo, std::uint64_t window_hi) {
  for (std::size_t i = 1; i < ns.size(); ++i) {
    if (ns[i] <= ns[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "n values must be strictly increasing");
    }
  }
  RateReport report;
  report.metric = m.Name();
  report.mode = mode;
  report.n_values.assign(ns.begin(), ns.end());
  report.window_lo = window_lo;
  report.window_hi = window_hi;

  LeakageDistribution info = LeakageDistribution::PointMass(0.0);
  if (mode == RateMode::kPointwiseL1) {
    info = LimitDistribution(m, sys);
  }
  std::vector<RatePoint> points;
  for (std::uint64_t n : ns) {
    const double gap =
        mode == RateMode::kGlobalGap
            ? GlobalGap(m, sys, n)
            : CdfL1Distance(ExactPointwiseDistribution(m, sys, n), info);
    report.gaps.push_back(gap);
    points.push_back(RatePoint{n, gap});
  }
  report.fit = FitDecayRate(points, window_lo, window_hi);
  report.c_min = MinPairwiseChernoff(sys.channel()).value;
  report.relative_error =
      std::abs(report.fit.slope + report.c_min) / report.c_min;
  return report;
}

}  // namespace leakc
