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

// Brute-force reference implementations that enumerate every length-n
// sequence.

#ifndef LEAKC_TESTS_ORACLE_H_
#define LEAKC_TESTS_ORACLE_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "leakc/prob.h"
#include "leakc/random.h"

namespace leakc::oracle {

struct RawSystem {
  std::vector<double> prior;
  std::vector<std::vector<double>> channel;
};

struct Sequence {
  std::vector<std::size_t> ys;
  std::vector<double> joint;  // Pr{X = x, Y^n = ys}
  double prob = 0.0;          // Pr{Y^n = ys}
  std::vector<double> posterior;
};

// Visits all |Y|^n sequences, skipping those of probability zero.
inline void ForEachSequence(const RawSystem& s, int n,
                            const std::function<void(const Sequence&)>& fn) {
  const std::size_t ny = s.channel.front().size();
  std::vector<std::size_t> ys(n, 0);
  while (true) {
    Sequence seq;
    seq.ys = ys;
    for (std::size_t x = 0; x < s.prior.size(); ++x) {
      double p = s.prior[x];
      for (std::size_t y : ys) p *= s.channel[x][y];
      seq.joint.push_back(p);
      seq.prob += p;
    }
    if (seq.prob > 0.0) {
      for (double j : seq.joint) seq.posterior.push_back(j / seq.prob);
      fn(seq);
    }
    int k = n - 1;
    while (k >= 0 && ys[k] + 1 == ny) ys[k--] = 0;
    if (k < 0) return;
    ++ys[k];
  }
}

inline double MaxRatioLeakage(const std::vector<double>& post,
                              const std::vector<double>& prior) {
  double best = 0.0;
  for (std::size_t x = 0; x < prior.size(); ++x) {
    if (prior[x] > 0.0) best = std::max(best, post[x] / prior[x]);
  }
  return std::log2(best);
}

// Distribution of a per-sequence value, merged on exact equality of the
// rounded value so it can be compared pointwise.
inline std::map<double, double> ValueDistribution(
    const RawSystem& s, int n,
    const std::function<double(const std::vector<double>&)>& value) {
  std::map<double, double> out;
  ForEachSequence(s, n, [&](const Sequence& seq) {
    out[value(seq.posterior)] += seq.prob;
  });
  return out;
}

inline double BayesError(const RawSystem& s, int n) {
  double err = 0.0;
  ForEachSequence(s, n, [&](const Sequence& seq) {
    err += seq.prob - *std::max_element(seq.joint.begin(), seq.joint.end());
  });
  return err;
}

// E over sequences of an arbitrary function of the posterior.
inline double Expectation(
    const RawSystem& s, int n,
    const std::function<double(const std::vector<double>&)>& fn) {
  double acc = 0.0;
  ForEachSequence(
      s, n, [&](const Sequence& seq) { acc += seq.prob * fn(seq.posterior); });
  return acc;
}

// -min over a uniform lambda grid of log2 sum p1^l p2^(1-l).
inline double GridChernoff(const std::vector<double>& p1,
                           const std::vector<double>& p2, double step) {
  double best = INFINITY;
  const long steps = std::lround(1.0 / step);
  for (long k = 0; k <= steps; ++k) {
    const double l = static_cast<double>(k) / static_cast<double>(steps);
    double acc = 0.0;
    for (std::size_t i = 0; i < p1.size(); ++i) {
      const double a =
          l == 0.0 ? (p1[i] > 0.0 ? 1.0 : 0.0) : std::pow(p1[i], l);
      const double b =
          l == 1.0 ? (p2[i] > 0.0 ? 1.0 : 0.0) : std::pow(p2[i], 1.0 - l);
      acc += a * b;
    }
    best = std::min(best, std::log2(acc));
  }
  return -best;
}

// Random system; rows are flat Dirichlet draws and the prior is bounded
// away from zero.
inline RawSystem RandomSystem(PhiloxStream& rng, std::size_t nx,
                              std::size_t ny) {
  RawSystem s;
  s.prior = rng.NextSimplexPoint(nx);
  double sum = 0.0;
  for (double& p : s.prior) {
    p = 0.05 + p;
    sum += p;
  }
  for (double& p : s.prior) p /= sum;
  for (std::size_t x = 0; x < nx; ++x) {
    s.channel.push_back(rng.NextSimplexPoint(ny));
  }
  return s;
}

inline System ToSystem(const RawSystem& s) {
  return System::Create(ProbVec::Validate(s.prior),
                        Channel::FromMatrix(s.channel));
}

}  // namespace leakc::oracle

#endif  // LEAKC_TESTS_ORACLE_H_
