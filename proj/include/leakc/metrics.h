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

// The leakage metric catalog. Every metric is written in the pointwise form
//
//   l(y) = f(Q_{X|Y=y}, Q_X),   L = g2( E_Y[ g1(l(Y)) ] ),   h = g1 o f,
//
// with all values in bits.

#ifndef LEAKC_METRICS_H_
#define LEAKC_METRICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leakc/prob.h"

namespace leakc {

enum class MetricKind {
  kMutualInformation,
  kSibson,
  kArimoto,
  kMaximalLeakage,  // pointwise form is PML
  kMinEntropy,
  kFDivergence,
  kGLeakage,
};

// Generators for D(P||Q) = sum_i p_i fhat(q_i / p_i):
//   kKl:               fhat(t) = -log t       -> D(P||Q)
//   kChiSquared:       fhat(t) = 1/t - t      -> sum p^2/q - 1
//   kSquaredHellinger: fhat(t) = (sqrt t - 1)^2 -> sum (sqrt p - sqrt q)^2
// kChiSquared is the conjugate t * u(1/t) of u(s) = s^2 - 1, which keeps the
// value finite at the extreme points of the simplex.
enum class FDivergenceKind { kKl, kChiSquared, kSquaredHellinger };

// Gain function g(w, x) for g-leakage, stored as |W| rows of |X| entries.
class GainMatrix {
 public:
  // Entries must be finite and non-negative and every column must hold a
  // positive entry. Throws kEmptyVector, kNegativeEntry, kShapeMismatch,
  // kDomainError.
  static GainMatrix Create(std::vector<std::vector<double>> gains);
  // g(w, x) = [w == x]; g-leakage then coincides with min-entropy leakage.
  static GainMatrix Identity(std::size_t num_x);

  std::size_t num_guesses() const { return gains_.size(); }
  std::size_t num_x() const { return gains_.front().size(); }
  const std::vector<std::vector<double>>& rows() const { return gains_; }

  // max_w sum_x p(x) g(w, x).
  double BestExpectedGain(std::span<const double> p) const;

 private:
  explicit GainMatrix(std::vector<std::vector<double>> gains)
      : gains_(std::move(gains)) {}

  std::vector<std::vector<double>> gains_;
};

class MetricSpec {
 public:
  static MetricSpec MutualInformation();
  // alpha in (1, inf); throws kAlphaOutOfRange otherwise.
  static MetricSpec Sibson(double alpha);
  static MetricSpec Arimoto(double alpha);
  static MetricSpec MaximalLeakage();
  static MetricSpec MinEntropy();
  static MetricSpec FDivergence(FDivergenceKind kind);
  static MetricSpec GLeakage(GainMatrix gain);

  MetricKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  FDivergenceKind fdiv_kind() const { return fdiv_; }
  const std::optional<GainMatrix>& gain() const { return gain_; }

  // Stable identifier, e.g. "sibson(alpha=2)" or "f_divergence(kl)".
  std::string Name() const;

 private:
  explicit MetricSpec(MetricKind kind) : kind_(kind) {}

  MetricKind kind_;
  double alpha_ = 0.0;
  FDivergenceKind fdiv_ = FDivergenceKind::kKl;
  std::optional<GainMatrix> gain_;
};

// One instance of every catalog row; g-leakage uses the identity gain.
std::vector<MetricSpec> DefaultCatalog(std::size_t num_x);

// f(P, Q) in bits; may be +inf when P escapes the support of Q.
// Throws kLengthMismatch (including a gain matrix of the wrong width).
double PointwiseF(const MetricSpec& m, std::span<const double> p,
                  std::span<const double> q);
double PointwiseF(const MetricSpec& m, const ProbVec& p, const ProbVec& q);

double G1(const MetricSpec& m, double z);
// Throws kDomainError for z <= 0 when g2 is logarithmic.
double G2Apply(const MetricSpec& m, double z);
double HValue(const MetricSpec& m, std::span<const double> p,
              std::span<const double> q);

// i_X(x) = f(E_x, Q). Throws kZeroPriorRealisation if q[x] == 0.
double InformationValue(const MetricSpec& m, std::size_t x, const ProbVec& q);

// Finite-support distribution of a leakage quantity. Support values closer
// than kMergeTolerance are merged; zero-mass points are dropped.
class LeakageDistribution {
 public:
  static constexpr double kMergeTolerance = 1e-9;

  // Throws kInfiniteLeakage for a non-finite value with positive mass and
  // kSumOutOfTolerance when the masses do not sum to one.
  static LeakageDistribution FromWeighted(
      std::vector<std::pair<double, double>> points);
  static LeakageDistribution PointMass(double value);

  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& probs() const { return probs_; }

  // Pr{L <= l}.
  double Cdf(double l) const;

 private:
  LeakageDistribution() = default;

  std::vector<double> values_;
  std::vector<double> probs_;
};

// Distribution of I_X = i_X(X) for X ~ q (zero-prior x never occur).
LeakageDistribution InformationDistribution(const MetricSpec& m,
                                            const ProbVec& q);

// sup_l |F_a(l) - F_b(l)|, with support points matched at kMergeTolerance.
double KsDistance(const LeakageDistribution& a, const LeakageDistribution& b);

// The closed "standard definition" of each global metric, evaluated
// directly from the joint distribution of `sys` (no posterior, no f).
double StandardGlobalLeakage(const MetricSpec& m, const System& sys);

}  // namespace leakc

#endif  // LEAKC_METRICS_H_
