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

// Finite probability vectors, channels, and the Bayes machinery shared by
// every analysis. Internal accumulation is in natural-log space; anything
// reported to callers as an information quantity is in bits.

#ifndef LEAKC_PROB_H_
#define LEAKC_PROB_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace leakc {

inline constexpr double kSumTolerance = 1e-9;
inline constexpr double kDefaultMergeTolerance = 1e-12;

// A validated probability vector. Entries are non-negative and sum to one
// within kSumTolerance; nothing is ever renormalised behind the caller's back.
class ProbVec {
 public:
  // Throws Error{kEmptyVector, kNegativeEntry, kSumOutOfTolerance}.
  static ProbVec Validate(std::vector<double> probs,
                          std::vector<std::string> labels = {});

  static ProbVec PointMass(std::size_t size, std::size_t index);
  static ProbVec Uniform(std::size_t size);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }
  // Empty when the vector is unlabeled.
  const std::vector<std::string>& labels() const { return labels_; }

  bool IsStrictlyPositive() const;

 private:
  ProbVec(std::vector<double> probs, std::vector<std::string> labels)
      : probs_(std::move(probs)), labels_(std::move(labels)) {}

  std::vector<double> probs_;
  std::vector<std::string> labels_;
};

// Row-stochastic conditional distribution Q_{Y|X}, one row per x.
class Channel {
 public:
  // Throws Error{kEmptyVector} for no rows, kShapeMismatch for ragged rows.
  static Channel Create(std::vector<ProbVec> rows);
  static Channel FromMatrix(const std::vector<std::vector<double>>& rows);

  std::size_t num_inputs() const { return rows_.size(); }
  std::size_t num_outputs() const { return rows_.front().size(); }
  const ProbVec& row(std::size_t x) const { return rows_[x]; }
  const std::vector<ProbVec>& rows() const { return rows_; }

  // Row-stochastic composition Y -> Z; `garble` needs num_outputs() rows.
  Channel Compose(const Channel& garble) const;

 private:
  explicit Channel(std::vector<ProbVec> rows) : rows_(std::move(rows)) {}

  std::vector<ProbVec> rows_;
};

// A joint distribution given as prior over X and channel Q_{Y|X}.
class System {
 public:
  // Throws Error{kShapeMismatch} when the prior length differs from the
  // number of channel rows or a label list has the wrong length.
  static System Create(ProbVec prior, Channel channel,
                       std::vector<std::string> x_labels = {},
                       std::vector<std::string> y_labels = {});

  const ProbVec& prior() const { return prior_; }
  const Channel& channel() const { return channel_; }
  std::size_t num_x() const { return prior_.size(); }
  std::size_t num_y() const { return channel_.num_outputs(); }
  // Always populated; defaults are x1..x|X| and y1..y|Y|.
  const std::vector<std::string>& x_labels() const { return x_labels_; }
  const std::vector<std::string>& y_labels() const { return y_labels_; }

  // Q_Y = sum_x prior(x) Q_x.
  ProbVec OutputDistribution() const;

 private:
  System(ProbVec prior, Channel channel, std::vector<std::string> x_labels,
         std::vector<std::string> y_labels)
      : prior_(std::move(prior)),
        channel_(std::move(channel)),
        x_labels_(std::move(x_labels)),
        y_labels_(std::move(y_labels)) {}

  ProbVec prior_;
  Channel channel_;
  std::vector<std::string> x_labels_;
  std::vector<std::string> y_labels_;
};

// Occurrence counts of a length-n sequence over Y; identifies the type class
// T(P_n) of all sequences sharing the empirical distribution counts/n.
class TypeClass {
 public:
  explicit TypeClass(std::vector<std::uint32_t> counts);

  std::span<const std::uint32_t> counts() const { return counts_; }
  std::uint32_t operator[](std::size_t y) const { return counts_[y]; }
  std::size_t size() const { return counts_.size(); }
  std::uint64_t n() const { return n_; }

  // counts / n; undefined (throws kDomainError) for n == 0.
  std::vector<double> Empirical() const;
  std::string ToString() const;  // "3|1|1"

  friend bool operator==(const TypeClass&, const TypeClass&) = default;

 private:
  std::vector<std::uint32_t> counts_;
  std::uint64_t n_ = 0;
};

// Natural-log posterior ln Q_{X|Y^n=y^n}(x) for any y^n of type `counts`.
// Entries are -inf where the prior is zero or the observation is impossible.
// Throws kLengthMismatch, kAllLikelihoodsZero.
std::vector<double> LogPosteriorFromCounts(const System& sys,
                                           const TypeClass& counts);

ProbVec PosteriorFromCounts(const System& sys, const TypeClass& counts);

// ln of prior(x) * prod_y Q_x(y)^{counts[y]} (no multinomial factor).
std::vector<double> LogJointSequence(const System& sys,
                                     const TypeClass& counts);

// ln of the multinomial coefficient n! / prod counts[y]!.
double LogMultinomial(const TypeClass& counts);

// D(p||q) in bits; 0 log 0/q = 0 and p>0 with q=0 gives +inf.
double KlDivergence(std::span<const double> p, std::span<const double> q);
double KlDivergence(const ProbVec& p, const ProbVec& q);

// Probability that Y^n falls in the type class `t`. Throws kCountMismatch
// unless sum(t) == n, kLengthMismatch unless |t| == |Y|.
double OutputMarginal(const System& sys, std::uint64_t n, const TypeClass& t);
double LogOutputMarginal(const System& sys, const TypeClass& t);

struct MergedSystem {
  System system;
  // mapping[x] is the index in system of the class containing x.
  std::vector<std::size_t> mapping;

  bool merged_any() const { return system.num_x() != mapping.size(); }
};

// Groups x values whose channel rows agree within `tol` (max-abs) and sums
// their prior mass. Classes keep the order of their first member.
MergedSystem MergeEquivalentRows(const System& sys,
                                 double tol = kDefaultMergeTolerance);

// Same grouping applied to the rows of a bare channel.
std::vector<std::size_t> EquivalentRowClasses(const Channel& channel,
                                              double tol);

// log(sum exp(v)) in natural log; -inf for an all -inf input.
double LogSumExp(std::span<const double> values);

inline constexpr double kLn2 = 0.69314718055994530942;

}  // namespace leakc

#endif  // LEAKC_PROB_H_
