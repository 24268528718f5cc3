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

#include "leakc/prob.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "leakc/error.h"

namespace leakc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::string> DefaultLabels(char prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::string(1, prefix) + std::to_string(i + 1));
  }
  return labels;
}

}  // namespace

ProbVec ProbVec::Validate(std::vector<double> probs,
                          std::vector<std::string> labels) {
  if (probs.empty()) {
    throw Error(ErrorCode::kEmptyVector, "probability vector is empty");
  }
  if (!labels.empty() && labels.size() != probs.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "label count differs from probability count");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!(probs[i] >= 0.0) || !std::isfinite(probs[i])) {
      std::ostringstream msg;
      msg << "entry " << i << " is " << probs[i];
      throw Error(ErrorCode::kNegativeEntry, msg.str());
    }
    sum += probs[i];
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "entries sum to " << sum;
    throw Error(ErrorCode::kSumOutOfTolerance, msg.str());
  }
  return ProbVec(std::move(probs), std::move(labels));
}

ProbVec ProbVec::PointMass(std::size_t size, std::size_t index) {
  if (size == 0) throw Error(ErrorCode::kEmptyVector, "empty point mass");
  if (index >= size) {
    throw Error(ErrorCode::kInvalidArgument, "point mass index out of range");
  }
  std::vector<double> p(size, 0.0);
  p[index] = 1.0;
  return ProbVec(std::move(p), {});
}

ProbVec ProbVec::Uniform(std::size_t size) {
  if (size == 0) throw Error(ErrorCode::kEmptyVector, "empty uniform vector");
  return ProbVec(std::vector<double>(size, 1.0 / static_cast<double>(size)),
                 {});
}

bool ProbVec::IsStrictlyPositive() const {
  return std::all_of(probs_.begin(), probs_.end(),
                     [](double p) { return p > 0.0; });
}

Channel Channel::Create(std::vector<ProbVec> rows) {
  if (rows.empty()) throw Error(ErrorCode::kEmptyVector, "channel has no rows");
  for (const ProbVec& row : rows) {
    if (row.size() != rows.front().size()) {
      throw Error(ErrorCode::kShapeMismatch, "channel rows differ in length");
    }
  }
  return Channel(std::move(rows));
}

Channel Channel::FromMatrix(const std::vector<std::vector<double>>& rows) {
  std::vector<ProbVec> validated;
  validated.reserve(rows.size());
  for (std::size_t x = 0; x < rows.size(); ++x) {
    try {
      validated.push_back(ProbVec::Validate(rows[x]));
    } catch (const Error& e) {
      throw Error(e.code(),
                  "channel row " + std::to_string(x) + ": " + e.what());
    }
  }
  return Create(std::move(validated));
}

Channel Channel::Compose(const Channel& garble) const {
  if (garble.num_inputs() != num_outputs()) {
    throw Error(ErrorCode::kShapeMismatch,
                "garbling channel needs one row per output symbol");
  }
  std::vector<ProbVec> rows;
  rows.reserve(num_inputs());
  for (const ProbVec& row : rows_) {
    std::vector<double> z(garble.num_outputs(), 0.0);
    for (std::size_t y = 0; y < row.size(); ++y) {
      for (std::size_t k = 0; k < z.size(); ++k) {
        z[k] += row[y] * garble.row(y)[k];
      }
    }
    rows.push_back(ProbVec::Validate(std::move(z)));
  }
  return Channel(std::move(rows));
}

System System::Create(ProbVec prior, Channel channel,
                      std::vector<std::string> x_labels,
                      std::vector<std::string> y_labels) {
  if (prior.size() != channel.num_inputs()) {
    throw Error(ErrorCode::kShapeMismatch,
                "prior has " + std::to_string(prior.size()) +
                    " entries but channel has " +
                    std::to_string(channel.num_inputs()) + " rows");
  }
  if (x_labels.empty()) x_labels = DefaultLabels('x', prior.size());
  if (y_labels.empty()) y_labels = DefaultLabels('y', channel.num_outputs());
  if (x_labels.size() != prior.size() ||
      y_labels.size() != channel.num_outputs()) {
    throw Error(ErrorCode::kShapeMismatch, "label list has the wrong length");
  }
  return System(std::move(prior), std::move(channel), std::move(x_labels),
                std::move(y_labels));
}

ProbVec System::OutputDistribution() const {
  std::vector<double> q(num_y(), 0.0);
  for (std::size_t x = 0; x < num_x(); ++x) {
    for (std::size_t y = 0; y < num_y(); ++y) {
      q[y] += prior_[x] * channel_.row(x)[y];
    }
  }
  return ProbVec::Validate(std::move(q));
}

TypeClass::TypeClass(std::vector<std::uint32_t> counts)
    : counts_(std::move(counts)) {
  for (std::uint32_t c : counts_) n_ += c;
}

std::vector<double> TypeClass::Empirical() const {
  if (n_ == 0) {
    throw Error(ErrorCode::kDomainError, "empirical distribution of n=0");
  }
  std::vector<double> p(counts_.size());
  for (std::size_t y = 0; y < p.size(); ++y) {
    p[y] = static_cast<double>(counts_[y]) / static_cast<double>(n_);
  }
  return p;
}

std::string TypeClass::ToString() const {
  std::string out;
  for (std::size_t y = 0; y < counts_.size(); ++y) {
    if (y > 0) out += '|';
    out += std::to_string(counts_[y]);
  }
  return out;
}

double LogSumExp(std::span<const double> values) {
  if (values.empty()) return -kInf;
  auto top = std::max_element(values.begin(), values.end());
  if (*top == -kInf) return -kInf;
  double rest = 0.0;
  for (auto it = values.begin(); it != values.end(); ++it) {
    if (it != top) rest += std::exp(*it - *top);
  }
  return *top + std::log1p(rest);
}

std::vector<double> LogJointSequence(const System& sys,
                                     const TypeClass& counts) {
  if (counts.size() != sys.num_y()) {
    throw Error(ErrorCode::kLengthMismatch,
                "type has " + std::to_string(counts.size()) +
                    " counts but |Y| = " + std::to_string(sys.num_y()));
  }
  std::vector<double> joint(sys.num_x());
  for (std::size_t x = 0; x < sys.num_x(); ++x) {
    double acc = sys.prior()[x] > 0.0 ? std::log(sys.prior()[x]) : -kInf;
    const ProbVec& row = sys.channel().row(x);
    for (std::size_t y = 0; y < counts.size() && acc > -kInf; ++y) {
      if (counts[y] == 0) continue;
      acc = row[y] > 0.0 ? acc + counts[y] * std::log(row[y]) : -kInf;
    }
    joint[x] = acc;
  }
  return joint;
}

std::vector<double> LogPosteriorFromCounts(const System& sys,
                                           const TypeClass& counts) {
  std::vector<double> joint = LogJointSequence(sys, counts);
  const double norm = LogSumExp(joint);
  if (norm == -kInf) {
    throw Error(ErrorCode::kAllLikelihoodsZero,
                "type " + counts.ToString() +
                    " is impossible under every x with positive prior");
  }
  for (double& v : joint) v -= norm;
  return joint;
}

ProbVec PosteriorFromCounts(const System& sys, const TypeClass& counts) {
  std::vector<double> post = LogPosteriorFromCounts(sys, counts);
  double sum = 0.0;
  for (double& v : post) {
    v = std::exp(v);
    sum += v;
  }
  for (double& v : post) v /= sum;
  return ProbVec::Validate(std::move(post), sys.prior().labels());
}

double LogMultinomial(const TypeClass& counts) {
  double acc = std::lgamma(static_cast<double>(counts.n()) + 1.0);
  for (std::uint32_t c : counts.counts()) {
    acc -= std::lgamma(static_cast<double>(c) + 1.0);
  }
  return acc;
}

double KlDivergence(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kLengthMismatch, "KL divergence of unequal lengths");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return kInf;
    acc += p[i] * std::log(p[i] / q[i]);
  }
  return std::max(0.0, acc / kLn2);
}

double KlDivergence(const ProbVec& p, const ProbVec& q) {
  return KlDivergence(p.probs(), q.probs());
}

double LogOutputMarginal(const System& sys, const TypeClass& t) {
  std::vector<double> joint = LogJointSequence(sys, t);
  return LogMultinomial(t) + LogSumExp(joint);
}

double OutputMarginal(const System& sys, std::uint64_t n, const TypeClass& t) {
  if (t.n() != n) {
    throw Error(
        ErrorCode::kCountMismatch,
        "type " + t.ToString() + " does not sum to n=" + std::to_string(n));
  }
  return std::exp(LogOutputMarginal(sys, t));
}

std::vector<std::size_t> EquivalentRowClasses(const Channel& channel,
                                              double tol) {
  std::vector<std::size_t> mapping(channel.num_inputs());
  std::vector<std::size_t> representatives;
  for (std::size_t x = 0; x < channel.num_inputs(); ++x) {
    std::size_t cls = representatives.size();
    for (std::size_t c = 0; c < representatives.size(); ++c) {
      const ProbVec& a = channel.row(representatives[c]);
      const ProbVec& b = channel.row(x);
      double diff = 0.0;
      for (std::size_t y = 0; y < a.size(); ++y) {
        diff = std::max(diff, std::abs(a[y] - b[y]));
      }
      if (diff <= tol) {
        cls = c;
        break;
      }
    }
    if (cls == representatives.size()) representatives.push_back(x);
    mapping[x] = cls;
  }
  return mapping;
}

MergedSystem MergeEquivalentRows(const System& sys, double tol) {
  if (!(tol >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "merge tolerance must be >= 0");
  }
  std::vector<std::size_t> mapping = EquivalentRowClasses(sys.channel(), tol);
  const std::size_t num_classes =
      mapping.empty() ? 0
                      : *std::max_element(mapping.begin(), mapping.end()) + 1;
  if (num_classes == sys.num_x()) return MergedSystem{sys, std::move(mapping)};

  std::vector<double> prior(num_classes, 0.0);
  std::vector<ProbVec> rows;
  std::vector<std::string> labels(num_classes);
  for (std::size_t x = 0; x < sys.num_x(); ++x) {
    const std::size_t c = mapping[x];
    prior[c] += sys.prior()[x];
    if (c == rows.size()) rows.push_back(sys.channel().row(x));
    labels[c] += (labels[c].empty() ? "" : "+") + sys.x_labels()[x];
  }
  // Summing can drift a few ulps; the inputs were already validated.
  const double total = std::accumulate(prior.begin(), prior.end(), 0.0);
  for (double& p : prior) p /= total;
  System merged = System::Create(ProbVec::Validate(std::move(prior)),
                                 Channel::Create(std::move(rows)),
                                 std::move(labels), sys.y_labels());
  return MergedSystem{std::move(merged), std::move(mapping)};
}

}  // namespace leakc
