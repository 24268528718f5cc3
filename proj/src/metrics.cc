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

#include "leakc/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "leakc/error.h"

namespace leakc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void CheckAlpha(double alpha) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    std::ostringstream msg;
    msg << "alpha must lie in (1, inf), got " << alpha;
    throw Error(ErrorCode::kAlphaOutOfRange, msg.str());
  }
}

double Log2(double v) { return std::log2(v); }

// log2 sum_i p_i^a q_i^(1-a), the Renyi-type sum behind Sibson's f.
double SibsonF(std::span<const double> p, std::span<const double> q,
               double alpha) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return kInf;
    acc += q[i] * std::pow(p[i] / q[i], alpha);
  }
  return Log2(acc);
}

double MaxRatioF(std::span<const double> p, std::span<const double> q) {
  double best = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (q[i] > 0.0) best = std::max(best, p[i] / q[i]);
  }
  return Log2(best);
}

double ArimotoF(std::span<const double> p, std::span<const double> q,
                double alpha) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) num += std::pow(p[i], alpha);
    if (q[i] > 0.0) den += std::pow(q[i], alpha);
  }
  return Log2(num) - Log2(den);
}

double MinEntropyF(std::span<const double> p, std::span<const double> q) {
  return Log2(*std::max_element(p.begin(), p.end())) -
         Log2(*std::max_element(q.begin(), q.end()));
}

double FDivergenceF(FDivergenceKind kind, std::span<const double> p,
                    std::span<const double> q) {
  switch (kind) {
    case FDivergenceKind::kKl:
      return KlDivergence(p, q);
    case FDivergenceKind::kChiSquared: {
      double acc = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0.0) continue;
        if (q[i] <= 0.0) return kInf;
        acc += p[i] * p[i] / q[i];
      }
      return acc - 1.0;
    }
    case FDivergenceKind::kSquaredHellinger: {
      double acc = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        const double d =
            std::sqrt(std::max(p[i], 0.0)) - std::sqrt(std::max(q[i], 0.0));
        acc += d * d;
      }
      return acc;
    }
  }
  return 0.0;
}

std::string FormatAlpha(double alpha) {
  std::ostringstream out;
  out.precision(15);
  out << alpha;
  return out.str();
}

}  // namespace

GainMatrix GainMatrix::Create(std::vector<std::vector<double>> gains) {
  if (gains.empty() || gains.front().empty()) {
    throw Error(ErrorCode::kEmptyVector, "gain matrix is empty");
  }
  const std::size_t width = gains.front().size();
  std::vector<bool> column_positive(width, false);
  for (const auto& row : gains) {
    if (row.size() != width) {
      throw Error(ErrorCode::kShapeMismatch, "gain matrix rows differ");
    }
    for (std::size_t x = 0; x < width; ++x) {
      if (!(row[x] >= 0.0) || !std::isfinite(row[x])) {
        throw Error(ErrorCode::kNegativeEntry,
                    "gain entries must be finite and non-negative");
      }
      if (row[x] > 0.0) column_positive[x] = true;
    }
  }
  for (std::size_t x = 0; x < width; ++x) {
    if (!column_positive[x]) {
      throw Error(ErrorCode::kDomainError, "gain column " + std::to_string(x) +
                                               " has no positive entry");
    }
  }
  return GainMatrix(std::move(gains));
}

GainMatrix GainMatrix::Identity(std::size_t num_x) {
  std::vector<std::vector<double>> gains(num_x, std::vector<double>(num_x));
  for (std::size_t i = 0; i < num_x; ++i) gains[i][i] = 1.0;
  return Create(std::move(gains));
}

double GainMatrix::BestExpectedGain(std::span<const double> p) const {
  if (p.size() != num_x()) {
    throw Error(ErrorCode::kLengthMismatch,
                "gain matrix expects " + std::to_string(num_x()) +
                    " secrets, got " + std::to_string(p.size()));
  }
  double best = -kInf;
  for (const auto& row : gains_) {
    double acc = 0.0;
    for (std::size_t x = 0; x < row.size(); ++x) acc += p[x] * row[x];
    best = std::max(best, acc);
  }
  return best;
}

MetricSpec MetricSpec::MutualInformation() {
  return MetricSpec(MetricKind::kMutualInformation);
}

MetricSpec MetricSpec::Sibson(double alpha) {
  CheckAlpha(alpha);
  MetricSpec m(MetricKind::kSibson);
  m.alpha_ = alpha;
  return m;
}

MetricSpec MetricSpec::Arimoto(double alpha) {
  CheckAlpha(alpha);
  MetricSpec m(MetricKind::kArimoto);
  m.alpha_ = alpha;
  return m;
}

MetricSpec MetricSpec::MaximalLeakage() {
  return MetricSpec(MetricKind::kMaximalLeakage);
}

MetricSpec MetricSpec::MinEntropy() {
  return MetricSpec(MetricKind::kMinEntropy);
}

MetricSpec MetricSpec::FDivergence(FDivergenceKind kind) {
  MetricSpec m(MetricKind::kFDivergence);
  m.fdiv_ = kind;
  return m;
}

MetricSpec MetricSpec::GLeakage(GainMatrix gain) {
  MetricSpec m(MetricKind::kGLeakage);
  m.gain_ = std::move(gain);
  return m;
}

std::string MetricSpec::Name() const {
  switch (kind_) {
    case MetricKind::kMutualInformation:
      return "mutual_information";
    case MetricKind::kSibson:
      return "sibson(alpha=" + FormatAlpha(alpha_) + ")";
    case MetricKind::kArimoto:
      return "arimoto(alpha=" + FormatAlpha(alpha_) + ")";
    case MetricKind::kMaximalLeakage:
      return "maximal_leakage";
    case MetricKind::kMinEntropy:
      return "min_entropy";
    case MetricKind::kFDivergence:
      switch (fdiv_) {
        case FDivergenceKind::kKl:
          return "f_divergence(kl)";
        case FDivergenceKind::kChiSquared:
          return "f_divergence(chi_squared)";
        case FDivergenceKind::kSquaredHellinger:
          return "f_divergence(squared_hellinger)";
      }
      break;
    case MetricKind::kGLeakage:
      return "g_leakage";
  }
  return "unknown";
}

std::vector<MetricSpec> DefaultCatalog(std::size_t num_x) {
  return {
      MetricSpec::MutualInformation(),
      MetricSpec::Sibson(2.0),
      MetricSpec::Arimoto(2.0),
      MetricSpec::MaximalLeakage(),
      MetricSpec::MinEntropy(),
      MetricSpec::FDivergence(FDivergenceKind::kKl),
      MetricSpec::FDivergence(FDivergenceKind::kChiSquared),
      MetricSpec::FDivergence(FDivergenceKind::kSquaredHellinger),
      MetricSpec::GLeakage(GainMatrix::Identity(num_x)),
  };
}

double PointwiseF(const MetricSpec& m, std::span<const double> p,
                  std::span<const double> q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "posterior and prior lengths differ");
  }
  switch (m.kind()) {
    case MetricKind::kMutualInformation:
      return KlDivergence(p, q);
    case MetricKind::kSibson:
      CheckAlpha(m.alpha());
      return SibsonF(p, q, m.alpha());
    case MetricKind::kArimoto:
      CheckAlpha(m.alpha());
      return ArimotoF(p, q, m.alpha());
    case MetricKind::kMaximalLeakage:
      return MaxRatioF(p, q);
    case MetricKind::kMinEntropy:
      return MinEntropyF(p, q);
    case MetricKind::kFDivergence:
      return FDivergenceF(m.fdiv_kind(), p, q);
    case MetricKind::kGLeakage:
      return Log2(m.gain()->BestExpectedGain(p)) -
             Log2(m.gain()->BestExpectedGain(q));
  }
  return 0.0;
}

double PointwiseF(const MetricSpec& m, const ProbVec& p, const ProbVec& q) {
  return PointwiseF(m, p.probs(), q.probs());
}

double G1(const MetricSpec& m, double z) {
  switch (m.kind()) {
    case MetricKind::kMutualInformation:
    case MetricKind::kFDivergence:
      return z;
    case MetricKind::kSibson:
    case MetricKind::kArimoto:
      return std::exp2(z / m.alpha());
    case MetricKind::kMaximalLeakage:
    case MetricKind::kMinEntropy:
    case MetricKind::kGLeakage:
      return std::exp2(z);
  }
  return z;
}

double G2Apply(const MetricSpec& m, double z) {
  switch (m.kind()) {
    case MetricKind::kMutualInformation:
    case MetricKind::kFDivergence:
      return z;
    case MetricKind::kSibson:
    case MetricKind::kArimoto:
    case MetricKind::kMaximalLeakage:
    case MetricKind::kMinEntropy:
    case MetricKind::kGLeakage:
      break;
  }
  if (!(z > 0.0)) {
    std::ostringstream msg;
    msg << m.Name() << ": g2 needs z > 0, got " << z;
    throw Error(ErrorCode::kDomainError, msg.str());
  }
  const double scale =
      (m.kind() == MetricKind::kSibson || m.kind() == MetricKind::kArimoto)
          ? m.alpha() / (m.alpha() - 1.0)
          : 1.0;
  return scale * Log2(z);
}

double HValue(const MetricSpec& m, std::span<const double> p,
              std::span<const double> q) {
  return G1(m, PointwiseF(m, p, q));
}

double InformationValue(const MetricSpec& m, std::size_t x, const ProbVec& q) {
  if (x >= q.size()) {
    throw Error(ErrorCode::kInvalidArgument, "realisation index out of range");
  }
  if (q[x] <= 0.0) {
    throw Error(ErrorCode::kZeroPriorRealisation,
                "realisation " + std::to_string(x) + " has zero prior");
  }
  const ProbVec point = ProbVec::PointMass(q.size(), x);
  return PointwiseF(m, point, q);
}

LeakageDistribution LeakageDistribution::FromWeighted(
    std::vector<std::pair<double, double>> points) {
  std::erase_if(points, [](const auto& pt) { return pt.second == 0.0; });
  double mass = 0.0;
  for (const auto& [value, prob] : points) {
    if (!(prob >= 0.0)) {
      throw Error(ErrorCode::kNegativeEntry, "negative leakage probability");
    }
    if (!std::isfinite(value)) {
      std::ostringstream msg;
      msg << "leakage value " << value << " carries probability " << prob;
      throw Error(ErrorCode::kInfiniteLeakage, msg.str());
    }
    mass += prob;
  }
  if (std::abs(mass - 1.0) > kSumTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "leakage distribution mass is " << mass;
    throw Error(ErrorCode::kSumOutOfTolerance, msg.str());
  }
  std::sort(points.begin(), points.end());
  // Runs are anchored at their smallest member and represented by their
  // probability-weighted mean, which keeps E[L] unchanged by the merge.
  LeakageDistribution dist;
  double anchor = 0.0;
  double weighted = 0.0;
  for (const auto& [value, prob] : points) {
    if (!dist.values_.empty() && value - anchor < kMergeTolerance) {
      dist.probs_.back() += prob;
      weighted += prob * value;
      dist.values_.back() = weighted / dist.probs_.back();
    } else {
      anchor = value;
      weighted = prob * value;
      dist.values_.push_back(value);
      dist.probs_.push_back(prob);
    }
  }
  return dist;
}

LeakageDistribution LeakageDistribution::PointMass(double value) {
  return FromWeighted({{value, 1.0}});
}

double LeakageDistribution::Cdf(double l) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < values_.size() && values_[i] <= l; ++i) {
    acc += probs_[i];
  }
  return std::min(acc, 1.0);
}

LeakageDistribution InformationDistribution(const MetricSpec& m,
                                            const ProbVec& q) {
  std::vector<std::pair<double, double>> points;
  for (std::size_t x = 0; x < q.size(); ++x) {
    if (q[x] > 0.0) points.emplace_back(InformationValue(m, x, q), q[x]);
  }
  return LeakageDistribution::FromWeighted(std::move(points));
}

double KsDistance(const LeakageDistribution& a, const LeakageDistribution& b) {
  std::vector<double> breaks = a.values();
  breaks.insert(breaks.end(), b.values().begin(), b.values().end());
  double sup = 0.0;
  for (double l : breaks) {
    const double probe = l + LeakageDistribution::kMergeTolerance / 2;
    sup = std::max(sup, std::abs(a.Cdf(probe) - b.Cdf(probe)));
  }
  return sup;
}

double StandardGlobalLeakage(const MetricSpec& m, const System& sys) {
  const std::size_t nx = sys.num_x();
  const std::size_t ny = sys.num_y();
  const ProbVec& prior = sys.prior();
  const ProbVec out = sys.OutputDistribution();
  auto joint = [&](std::size_t x, std::size_t y) {
    return prior[x] * sys.channel().row(x)[y];
  };

  switch (m.kind()) {
    case MetricKind::kMutualInformation:
      break;
    case MetricKind::kSibson: {
      const double a = m.alpha();
      double outer = 0.0;
      for (std::size_t y = 0; y < ny; ++y) {
        double inner = 0.0;
        for (std::size_t x = 0; x < nx; ++x) {
          inner += prior[x] * std::pow(sys.channel().row(x)[y], a);
        }
        outer += std::pow(inner, 1.0 / a);
      }
      return a / (a - 1.0) * Log2(outer);
    }
    case MetricKind::kArimoto: {
      const double a = m.alpha();
      double norm = 0.0;
      for (std::size_t x = 0; x < nx; ++x) norm += std::pow(prior[x], a);
      double outer = 0.0;
      for (std::size_t y = 0; y < ny; ++y) {
        double inner = 0.0;
        for (std::size_t x = 0; x < nx; ++x) {
          inner += std::pow(prior[x], a) * std::pow(sys.channel().row(x)[y], a);
        }
        outer += std::pow(inner / norm, 1.0 / a);
      }
      return a / (a - 1.0) * Log2(outer);
    }
    case MetricKind::kMaximalLeakage: {
      double acc = 0.0;
      for (std::size_t y = 0; y < ny; ++y) {
        double best = 0.0;
        for (std::size_t x = 0; x < nx; ++x) {
          if (prior[x] > 0.0) best = std::max(best, sys.channel().row(x)[y]);
        }
        acc += best;
      }
      return Log2(acc);
    }
    case MetricKind::kMinEntropy: {
      double acc = 0.0;
      for (std::size_t y = 0; y < ny; ++y) {
        double best = 0.0;
        for (std::size_t x = 0; x < nx; ++x) best = std::max(best, joint(x, y));
        acc += best;
      }
      const auto probs = prior.probs();
      return Log2(acc) - Log2(*std::max_element(probs.begin(), probs.end()));
    }
    case MetricKind::kFDivergence:
      switch (m.fdiv_kind()) {
        case FDivergenceKind::kKl:
          break;
        case FDivergenceKind::kChiSquared: {
          double acc = 0.0;
          for (std::size_t x = 0; x < nx; ++x) {
            for (std::size_t y = 0; y < ny; ++y) {
              const double j = joint(x, y);
              if (j > 0.0) acc += j * j / (prior[x] * out[y]);
            }
          }
          return acc - 1.0;
        }
        case FDivergenceKind::kSquaredHellinger: {
          double acc = 0.0;
          for (std::size_t x = 0; x < nx; ++x) {
            for (std::size_t y = 0; y < ny; ++y) {
              const double d =
                  std::sqrt(joint(x, y)) - std::sqrt(prior[x] * out[y]);
              acc += d * d;
            }
          }
          return acc;
        }
      }
      break;
    case MetricKind::kGLeakage: {
      const GainMatrix& gain = *m.gain();
      if (gain.num_x() != nx) {
        throw Error(ErrorCode::kLengthMismatch, "gain matrix width != |X|");
      }
      double acc = 0.0;
      std::vector<double> column(nx);
      for (std::size_t y = 0; y < ny; ++y) {
        for (std::size_t x = 0; x < nx; ++x) column[x] = joint(x, y);
        acc += gain.BestExpectedGain(column);
      }
      return Log2(acc) - Log2(gain.BestExpectedGain(prior.probs()));
    }
  }

  // Mutual information (also the KL f-divergence).
  double acc = 0.0;
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      const double j = joint(x, y);
      if (j > 0.0) acc += j * Log2(j / (prior[x] * out[y]));
    }
  }
  return acc;
}

}  // namespace leakc
