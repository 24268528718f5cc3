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

#include "leakc/composition.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "leakc/error.h"
#include "parallel.h"
#include "type_walk.h"

namespace leakc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTieTolerance = 1e-12;

void RequireTwoClasses(const System& sys) {
  if (sys.num_x() < 2) {
    throw Error(ErrorCode::kSingleClass,
                "only one distinguishable x remains; no runner-up exists");
  }
}

// x ordering by D(P||Q_x) with index order inside near-tie runs.
void OrderByDivergence(const System& sys, std::span<const double> empirical,
                       std::vector<std::size_t>& ordering,
                       std::vector<double>& divergences) {
  divergences.resize(sys.num_x());
  for (std::size_t x = 0; x < sys.num_x(); ++x) {
    divergences[x] = KlDivergence(empirical, sys.channel().row(x).probs());
  }
  ordering.resize(sys.num_x());
  std::iota(ordering.begin(), ordering.end(), std::size_t{0});
  std::sort(ordering.begin(), ordering.end(),
            [&](std::size_t a, std::size_t b) {
              if (divergences[a] != divergences[b])
                return divergences[a] < divergences[b];
              return a < b;
            });
  for (std::size_t start = 0; start < ordering.size();) {
    std::size_t end = start + 1;
    const double anchor = divergences[ordering[start]];
    while (end < ordering.size() &&
           (divergences[ordering[end]] == anchor ||
            divergences[ordering[end]] - anchor <= kTieTolerance)) {
      ++end;
    }
    std::sort(ordering.begin() + start, ordering.begin() + end);
    start = end;
  }
}

double RunnerUpGap(const std::vector<std::size_t>& ordering,
                   const std::vector<double>& divergences) {
  const double first = divergences[ordering[0]];
  const double second = divergences[ordering[1]];
  if (first == kInf) return 0.0;
  if (second == kInf) return kInf;
  const double gap = second - first;
  return gap <= kTieTolerance ? 0.0 : gap;
}

double FiniteOrThrow(double v, const TypeClass& t, const MetricSpec& m) {
  if (std::isnan(v) || std::isinf(v)) {
    std::ostringstream msg;
    msg << m.Name() << " is " << v << " on reachable type " << t.ToString();
    throw Error(ErrorCode::kInfiniteLeakage, msg.str());
  }
  return v;
}

// g2(a) - g2(a - delta) for the catalog's g2 families.
double G2Difference(const MetricSpec& m, double a, double delta) {
  switch (m.kind()) {
    case MetricKind::kMutualInformation:
    case MetricKind::kFDivergence:
      return delta;
    default:
      break;
  }
  if (!(a > 0.0) || !(a - delta > 0.0)) {
    throw Error(ErrorCode::kDomainError, m.Name() + ": g2 argument <= 0");
  }
  const double scale =
      (m.kind() == MetricKind::kSibson || m.kind() == MetricKind::kArimoto)
          ? m.alpha() / (m.alpha() - 1.0)
          : 1.0;
  return -scale * std::log1p(-delta / a) / kLn2;
}

struct LimitClass {
  double mass = 0.0;
  std::vector<double> posterior;  // prior restricted to the class
  std::vector<std::size_t> members;
};

// Classes of identical rows with positive prior mass. With distinct rows
// each class is a single x and its posterior is E_x.
std::vector<LimitClass> LimitClasses(const System& sys) {
  const std::vector<std::size_t> mapping =
      EquivalentRowClasses(sys.channel(), kDefaultMergeTolerance);
  const std::size_t num_classes =
      *std::max_element(mapping.begin(), mapping.end()) + 1;
  std::vector<LimitClass> classes(num_classes);
  for (std::size_t x = 0; x < sys.num_x(); ++x) {
    LimitClass& c = classes[mapping[x]];
    c.mass += sys.prior()[x];
    c.members.push_back(x);
  }
  std::erase_if(classes, [](const LimitClass& c) { return c.mass == 0.0; });
  for (LimitClass& c : classes) {
    c.posterior.assign(sys.num_x(), 0.0);
    for (std::size_t x : c.members) c.posterior[x] = sys.prior()[x] / c.mass;
  }
  return classes;
}

double LimitValue(const MetricSpec& m, const System& sys, const LimitClass& c) {
  if (c.members.size() == 1)
    return InformationValue(m, c.members[0], sys.prior());
  return PointwiseF(m, c.posterior, sys.prior().probs());
}

}  // namespace

std::uint64_t CountTypes(std::uint64_t n, std::size_t m) {
  if (m == 0) return 0;
  unsigned __int128 count = 1;
  for (std::size_t k = 1; k < m; ++k) {
    count = count * (n + k) / k;
    if (count > kMaxTypeClasses) return kMaxTypeClasses + 1;
  }
  return static_cast<std::uint64_t>(count);
}

void ForEachType(std::uint64_t n, std::size_t m,
                 const std::function<void(const TypeClass&)>& visit) {
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "empty alphabet");
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kSizeLimit, "n exceeds 32-bit counts");
  }
  std::vector<std::uint32_t> counts(m, 0);
  counts[0] = static_cast<std::uint32_t>(n);
  while (true) {
    visit(TypeClass(counts));
    // Rightmost position before the last that can give up one occurrence.
    std::size_t i = m - 1;
    while (i > 0 && counts[i - 1] == 0) --i;
    if (i == 0) return;
    --i;
    std::uint32_t tail = 0;
    for (std::size_t j = i + 1; j < m; ++j) {
      tail += counts[j];
      counts[j] = 0;
    }
    --counts[i];
    counts[i + 1] = tail + 1;
  }
}

std::vector<TypeClass> EnumerateTypes(std::uint64_t n, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "empty alphabet");
  const std::uint64_t count = CountTypes(n, m);
  if (count > kMaxTypeClasses) {
    throw Error(ErrorCode::kSizeLimit,
                "more than 1e8 type classes for n=" + std::to_string(n) +
                    ", |Y|=" + std::to_string(m));
  }
  std::vector<TypeClass> types;
  types.reserve(count);
  ForEachType(n, m, [&](const TypeClass& t) { types.push_back(t); });
  return types;
}

TypeGeometry ComputeTypeGeometry(const System& sys, const TypeClass& t,
                                 double c_n) {
  RequireTwoClasses(sys);
  if (t.size() != sys.num_y()) {
    throw Error(ErrorCode::kLengthMismatch, "type length != |Y|");
  }
  const std::vector<double> empirical = t.Empirical();
  TypeGeometry geo;
  OrderByDivergence(sys, empirical, geo.ordering, geo.divergences);
  geo.k = RunnerUpGap(geo.ordering, geo.divergences);
  if (geo.k > 0.0) geo.in_domain = geo.ordering.front();
  geo.in_tilde = c_n - geo.divergences[geo.mle()] >=
                 1.0 / std::sqrt(static_cast<double>(t.n()));
  return geo;
}

TypeGeometry ComputeTypeGeometry(const System& sys, const TypeClass& t) {
  if (t.n() == 0) {
    throw Error(ErrorCode::kDomainError, "type geometry needs n >= 1");
  }
  return ComputeTypeGeometry(sys, t, MinRunnerUpDivergence(sys, t.n()));
}

double MinRunnerUpDivergence(const System& input, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kDomainError, "C_n needs n >= 1");
  const System sys = MergeEquivalentRows(input).system;
  RequireTwoClasses(sys);
  double best = kInf;
  internal::MapTypes(
      n, sys.num_y(),
      [&](const TypeClass& t) {
        std::vector<std::size_t> ordering;
        std::vector<double> divergences;
        OrderByDivergence(sys, t.Empirical(), ordering, divergences);
        return divergences[ordering[1]];
      },
      [&](const TypeClass&, double runner_up) {
        best = std::min(best, runner_up);
      });
  return best;
}

std::vector<TypeLeakage> PointwiseByType(const MetricSpec& m, const System& sys,
                                         std::uint64_t n) {
  const auto prior = sys.prior().probs();
  std::vector<TypeLeakage> rows;
  internal::MapTypes(
      n, sys.num_y(),
      [&](const TypeClass& t) {
        internal::TypePosterior tp = internal::EvaluateType(sys, t);
        double leak = 0.0;
        if (tp.prob > 0.0) leak = PointwiseF(m, tp.posterior, prior);
        return std::pair<double, double>(tp.prob, leak);
      },
      [&](const TypeClass& t, std::pair<double, double> r) {
        if (r.first > 0.0) rows.push_back(TypeLeakage{t, r.first, r.second});
      });
  return rows;
}

LeakageDistribution ExactPointwiseDistribution(const MetricSpec& m,
                                               const System& sys,
                                               std::uint64_t n) {
  std::vector<std::pair<double, double>> points;
  for (const TypeLeakage& row : PointwiseByType(m, sys, n)) {
    points.emplace_back(FiniteOrThrow(row.leakage, row.type, m), row.prob);
  }
  return LeakageDistribution::FromWeighted(std::move(points));
}

double CdfL1Distance(const LeakageDistribution& a,
                     const LeakageDistribution& b) {
  std::vector<double> breaks = a.values();
  breaks.insert(breaks.end(), b.values().begin(), b.values().end());
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  internal::CompensatedSum total;
  double fa = 0.0;
  double fb = 0.0;
  std::size_t ia = 0;
  std::size_t ib = 0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    while (ia < a.size() && a.values()[ia] <= breaks[k]) fa += a.probs()[ia++];
    while (ib < b.size() && b.values()[ib] <= breaks[k]) fb += b.probs()[ib++];
    total.Add(std::abs(fa - fb) * (breaks[k + 1] - breaks[k]));
  }
  return total.value();
}

double ExactGlobalLeakage(const MetricSpec& m, const System& sys,
                          std::uint64_t n) {
  const auto prior = sys.prior().probs();
  internal::CompensatedSum expectation;
  internal::MapTypes(
      n, sys.num_y(),
      [&](const TypeClass& t) {
        internal::TypePosterior tp = internal::EvaluateType(sys, t);
        if (tp.prob == 0.0) return 0.0;
        return tp.prob * FiniteOrThrow(HValue(m, tp.posterior, prior), t, m);
      },
      [&](const TypeClass&, double term) { expectation.Add(term); });
  return G2Apply(m, expectation.value());
}

LeakageDistribution LimitDistribution(const MetricSpec& m, const System& sys) {
  std::vector<std::pair<double, double>> points;
  for (const LimitClass& c : LimitClasses(sys)) {
    points.emplace_back(LimitValue(m, sys, c), c.mass);
  }
  return LeakageDistribution::FromWeighted(std::move(points));
}

double GlobalLimit(const MetricSpec& m, const System& sys) {
  internal::CompensatedSum acc;
  for (const LimitClass& c : LimitClasses(sys)) {
    acc.Add(c.mass * G1(m, LimitValue(m, sys, c)));
  }
  return G2Apply(m, acc.value());
}

double GlobalGap(const MetricSpec& m, const System& sys, std::uint64_t n) {
  const std::vector<LimitClass> classes = LimitClasses(sys);
  std::vector<double> h_limit(classes.size());
  internal::CompensatedSum limit_arg;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    h_limit[c] = G1(m, LimitValue(m, sys, classes[c]));
    limit_arg.Add(classes[c].mass * h_limit[c]);
  }
  const auto prior = sys.prior().probs();
  internal::CompensatedSum delta;
  internal::MapTypes(
      n, sys.num_y(),
      [&](const TypeClass& t) {
        internal::TypePosterior tp = internal::EvaluateType(sys, t);
        if (tp.prob == 0.0) return 0.0;
        internal::CompensatedSum chord;
        for (std::size_t c = 0; c < classes.size(); ++c) {
          double weight = 0.0;
          for (std::size_t x : classes[c].members) weight += tp.posterior[x];
          if (weight > 0.0) chord.Add(weight * h_limit[c]);
        }
        chord.Add(-FiniteOrThrow(HValue(m, tp.posterior, prior), t, m));
        return tp.prob * chord.value();
      },
      [&](const TypeClass&, double term) { delta.Add(term); });
  return G2Difference(m, limit_arg.value(), delta.value());
}

}  // namespace leakc
