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

#include "leakc/axioms.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "leakc/composition.h"
#include "leakc/error.h"
#include "leakc/random.h"

namespace leakc {
namespace {

constexpr double kAbsTolerance = 1e-9;
constexpr double kTieTolerance = 1e-12;
constexpr std::array<double, 2> kA5Scales = {1e-3, 1e-4};

enum Stream : std::uint64_t {
  kStreamA3 = 3,
  kStreamA5 = 5,
  kStreamGlobalMax = 11,
  kStreamDerivative = 14,
  kStreamConvexity = 19,
  kStreamGarble = 23,
};

using Vec = std::vector<double>;

CheckResult MakeResult(std::string name, std::uint64_t samples,
                       double tolerance) {
  CheckResult r;
  r.name = std::move(name);
  r.samples_used = samples;
  r.tolerance = tolerance;
  return r;
}

void RequirePositive(const ProbVec& q) {
  if (!q.IsStrictlyPositive()) {
    throw Error(ErrorCode::kDomainError,
                "axiom checks need a strictly positive prior");
  }
}

Vec Vertex(std::size_t dim, std::size_t i) {
  Vec e(dim, 0.0);
  e[i] = 1.0;
  return e;
}

// E_i + t (U - E_i), clipped at zero against round-off.
Vec Chord(std::size_t i, const Vec& u, double t) {
  Vec p(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double e = j == i ? 1.0 : 0.0;
    p[j] = std::max(0.0, e + t * (u[j] - e));
  }
  return p;
}

Vec QVec(const ProbVec& q) { return Vec(q.probs().begin(), q.probs().end()); }

CheckResult Fail(CheckResult r, Witness w, std::string detail) {
  r.status = CheckStatus::kFail;
  r.witness = std::move(w);
  r.detail = std::move(detail);
  return r;
}

std::string NoViolation(std::uint64_t samples) {
  return "no violation found in " + std::to_string(samples) + " samples";
}

// Random point that is a vertex one time in four, so mixtures also probe
// the faces of the simplex.
Vec SamplePoint(PhiloxStream& rng, std::size_t dim) {
  if (rng.NextUniform() < 0.25) {
    return Vertex(dim, static_cast<std::size_t>(rng.NextUniform() * dim));
  }
  return rng.NextSimplexPoint(dim);
}

CheckResult CheckA1(const PointwiseFunction& f, const Vec& q) {
  CheckResult r = MakeResult("A1", 1, kAbsTolerance);
  const double v = f(q, q);
  if (!(std::abs(v) <= kAbsTolerance)) {
    return Fail(std::move(r), Witness{q, q, {}, v, 0.0}, "f(Q,Q) != 0");
  }
  r.detail = "f(Q,Q) = 0";
  return r;
}

CheckResult CheckA2(const PointwiseFunction& f, const Vec& q) {
  CheckResult r = MakeResult("A2", q.size(), 0.0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Vec e = Vertex(q.size(), i);
    const double v = f(e, q);
    if (!(v > 0.0)) {
      return Fail(std::move(r), Witness{e, q, {}, v, 0.0},
                  "f(E_" + std::to_string(i + 1) + ",Q) <= 0");
    }
  }
  r.detail = "f(E_i,Q) > 0 for every i";
  return r;
}

CheckResult CheckA3(const PointwiseFunction& f, const Vec& q,
                    const AxiomConfig& cfg) {
  CheckResult r = MakeResult("A3", cfg.a3_trials, kAbsTolerance);
  PhiloxStream rng(cfg.seed, kStreamA3);
  const std::size_t dim = q.size();
  const std::size_t max_k = std::max<std::size_t>(2, dim);
  for (std::size_t trial = 0; trial < cfg.a3_trials; ++trial) {
    const std::size_t k =
        2 + static_cast<std::size_t>(rng.NextUniform() * (max_k - 1));
    const Vec weights = rng.NextSimplexPoint(k);
    Vec mix(dim, 0.0);
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < k; ++c) {
      const Vec p = SamplePoint(rng, dim);
      worst = std::max(worst, f(p, q));
      for (std::size_t j = 0; j < dim; ++j) mix[j] += weights[c] * p[j];
    }
    const double v = f(mix, q);
    if (v > worst + kAbsTolerance) {
      return Fail(std::move(r), Witness{mix, q, {}, v, worst},
                  "mixture exceeds the worst component");
    }
  }
  r.detail = NoViolation(cfg.a3_trials);
  return r;
}

CheckResult CheckA4(const PointwiseFunction& f, const Vec& q) {
  CheckResult r = MakeResult("A4", q.size() * q.size(), kAbsTolerance);
  Vec info(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    info[i] = f(Vertex(q.size(), i), q);
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (i == j || q[i] < q[j]) continue;
      if (info[i] > info[j] + kAbsTolerance) {
        return Fail(std::move(r),
                    Witness{Vertex(q.size(), i), q, {}, info[i], info[j]},
                    "q_" + std::to_string(i + 1) + " >= q_" +
                        std::to_string(j + 1) + " but f(E_i) > f(E_j)");
      }
    }
  }
  r.detail = "f(E_i,Q) is non-increasing in q_i";
  return r;
}

CheckResult CheckA5(const PointwiseFunction& f, const Vec& q,
                    const AxiomConfig& cfg) {
  CheckResult r =
      MakeResult("A5", cfg.a5_directions * q.size() * kA5Scales.size(), 0.0);
  PhiloxStream rng(cfg.seed, kStreamA5);
  std::optional<Witness> coarse_only;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double peak = f(Vertex(q.size(), i), q);
    if (!std::isfinite(peak)) {
      r.status = CheckStatus::kInconclusive;
      r.detail = "f(E_i,Q) is not finite";
      return r;
    }
    for (std::size_t d = 0; d < cfg.a5_directions; ++d) {
      Vec u = rng.NextSimplexPoint(q.size());
      if (u[i] >= 1.0) continue;
      for (std::size_t s = 0; s < kA5Scales.size(); ++s) {
        const Vec p = Chord(i, u, kA5Scales[s]);
        const double v = f(p, q);
        if (v < peak) continue;
        Witness w{p, q, u, v, peak};
        if (s + 1 == kA5Scales.size()) {
          return Fail(std::move(r), std::move(w),
                      "moving away from E_" + std::to_string(i + 1) +
                          " does not decrease f at eps=1e-4");
        }
        if (!coarse_only) coarse_only = std::move(w);
      }
    }
  }
  if (coarse_only) {
    r.status = CheckStatus::kInconclusive;
    r.witness = std::move(coarse_only);
    r.detail = "violations only at eps=1e-3; neighbourhood may be smaller";
    return r;
  }
  r.detail = NoViolation(r.samples_used);
  return r;
}

CheckResult CheckGlobalMax(const PointwiseFunction& f, const Vec& q,
                           const AxiomConfig& cfg) {
  CheckResult r =
      MakeResult("global_max_at_vertex", cfg.global_max_samples, kAbsTolerance);
  Vec info(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    info[i] = f(Vertex(q.size(), i), q);
  const double top = *std::max_element(info.begin(), info.end());
  const double q_min = *std::min_element(q.begin(), q.end());
  bool argmax_has_min_q = false;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (info[i] >= top - kAbsTolerance && q[i] <= q_min + kTieTolerance) {
      argmax_has_min_q = true;
    }
  }
  if (!argmax_has_min_q) {
    const auto it = std::max_element(info.begin(), info.end());
    return Fail(std::move(r),
                Witness{Vertex(q.size(), it - info.begin()), q, {}, top, top},
                "maximising extreme point does not have minimal prior");
  }
  PhiloxStream rng(cfg.seed, kStreamGlobalMax);
  for (std::size_t s = 0; s < cfg.global_max_samples; ++s) {
    const Vec p = rng.NextSimplexPoint(q.size());
    const double v = f(p, q);
    if (v > top + kAbsTolerance) {
      return Fail(std::move(r), Witness{p, q, {}, v, top},
                  "interior value exceeds max_i f(E_i,Q)");
    }
  }
  r.detail = NoViolation(cfg.global_max_samples);
  return r;
}

bool HasTiedMaximum(std::span<const double> v) {
  const double top = *std::max_element(v.begin(), v.end());
  return std::count_if(v.begin(), v.end(),
                       [&](double x) { return x >= top - kTieTolerance; }) > 1;
}

PointwiseFunction Bind(const MetricSpec& m) {
  return [m](std::span<const double> p, std::span<const double> q) {
    return PointwiseF(m, p, q);
  };
}

}  // namespace

std::string_view CheckStatusName(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

bool AxiomReport::AllPass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::kPass;
  });
}

bool AxiomReport::AnyFail() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::kFail;
  });
}

const CheckResult* AxiomReport::Find(std::string_view name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

AxiomReport CheckAxioms(const PointwiseFunction& f, const ProbVec& q,
                        const AxiomConfig& cfg) {
  RequirePositive(q);
  const Vec qv = QVec(q);
  AxiomReport report;
  report.subject = "pointwise axioms";
  report.checks.push_back(CheckA1(f, qv));
  report.checks.push_back(CheckA2(f, qv));
  report.checks.push_back(CheckA3(f, qv, cfg));
  report.checks.push_back(CheckA4(f, qv));
  report.checks.push_back(CheckA5(f, qv, cfg));
  report.checks.push_back(CheckGlobalMax(f, qv, cfg));
  return report;
}

AxiomReport CheckAxioms(const MetricSpec& m, const ProbVec& q,
                        const AxiomConfig& cfg) {
  AxiomReport report = CheckAxioms(Bind(m), q, cfg);
  report.subject = m.Name();
  bool tied = false;
  if (m.kind() == MetricKind::kMinEntropy) {
    tied = HasTiedMaximum(q.probs());
  } else if (m.kind() == MetricKind::kGLeakage) {
    Vec gains;
    for (const auto& row : m.gain()->rows()) {
      double acc = 0.0;
      for (std::size_t x = 0; x < q.size(); ++x) acc += q[x] * row[x];
      gains.push_back(acc);
    }
    tied = HasTiedMaximum(gains);
  }
  if (tied) {
    for (CheckResult& c : report.checks) {
      if (c.name == "A5" && c.status == CheckStatus::kPass) {
        c.status = CheckStatus::kInconclusive;
        c.detail = "prior has a tied maximum; strictness not decided";
      }
    }
  }
  return report;
}

AxiomReport CheckDerivativeProperty(const PointwiseFunction& f,
                                    const ProbVec& q,
                                    const DerivativeConfig& cfg) {
  RequirePositive(q);
  const Vec qv = QVec(q);
  const std::size_t dim = qv.size();
  CheckResult random_dirs =
      MakeResult("derivative_property", cfg.directions * dim, cfg.margin);
  CheckResult pairwise =
      MakeResult("pairwise_derivative", dim * (dim - 1), cfg.margin);
  PhiloxStream rng(cfg.seed, kStreamDerivative);

  // Returns false once `result` holds a finding.
  auto probe = [&](CheckResult& result, std::size_t i, const Vec& u) {
    const double base = f(Vertex(dim, i), qv);
    const Vec p = Chord(i, u, 2.0 * cfg.step);
    const double v = f(p, qv);
    if (!std::isfinite(base) || !std::isfinite(v)) {
      result.status = CheckStatus::kInconclusive;
      result.witness = Witness{p, qv, u, v, base};
      result.detail = "numerically singular near E_" + std::to_string(i + 1);
      return false;
    }
    const double slope = (v - base) / (2.0 * cfg.step);
    if (!(slope < -cfg.margin)) {
      result = Fail(
          std::move(result), Witness{p, qv, u, slope, -cfg.margin},
          "non-negative directional derivative at E_" + std::to_string(i + 1));
      return false;
    }
    return true;
  };

  bool ok = true;
  for (std::size_t i = 0; i < dim && ok; ++i) {
    for (std::size_t j = 0; j < dim && ok; ++j) {
      if (j != i) ok = probe(pairwise, i, Vertex(dim, j));
    }
  }
  if (ok) pairwise.detail = "d_j f - d_i f < 0 at every E_i";

  ok = true;
  for (std::size_t i = 0; i < dim && ok; ++i) {
    for (std::size_t d = 0; d < cfg.directions && ok; ++d) {
      const Vec u = rng.NextSimplexPoint(dim);
      if (u[i] < 1.0) ok = probe(random_dirs, i, u);
    }
  }
  if (ok) random_dirs.detail = NoViolation(random_dirs.samples_used);

  AxiomReport report;
  report.subject = "derivative property";
  report.checks.push_back(std::move(random_dirs));
  report.checks.push_back(std::move(pairwise));
  return report;
}

AxiomReport CheckDerivativeProperty(const MetricSpec& m, const ProbVec& q,
                                    const DerivativeConfig& cfg) {
  AxiomReport report = CheckDerivativeProperty(Bind(m), q, cfg);
  report.subject = m.Name();
  return report;
}

AxiomReport CheckHConvexity(const PointwiseFunction& h, const ProbVec& q,
                            std::size_t trials, std::uint64_t seed) {
  RequirePositive(q);
  const Vec qv = QVec(q);
  CheckResult r = MakeResult("h_convexity", trials, kAbsTolerance);
  PhiloxStream rng(seed, kStreamConvexity);
  for (std::size_t t = 0; t < trials; ++t) {
    const Vec p1 = SamplePoint(rng, qv.size());
    const Vec p2 = SamplePoint(rng, qv.size());
    const double lambda = rng.NextUniform();
    Vec mix(qv.size());
    for (std::size_t j = 0; j < mix.size(); ++j) {
      mix[j] = lambda * p1[j] + (1.0 - lambda) * p2[j];
    }
    const double chord = lambda * h(p1, qv) + (1.0 - lambda) * h(p2, qv);
    const double v = h(mix, qv);
    if (std::isnan(chord) || std::isinf(chord)) continue;
    if (!(v <= chord + kAbsTolerance)) {
      Witness w{mix, qv, {}, v, chord};
      w.direction = p1;
      w.direction.insert(w.direction.end(), p2.begin(), p2.end());
      w.direction.push_back(lambda);
      return AxiomReport{
          "h convexity",
          {Fail(std::move(r), std::move(w),
                "h above its chord; direction holds P1, P2, lambda")}};
    }
  }
  r.detail = NoViolation(trials);
  return AxiomReport{"h convexity", {std::move(r)}};
}

AxiomReport CheckHConvexity(const MetricSpec& m, const ProbVec& q,
                            std::size_t trials, std::uint64_t seed) {
  AxiomReport report = CheckHConvexity(
      [m](std::span<const double> p, std::span<const double> qq) {
        return HValue(m, p, qq);
      },
      q, trials, seed);
  report.subject = m.Name();
  return report;
}

AxiomReport CheckDataProcessing(const MetricSpec& m, const System& sys,
                                const Channel& garble,
                                const DataProcessingConfig& cfg) {
  if (garble.num_inputs() != sys.num_y()) {
    throw Error(ErrorCode::kShapeMismatch,
                "garble has " + std::to_string(garble.num_inputs()) +
                    " rows but |Y| = " + std::to_string(sys.num_y()));
  }
  const Vec prior = QVec(sys.prior());
  const double through_y = ExactGlobalLeakage(m, sys, 1);
  CheckResult dpi =
      MakeResult("data_processing", cfg.random_garbles + 1, kAbsTolerance);

  auto through = [&](const Channel& g) {
    const System z = System::Create(sys.prior(), sys.channel().Compose(g));
    return ExactGlobalLeakage(m, z, 1);
  };
  auto flatten = [](const Channel& g) {
    Vec flat;
    for (const ProbVec& row : g.rows()) {
      flat.insert(flat.end(), row.probs().begin(), row.probs().end());
    }
    return flat;
  };

  std::vector<Channel> garbles{garble};
  PhiloxStream rng(cfg.seed, kStreamGarble);
  for (std::size_t t = 0; t < cfg.random_garbles; ++t) {
    const std::size_t nz =
        1 + static_cast<std::size_t>(rng.NextUniform() * (sys.num_y() + 1));
    std::vector<std::vector<double>> rows;
    for (std::size_t y = 0; y < sys.num_y(); ++y) {
      rows.push_back(rng.NextSimplexPoint(nz));
    }
    for (auto& row : rows) {
      double s = 0.0;
      for (double v : row) s += v;
      for (double& v : row) v /= s;
    }
    garbles.push_back(Channel::FromMatrix(rows));
  }
  for (const Channel& g : garbles) {
    const double through_z = through(g);
    if (!(through_z <= through_y + kAbsTolerance)) {
      dpi = Fail(std::move(dpi),
                 Witness{prior, prior, flatten(g), through_z, through_y},
                 "L(X->Z) > L(X->Y); direction holds the garble rows");
      break;
    }
  }
  if (dpi.status == CheckStatus::kPass) {
    dpi.detail = NoViolation(dpi.samples_used);
  }

  CheckResult independence = MakeResult("independence", 1, kAbsTolerance);
  const ProbVec out = sys.OutputDistribution();
  const System indep = System::Create(
      sys.prior(), Channel::Create(std::vector<ProbVec>(sys.num_x(), out)));
  const double l_indep = ExactGlobalLeakage(m, indep, 1);
  if (!(std::abs(l_indep) <= kAbsTolerance)) {
    independence = Fail(std::move(independence),
                        Witness{prior, prior, QVec(out), l_indep, 0.0},
                        "leakage of an independent system is not zero");
  } else {
    independence.detail = "L = 0 when every row equals Q_Y";
  }

  AxiomReport report;
  report.subject = m.Name();
  report.checks.push_back(std::move(dpi));
  report.checks.push_back(std::move(independence));
  return report;
}

}  // namespace leakc
