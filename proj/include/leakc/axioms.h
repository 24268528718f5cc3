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

// Numerical checks of the pointwise axioms and the global constraints.
//
// Every check samples; a pass means no violation was found in the reported
// number of samples, not a proof. Reports are deterministic in the seed.
//
//   A1  f(Q,Q) = 0
//   A2  f(E_i,Q) > 0
//   A3  f(sum l_k P_k, Q) <= max_k f(P_k, Q)
//   A4  q_i >= q_j  =>  f(E_i,Q) <= f(E_j,Q)
//   A5  f(E_i,Q) is a strict local maximum of f(.,Q)

#ifndef LEAKC_AXIOMS_H_
#define LEAKC_AXIOMS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leakc/metrics.h"
#include "leakc/prob.h"

namespace leakc {

enum class CheckStatus { kPass, kFail, kInconclusive };

std::string_view CheckStatusName(CheckStatus status);

// Inputs that reproduce a finding: f evaluated at (p, q) gave `observed`
// where the check required a value on the right side of `bound`.
struct Witness {
  std::vector<double> p;
  std::vector<double> q;
  std::vector<double> direction;  // empty unless the check is directional
  double observed = 0.0;
  double bound = 0.0;
};

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::optional<Witness> witness;
  std::uint64_t samples_used = 0;
  double tolerance = 0.0;
  std::string detail;
};

struct AxiomReport {
  std::string subject;
  std::vector<CheckResult> checks;

  bool AllPass() const;
  bool AnyFail() const;
  const CheckResult* Find(std::string_view name) const;
};

using PointwiseFunction =
    std::function<double(std::span<const double>, std::span<const double>)>;

struct AxiomConfig {
  std::uint64_t seed = 1;
  std::size_t a3_trials = 200;
  std::size_t a5_directions = 100;
  std::size_t global_max_samples = 500;
};

// Checks A1-A5 and that the maximum sits at an extreme point. q must be
// strictly positive (kDomainError).
AxiomReport CheckAxioms(const PointwiseFunction& f, const ProbVec& q,
                        const AxiomConfig& cfg = {});
// Catalog overload; A5 is inconclusive for max-based metrics whose prior has
// a tied maximum.
AxiomReport CheckAxioms(const MetricSpec& m, const ProbVec& q,
                        const AxiomConfig& cfg = {});

struct DerivativeConfig {
  std::uint64_t seed = 1;
  std::size_t directions = 100;
  double step = 1e-6;
  double margin = 1e-8;
};

// Directional derivatives at every E_i along chords towards U, estimated by
// a central difference centred one step inside the simplex:
//   (f(E_i + 2h(U - E_i)) - f(E_i)) / 2h  <  -margin.
// U = E_j gives the pairwise gradient form d_j f - d_i f < 0. Non-finite
// values near E_i make the check inconclusive (numerically singular).
AxiomReport CheckDerivativeProperty(const PointwiseFunction& f,
                                    const ProbVec& q,
                                    const DerivativeConfig& cfg = {});
AxiomReport CheckDerivativeProperty(const MetricSpec& m, const ProbVec& q,
                                    const DerivativeConfig& cfg = {});

// h(l P1 + (1-l) P2) <= l h(P1) + (1-l) h(P2) + 1e-9 on random triples.
AxiomReport CheckHConvexity(const PointwiseFunction& h, const ProbVec& q,
                            std::size_t trials = 200, std::uint64_t seed = 1);
AxiomReport CheckHConvexity(const MetricSpec& m, const ProbVec& q,
                            std::size_t trials = 200, std::uint64_t seed = 1);

struct DataProcessingConfig {
  std::uint64_t seed = 1;
  std::size_t random_garbles = 20;
};

// L(X->Z) <= L(X->Y) + 1e-9 for Z = garble(Y) and for random garbles, plus
// L = 0 on the system with every row replaced by Q_Y. Throws kShapeMismatch
// when garble does not have |Y| rows.
AxiomReport CheckDataProcessing(const MetricSpec& m, const System& sys,
                                const Channel& garble,
                                const DataProcessingConfig& cfg = {});

}  // namespace leakc

#endif  // LEAKC_AXIOMS_H_
