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

// Exact composition over n i.i.d. observations by the method of types.
//
// A posterior after y^n depends on y^n only through its type (occurrence
// counts), so every n-fold quantity here is a finite sum over the
// C(n+|Y|-1, |Y|-1) type classes, walked in descending lexicographic order
// ((n,0,..,0) first). Entry points taking a System group identical channel
// rows first (see MergeEquivalentRows).

#ifndef LEAKC_COMPOSITION_H_
#define LEAKC_COMPOSITION_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "leakc/metrics.h"
#include "leakc/prob.h"

namespace leakc {

inline constexpr std::uint64_t kMaxTypeClasses = 100'000'000;

// C(n+m-1, m-1), saturating at kMaxTypeClasses + 1.
std::uint64_t CountTypes(std::uint64_t n, std::size_t m);

// Throws kSizeLimit beyond kMaxTypeClasses, kInvalidArgument for m == 0.
std::vector<TypeClass> EnumerateTypes(std::uint64_t n, std::size_t m);

// Visits the same sequence as EnumerateTypes without materialising it.
void ForEachType(std::uint64_t n, std::size_t m,
                 const std::function<void(const TypeClass&)>& visit);

struct TypeGeometry {
  // x indices by ascending D(P_n||Q_x); near-ties (1e-12 bits) keep index
  // order so ordering.front() is the maximum-likelihood estimate x*.
  std::vector<std::size_t> ordering;
  // D(P_n||Q_x) in bits, indexed by x.
  std::vector<double> divergences;
  // K(P_n) = D(P_n||Q_{x_2}) - D(P_n||Q_{x*}) >= 0.
  double k = 0.0;
  // The x whose domain D_x strictly contains P_n, if any.
  std::optional<std::size_t> in_domain;
  // C_n - D(P_n||Q_{x_1}) >= 1/sqrt(n).
  bool in_tilde = false;

  std::size_t mle() const { return ordering.front(); }
};

// Needs n >= 1 and at least two channel rows (kDomainError, kSingleClass).
// The overload without c_n recomputes C_n by enumeration.
TypeGeometry ComputeTypeGeometry(const System& sys, const TypeClass& t,
                                 double c_n);
TypeGeometry ComputeTypeGeometry(const System& sys, const TypeClass& t);

// C_n = min over types of D(P_n||Q_{x_2(P_n)}), in bits.
double MinRunnerUpDivergence(const System& sys, std::uint64_t n);

struct TypeLeakage {
  TypeClass type;
  double prob = 0.0;     // Pr{Y^n in T(P_n)}
  double leakage = 0.0;  // f(Q_{X|Y^n}, Q_X), bits
};

// Per-type pointwise leakage on the merged system, in enumeration order.
std::vector<TypeLeakage> PointwiseByType(const MetricSpec& m, const System& sys,
                                         std::uint64_t n);

// Exact law of L_n. Throws kSizeLimit and kInfiniteLeakage.
LeakageDistribution ExactPointwiseDistribution(const MetricSpec& m,
                                               const System& sys,
                                               std::uint64_t n);

// Integral of |F_a - F_b| over the union of the two supports.
double CdfL1Distance(const LeakageDistribution& a,
                     const LeakageDistribution& b);

// L_n = g2( sum_t Pr(t) h(posterior_t, prior) ).
double ExactGlobalLeakage(const MetricSpec& m, const System& sys,
                          std::uint64_t n);

// L_inf = g2( sum_x Q_X(x) g1(f(E_x, Q_X)) ).
// Law of the limiting pointwise leakage. Rows that coincide form one class
// whose limiting posterior is the prior restricted to that class, so with
// distinct rows this equals InformationDistribution(m, sys.prior()).
LeakageDistribution LimitDistribution(const MetricSpec& m, const System& sys);

double GlobalLimit(const MetricSpec& m, const System& sys);

// L_inf - L_n accumulated as sum_t Pr(t) [sum_x post_t(x) h(E_x) - h(post_t)],
// which stays accurate when the gap is many orders below L_inf.
double GlobalGap(const MetricSpec& m, const System& sys, std::uint64_t n);

}  // namespace leakc

#endif  // LEAKC_COMPOSITION_H_
