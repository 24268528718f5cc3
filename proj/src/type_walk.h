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

#ifndef LEAKC_SRC_TYPE_WALK_H_
#define LEAKC_SRC_TYPE_WALK_H_

#include <cmath>
#include <cstdint>
#include <limits>
#include <type_traits>
#include <utility>
#include <vector>

#include "leakc/composition.h"
#include "leakc/prob.h"
#include "parallel.h"

namespace leakc::internal {

// Evaluates eval(t) for every type in parallel chunks, then hands results to
// consume(t, result) strictly in enumeration order.
template <typename Eval, typename Consume>
void MapTypes(std::uint64_t n, std::size_t m, Eval&& eval, Consume&& consume) {
  using Result = std::invoke_result_t<Eval&, const TypeClass&>;
  constexpr std::size_t kChunk = std::size_t{1} << 15;
  if (CountTypes(n, m) > kMaxTypeClasses) EnumerateTypes(n, m);  // throws
  std::vector<TypeClass> chunk;
  std::vector<Result> results;
  auto flush = [&] {
    results.assign(chunk.size(), Result{});
    ParallelFor(chunk.size(),
                [&](std::size_t i) { results[i] = eval(chunk[i]); });
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      consume(chunk[i], std::move(results[i]));
    }
    chunk.clear();
  };
  ForEachType(n, m, [&](const TypeClass& t) {
    chunk.push_back(t);
    if (chunk.size() == kChunk) flush();
  });
  flush();
}

// Probability of a type class and the posterior it induces.
struct TypePosterior {
  double prob = 0.0;
  std::vector<double> posterior;  // empty when prob == 0
};

inline TypePosterior EvaluateType(const System& sys, const TypeClass& t) {
  std::vector<double> joint = LogJointSequence(sys, t);
  const double norm = LogSumExp(joint);
  TypePosterior out;
  if (norm == -std::numeric_limits<double>::infinity()) return out;
  out.prob = std::exp(LogMultinomial(t) + norm);
  out.posterior.resize(joint.size());
  double sum = 0.0;
  for (std::size_t x = 0; x < joint.size(); ++x) {
    out.posterior[x] = std::exp(joint[x] - norm);
    sum += out.posterior[x];
  }
  for (double& v : out.posterior) v /= sum;
  return out;
}

}  // namespace leakc::internal

#endif  // LEAKC_SRC_TYPE_WALK_H_
