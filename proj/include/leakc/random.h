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

// Counter-based random streams. The generator is Philox4x32-10 (Salmon et
// al., SC'11, as in Random123 1.14); golden simulation outputs depend on it,
// so any change here is a format change.

#ifndef LEAKC_RANDOM_H_
#define LEAKC_RANDOM_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace leakc {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

// One Philox4x32-10 block.
PhiloxCounter Philox4x32(PhiloxCounter counter, PhiloxKey key);

// Stream `stream_id` of generator `seed`: key = seed, counter words 2..3 =
// stream_id, counter words 0..1 = block index. Independent of call order
// across streams, so trial i always sees the same numbers.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint32_t NextU32();
  std::uint64_t NextU64();
  // Uniform on [0, 1) with 53 random bits.
  double NextUniform();
  // Index drawn from `probs` by inverse CDF; never returns a zero-mass index.
  std::size_t NextCategorical(const std::vector<double>& probs);
  // Uniform point on the probability simplex (flat Dirichlet).
  std::vector<double> NextSimplexPoint(std::size_t dim);

 private:
  PhiloxKey key_;
  PhiloxCounter counter_;
  PhiloxCounter block_{};
  std::size_t used_ = 4;
};

}  // namespace leakc

#endif  // LEAKC_RANDOM_H_
