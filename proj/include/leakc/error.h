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

#ifndef LEAKC_ERROR_H_
#define LEAKC_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace leakc {

// Numeric values are part of the C ABI (see leakc.h); append only.
enum class ErrorCode : int {
  kOk = 0,
  kNegativeEntry = 1,
  kSumOutOfTolerance = 2,
  kEmptyVector = 3,
  kLengthMismatch = 4,
  kAllLikelihoodsZero = 5,
  kCountMismatch = 6,
  kAlphaOutOfRange = 7,
  kDomainError = 8,
  kZeroPriorRealisation = 9,
  kNumericallySingular = 10,
  kShapeMismatch = 11,
  kSizeLimit = 12,
  kInfiniteLeakage = 13,
  kSingleClass = 14,
  kInsufficientPoints = 15,
  kNonPositiveGap = 16,
  kInvalidArgument = 17,
  kParseError = 18,
  kIoError = 19,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace leakc

#endif  // LEAKC_ERROR_H_
