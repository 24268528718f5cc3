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

#include "leakc/error.h"

namespace leakc {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk:
      return "Ok";
    case ErrorCode::kNegativeEntry:
      return "NegativeEntry";
    case ErrorCode::kSumOutOfTolerance:
      return "SumOutOfTolerance";
    case ErrorCode::kEmptyVector:
      return "EmptyVector";
    case ErrorCode::kLengthMismatch:
      return "LengthMismatch";
    case ErrorCode::kAllLikelihoodsZero:
      return "AllLikelihoodsZero";
    case ErrorCode::kCountMismatch:
      return "CountMismatch";
    case ErrorCode::kAlphaOutOfRange:
      return "AlphaOutOfRange";
    case ErrorCode::kDomainError:
      return "DomainError";
    case ErrorCode::kZeroPriorRealisation:
      return "ZeroPriorRealisation";
    case ErrorCode::kNumericallySingular:
      return "NumericallySingular";
    case ErrorCode::kShapeMismatch:
      return "ShapeMismatch";
    case ErrorCode::kSizeLimit:
      return "SizeLimit";
    case ErrorCode::kInfiniteLeakage:
      return "InfiniteLeakage";
    case ErrorCode::kSingleClass:
      return "SingleClass";
    case ErrorCode::kInsufficientPoints:
      return "InsufficientPoints";
    case ErrorCode::kNonPositiveGap:
      return "NonPositiveGap";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kIoError:
      return "IoError";
  }
  return "Unknown";
}

}  // namespace leakc
