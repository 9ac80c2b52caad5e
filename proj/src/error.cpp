// Copyright 2026 The photon-purify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "photon_purify/error.hpp"

namespace photon {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kModeMismatch: return "ModeMismatch";
    case ErrorCode::kCutoffExceeded: return "CutoffExceeded";
    case ErrorCode::kZeroState: return "ZeroState";
    case ErrorCode::kNotUnitary: return "NotUnitary";
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kDuplicateMode: return "DuplicateMode";
    case ErrorCode::kPurityViolated: return "PurityViolated";
  }
  return "Unknown";
}

}  // namespace photon
