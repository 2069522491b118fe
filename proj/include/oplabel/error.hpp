// Copyright 2026 The oplabel Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oplabel {

// Every failure the library reports carries one of these codes. The CLI maps
// them one-to-one onto process exit codes (see docs/exit_codes.md).
enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kNotComplete,
  kNotEdgeFriendly,
  kExcludedOrder,
  kEvenOrder,
  kDisconnected,
  kOddSize,
  kEmptyGraph,
  kCapExceeded,
  kUnbalancedMove,
  kInvariantViolation,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kNotComplete: return "not_complete";
    case ErrorCode::kNotEdgeFriendly: return "not_edge_friendly";
    case ErrorCode::kExcludedOrder: return "excluded_order";
    case ErrorCode::kEvenOrder: return "even_order";
    case ErrorCode::kDisconnected: return "disconnected";
    case ErrorCode::kOddSize: return "odd_size";
    case ErrorCode::kEmptyGraph: return "empty_graph";
    case ErrorCode::kCapExceeded: return "cap_exceeded";
    case ErrorCode::kUnbalancedMove: return "unbalanced_move";
    case ErrorCode::kInvariantViolation: return "invariant_violation";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown when an algorithm whose termination or applicability is guaranteed
// by construction finds itself without a move. Always indicates a bug.
inline Error invariant_violation(const std::string& what) {
  return Error(ErrorCode::kInvariantViolation,
               "internal invariant violated: " + what);
}

}  // namespace oplabel
