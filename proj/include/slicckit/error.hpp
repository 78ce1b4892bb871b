// Copyright 2026 The slicckit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace slicckit {

enum class ErrorCode {
    BadArity,
    AllZero,
    BadSubset,
    NotInvertible,
    WrongRow,
    NoRow,
    Parse,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::BadArity: return "bad_arity";
        case ErrorCode::AllZero: return "all_zero";
        case ErrorCode::BadSubset: return "bad_subset";
        case ErrorCode::NotInvertible: return "not_invertible";
        case ErrorCode::WrongRow: return "wrong_row";
        case ErrorCode::NoRow: return "no_row";
        case ErrorCode::Parse: return "parse";
    }
    return "unknown";
}

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace slicckit
