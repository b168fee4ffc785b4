// Copyright 2026 The discordlab Authors
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

namespace discordlab {

enum class ErrorKind {
    InvalidDimension,
    NotHermitian,
    NotPositive,
    NotNormalized,
    OutOfRange,
    NotConverged,
    InternalConsistency,
    NotZeroDiscord,
    InvalidGrid,
    UnsupportedObservable,
    ReconstructionFailed,
    CostOverflow,
    ResourceGuard,
    Io,
    Parse,
    Usage,
};

std::string_view to_string(ErrorKind kind);

/// Library-wide exception. Every failure carries a machine-readable kind so
/// the command-line front end can map it to an exit code.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace discordlab
