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

#include "discordlab/error.hpp"

namespace discordlab {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidDimension: return "invalid-dimension";
    case ErrorKind::NotHermitian: return "not-hermitian";
    case ErrorKind::NotPositive: return "not-positive";
    case ErrorKind::NotNormalized: return "not-normalized";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::NotConverged: return "not-converged";
    case ErrorKind::InternalConsistency: return "internal-consistency";
    case ErrorKind::NotZeroDiscord: return "not-zero-discord";
    case ErrorKind::InvalidGrid: return "invalid-grid";
    case ErrorKind::UnsupportedObservable: return "unsupported-observable";
    case ErrorKind::ReconstructionFailed: return "reconstruction-failed";
    case ErrorKind::CostOverflow: return "cost-overflow";
    case ErrorKind::ResourceGuard: return "resource-guard";
    case ErrorKind::Io: return "io";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Usage: return "usage";
    }
    return "unknown";
}

} // namespace discordlab
