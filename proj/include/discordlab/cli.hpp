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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "discordlab/states.hpp"

namespace discordlab {

inline constexpr const char *kToolVersion = "0.1.0";

/// ASCII "D15C0RD" packed into 64 bits.
inline constexpr std::uint64_t kDefaultSeed = 0x0044313543305244ULL;

inline constexpr const char *kSeedEnvVar = "DISCORDLAB_SEED";

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitValidation = 3,
    kExitResourceGuard = 4,
    kExitNumerical = 5,
};

int exit_code_for(ErrorKind kind);

/// A parsed state spec together with the Werner parameter when the spec
/// names a Werner state.
struct StateSource {
    DensityMatrix state;
    std::optional<double> werner_c;
};

/// werner:<c>, maximally-mixed, singlet, product:<ax,ay,az;bx,by,bz>,
/// zd:<seed>, ginibre:<seed>, file:<path>. A leading "builtin:" is ignored.
StateSource parse_state_spec(const std::string &spec);

struct RunConfig {
    std::string command;
    std::string state_spec;
    std::size_t grid = 101;
    double phi_a = 0.0;
    double phi_b = 0.0;
    std::string m = "1000"; ///< positive integer or "inf"
    std::uint64_t n = 11;
    std::uint64_t seed = kDefaultSeed;
    std::optional<double> threshold;
    std::filesystem::path outdir = "out";
    std::vector<std::string> formats{"csv", "ppm", "json"};
    bool override_resource_guard = false;
    std::string stamp;
    std::string mode = "both";
    unsigned d_a = 2;
    unsigned d_b = 2;
    std::filesystem::path output_file; ///< export-state only

    [[nodiscard]] bool wants(const std::string &format) const;
};

/// Runs one command line (args exclude the program name) and returns the
/// process exit code. Diagnostics go to `err`, a summary to `out`.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace discordlab
