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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "discordlab/states.hpp"

namespace discordlab {

inline constexpr const char *kBasisDescription =
    "up-up, up-down, down-up, down-down";

/// State file object: dims, basis, re, im, label.
nlohmann::json state_to_json(const DensityMatrix &rho);

/// Parse errors name the offending field; validation errors propagate.
DensityMatrix state_from_json(const nlohmann::json &doc);

DensityMatrix read_state_file(const std::filesystem::path &path);

void write_state_file(const std::filesystem::path &path,
                      const DensityMatrix &rho);

} // namespace discordlab
