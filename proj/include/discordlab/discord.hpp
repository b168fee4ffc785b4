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

#include <vector>

#include "discordlab/optimize.hpp"
#include "discordlab/states.hpp"

namespace discordlab {

/// Selects the OpenMP kernel or its serial reference. Both produce
/// bit-identical results.
enum class Execution { Parallel, Serial };

/// Projective measurement on A: Pi_1 = |v><v| with
/// |v> = (cos(theta/2), e^{i phi} sin(theta/2)), Pi_2 = I - Pi_1.
struct MeasurementBasis {
    double theta = 0.0;
    double phi = 0.0;

    [[nodiscard]] Mat2 projector(std::size_t outcome) const;
};

struct DiscordOptions {
    std::size_t grid_theta = 32; ///< nodes on [0, pi], inclusive
    std::size_t grid_phi = 64;   ///< nodes on [0, 2 pi), exclusive
    std::size_t refine_starts = 3;
    SimplexSettings simplex{};
    Execution execution = Execution::Parallel;
};

struct DiscordResult {
    double value = 0.0; ///< bits
    MeasurementBasis argmin_basis;
    double min_conditional_entropy = 0.0;
    int iterations = 0;
    double spread = 0.0;
};

inline constexpr double kProbabilityFloor = 1e-14;
inline constexpr double kDiscordClipTolerance = 1e-9;

double mutual_information(const DensityMatrix &rho);

/// sum_j p_j S(rho_{B|j}) for the A-measurement `basis`.
double conditional_entropy_after_measurement(const DensityMatrix &rho,
                                             const MeasurementBasis &basis);

/// Conditional entropy on the optimizer's seeding grid, theta-major.
std::vector<double> conditional_entropy_grid(const DensityMatrix &rho,
                                             std::size_t grid_theta,
                                             std::size_t grid_phi,
                                             Execution execution);

/// A-side discord: S(rho_A) - S(rho_AB) + min over bases of the conditional
/// entropy. Throws not-converged when the simplex refinement stalls.
DiscordResult discord(const DensityMatrix &rho,
                      const DiscordOptions &options = {});

/// Closed-form discord of werner(c), with 0 log 0 = 0 at c = 1.
double werner_discord_closed(double c);

} // namespace discordlab
