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
#include <optional>
#include <span>
#include <vector>

#include "discordlab/protocol.hpp"
#include "discordlab/rng.hpp"
#include "discordlab/states.hpp"

namespace discordlab {

/// Shots per setting, or the noiseless (m = infinity) sentinel.
class Shots {
  public:
    static Shots exact() { return Shots(); }
    static Shots count(std::uint64_t m);

    [[nodiscard]] bool is_exact() const { return !m_.has_value(); }
    /// Requires !is_exact().
    [[nodiscard]] std::uint64_t value() const { return *m_; }

  private:
    Shots() = default;
    std::optional<std::uint64_t> m_;
};

struct ShotBudget {
    Shots m = Shots::count(1);
    std::uint64_t n = 2; ///< grid points per protocol parameter
};

/// Mean of m +-1 outcomes with P(+1) = (1 + expectation)/2, drawn as a
/// binomial count. Returns `expectation` unchanged in exact mode.
double sample_binary_mean(double expectation, Shots m, CounterRng &rng);

/// Validates that `observable` has spectrum {+1, -1}, then samples it.
double sample_expectation(const DensityMatrix &rho, const Mat4 &observable,
                          Shots m, RandomSeed seed);

struct FringeFit {
    double offset = 0.0;
    double cos_amplitude = 0.0;
    double sin_amplitude = 0.0;

    [[nodiscard]] double amplitude() const;
};

/// Least-squares fit of a0 + a cos(phi) + b sin(phi) on the periodic grid
/// 2 pi k / n. For n = 2 the sine column vanishes and b = 0.
FringeFit fit_fringe(std::span<const double> values);

/// Standard error of the fitted cosine (or sine) amplitude for n phases and
/// m shots each, at the worst-case per-shot variance of 1.
double fringe_standard_error(std::size_t n_phases, std::uint64_t shots);

/// Fringe amplitude estimated from n_phases equally spaced phi_d values.
double estimate_visibility(const DensityMatrix &rho, const ProtocolParams &p,
                           std::size_t n_phases, Shots m, RandomSeed seed);

inline constexpr std::uint64_t kResourceGuardShots = 1'000'000'000ULL;

struct ProtocolRunOptions {
    double phi_a = 0.0; ///< slice reported in the field (nearest node)
    double phi_b = 0.0;
    bool override_resource_guard = false;
    Execution execution = Execution::Parallel;
};

struct ProtocolRunResult {
    /// Visibility at every (alpha, beta, phi_a, phi_b) node, in that
    /// index order (alpha slowest).
    std::vector<double> sweep;
    VisibilityField field;
    /// Shots actually drawn; absent in exact mode.
    std::optional<std::uint64_t> measurement_count;
};

/// Full protocol sweep: alpha, beta on n points over [0, pi]; phi_a, phi_b,
/// phi_d on the periodic n-point grid; m shots at every node.
ProtocolRunResult protocol_run(const DensityMatrix &rho,
                               const ShotBudget &budget, RandomSeed seed,
                               const ProtocolRunOptions &options = {});

inline constexpr double kReconstructionTraceTolerance = 0.05;

/// Clip negative eigenvalues to zero and renormalize.
DensityMatrix project_physical(const Mat4 &raw, std::string label = "projected");

struct TomographyResult {
    PauliCoefficients estimates;
    Mat4 raw;
    DensityMatrix projected;
    double trace_distance_to_truth = 0.0;
    std::optional<std::uint64_t> shots_used;
};

/// Estimates the 15 Pauli expectations with m shots each and reconstructs.
TomographyResult tomography(const DensityMatrix &rho, Shots m, RandomSeed seed);

} // namespace discordlab
