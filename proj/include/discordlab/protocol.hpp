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

#include <optional>
#include <string>
#include <vector>

#include "discordlab/discord.hpp"
#include "discordlab/states.hpp"

namespace discordlab {

/// Local rotations S^A = R(alpha, phi_a), S^B = R(beta, phi_b) and the
/// dephasing phase phi_d.
struct ProtocolParams {
    double alpha = 0.0;
    double phi_a = 0.0;
    double beta = 0.0;
    double phi_b = 0.0;
    double phi_d = 0.0;
};

/// Wraps into [0, 2 pi).
double wrap_two_pi(double angle);

/// n evenly spaced points on [lo, hi], both ends included (n >= 2), or {lo}.
std::vector<double> linspace(double lo, double hi, std::size_t n);

/// n points 2 pi k / n, k = 0..n-1.
std::vector<double> periodic_grid(std::size_t n);

/// The fringe observable sigma_x (x) sigma_z.
Mat4 fringe_observable();

/// S_d (S^A (x) S^B) rho (...)^H S_d^H with S_d = exp(i phi_d Z/2) (x) I.
DensityMatrix transformed_state(const DensityMatrix &rho,
                                const ProtocolParams &p);

/// Fringe amplitude of <sigma_x (x) sigma_z> in phi_d; phi_d is ignored.
double visibility_exact(const DensityMatrix &rho, const ProtocolParams &p);

/// Closed-form visibility of werner(c).
double werner_visibility_closed(double c, double alpha, double beta,
                                double phi_a, double phi_b);

enum class FieldMode { Exact, Sampled };

struct VisibilityField {
    std::vector<double> alpha_axis;
    std::vector<double> beta_axis;
    std::vector<double> values; ///< alpha-major: values[i * nbeta + j]
    double phi_a = 0.0;
    double phi_b = 0.0;
    std::string label;
    FieldMode mode = FieldMode::Exact;
    std::optional<std::uint64_t> shots_per_point; ///< sampled mode only

    [[nodiscard]] double at(std::size_t i_alpha, std::size_t j_beta) const {
        return values[i_alpha * beta_axis.size() + j_beta];
    }
};

VisibilityField visibility_map(const DensityMatrix &rho,
                               const std::vector<double> &alpha_grid,
                               const std::vector<double> &beta_grid,
                               double phi_a, double phi_b,
                               Execution execution = Execution::Parallel);

inline constexpr double kExactZeroThreshold = 1e-9;

/// Three standard errors of an m-shot average.
double sampled_zero_threshold(std::uint64_t shots);

struct ZeroLinePoint {
    double beta = 0.0;
    double alpha = 0.0;           ///< root mod pi
    double alpha_unwrapped = 0.0; ///< continued along the line
};

struct ZeroLine {
    std::vector<ZeroLinePoint> points;

    /// max - min of the unwrapped root.
    [[nodiscard]] double spread() const;
};

struct ZeroLineSet {
    double threshold = 0.0;
    /// Roots mod pi per beta column, ascending.
    std::vector<std::vector<double>> column_roots;
    std::vector<ZeroLine> lines;
    bool degenerate = false;          ///< every node below threshold
    std::optional<double> flatness;   ///< absent when degenerate or empty
};

/// Locates alpha roots per beta column by minimum detection among nodes
/// below `threshold`, refined by a parabola through V^2.
ZeroLineSet extract_zero_lines(const VisibilityField &field, double threshold);

/// Product grid of rotation angles.
struct AngleGrid {
    std::vector<double> theta;
    std::vector<double> phi;
};

struct WitnessResult {
    double value = 0.0;
    double alpha = 0.0; ///< minimizing A setting
    double phi_a = 0.0;
};

/// min over the A grid of max over the B grid of visibility_exact.
WitnessResult discord_witness(const DensityMatrix &rho, const AngleGrid &a_grid,
                              const AngleGrid &b_grid,
                              Execution execution = Execution::Parallel);

inline constexpr double kS0VisibilityTolerance = 1e-8;

struct S0Result {
    QubitRotation rotation;  ///< S_0^A as (alpha, phi_a)
    double max_visibility = 0.0; ///< a-posteriori residual
};

/// Finds S_0^A mapping the state's A-classical basis onto the Z basis.
/// Throws not-zero-discord when the a-posteriori check fails.
S0Result find_s0(const DensityMatrix &rho);

} // namespace discordlab
