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

#include <array>
#include <optional>
#include <string>

#include "discordlab/error.hpp"
#include "discordlab/qmat.hpp"
#include "discordlab/rng.hpp"

namespace discordlab {

// Basis order throughout: (up-up, up-down, down-up, down-down), A slow.

struct ValidationReport {
    double hermiticity_deviation = 0.0;
    double trace_deviation = 0.0;
    double min_eigenvalue = 0.0;
    std::optional<ErrorKind> failure; ///< first failed check, if any

    [[nodiscard]] bool passed() const { return !failure.has_value(); }
};

/// Hermiticity, then trace, then positivity; the first failure is reported.
ValidationReport validate(const Mat4 &candidate);

/// Two-qubit state that satisfies the density-matrix invariants.
class DensityMatrix {
  public:
    /// Throws the kind reported by validate() when the matrix is rejected.
    explicit DensityMatrix(const Mat4 &mat, std::string label = {});

    [[nodiscard]] const Mat4 &mat() const { return mat_; }
    [[nodiscard]] const std::string &label() const { return label_; }

  private:
    Mat4 mat_;
    std::string label_;
};

/// Angles of a single-qubit rotation: angle theta about the equatorial
/// axis (-sin phi, cos phi, 0).
struct QubitRotation {
    double theta = 0.0;
    double phi = 0.0;
};

/// exp(-i theta/2 (-sin phi X + cos phi Y)); maps |up> to the Bloch point
/// with polar angle theta and azimuth phi.
Mat2 qubit_rotation_matrix(const QubitRotation &r);

/// Single-qubit state (I + r.sigma)/2; requires |r| <= 1.
Mat2 qubit_state(const std::array<double, 3> &bloch);

/// c |Psi-><Psi-| + (1-c)/4 I.
DensityMatrix werner(double c);

/// |Psi-> = (|up,down> - |down,up>)/sqrt(2) as a projector.
Mat4 singlet_projector();

DensityMatrix maximally_mixed();

/// Ginibre-ensemble single-qubit state. Consumes 8 normal draws.
Mat2 random_qubit_state(CounterRng &rng);

/// Ginibre-ensemble two-qubit state G G^H / tr(G G^H).
DensityMatrix random_state(RandomSeed seed);

/// Ingredients of an A-classical state sum_i p_i |psi_i><psi_i| (x) rho_i.
struct ZeroDiscordComponents {
    Mat2 basis;                 ///< columns are |psi_1>, |psi_2>
    std::array<double, 2> weights{};
    std::array<Mat2, 2> b_states;
};

/// Haar-random basis (QR of a 2x2 Ginibre matrix, positive diagonal),
/// weights uniform on the simplex, Ginibre B states.
ZeroDiscordComponents zero_discord_components(RandomSeed seed);

DensityMatrix assemble_zero_discord(const ZeroDiscordComponents &parts,
                                    std::string label = "zero-discord");

DensityMatrix zero_discord_state(RandomSeed seed);

/// Local Pauli expectations and correlators of a two-qubit state.
struct PauliCoefficients {
    std::array<double, 3> a{};                   ///< <sigma_i (x) I>
    std::array<double, 3> b{};                   ///< <I (x) sigma_j>
    std::array<std::array<double, 3>, 3> corr{}; ///< <sigma_i (x) sigma_j>

    /// a_x..a_z, b_x..b_z, then corr row-major: the 15 tomography settings.
    [[nodiscard]] std::array<double, 15> flat() const;
    static PauliCoefficients from_flat(const std::array<double, 15> &v);
};

/// The k-th of the 15 tomography observables in PauliCoefficients::flat order.
Mat4 pauli_observable(std::size_t k);

PauliCoefficients pauli_decompose(const DensityMatrix &rho);

/// (I + sum a_i s_i(x)I + sum b_j I(x)s_j + sum c_ij s_i(x)s_j)/4; the result
/// is Hermitian with unit trace but need not be positive.
Mat4 pauli_reconstruct(const PauliCoefficients &coeffs);

/// (U_A (x) U_B) rho (U_A (x) U_B)^H.
Mat4 apply_local(const Mat4 &rho, const Mat2 &ua, const Mat2 &ub);

} // namespace discordlab
