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

#include "discordlab/states.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

namespace discordlab {

ValidationReport validate(const Mat4 &candidate) {
    ValidationReport report;
    report.hermiticity_deviation = max_hermitian_asymmetry(candidate);
    report.trace_deviation = std::abs(candidate.trace() - 1.0);
    const Mat4 hermitian_part = (candidate + candidate.adjoint()) * cplx(0.5);
    if (std::isfinite(report.hermiticity_deviation) &&
        std::isfinite(report.trace_deviation)) {
        report.min_eigenvalue = hermitian_eigenvalues(hermitian_part).back();
    } else {
        report.min_eigenvalue = std::nan("");
    }

    if (!(report.hermiticity_deviation <= tol::kHermiticity)) {
        report.failure = ErrorKind::NotHermitian;
    } else if (!(report.trace_deviation <= tol::kTrace)) {
        report.failure = ErrorKind::NotNormalized;
    } else if (!(report.min_eigenvalue >= -tol::kPsd)) {
        report.failure = ErrorKind::NotPositive;
    }
    return report;
}

DensityMatrix::DensityMatrix(const Mat4 &mat, std::string label)
    : mat_(mat), label_(std::move(label)) {
    const ValidationReport report = validate(mat_);
    if (!report.passed()) {
        std::ostringstream msg;
        msg << "state '" << label_ << "' rejected (hermiticity deviation "
            << report.hermiticity_deviation << ", trace deviation "
            << report.trace_deviation << ", min eigenvalue "
            << report.min_eigenvalue << ")";
        throw Error(*report.failure, msg.str());
    }
}

Mat2 qubit_rotation_matrix(const QubitRotation &r) {
    const double c = std::cos(r.theta / 2.0);
    const double s = std::sin(r.theta / 2.0);
    const cplx e = std::polar(1.0, r.phi);
    return Mat2({c, -s * std::conj(e), s * e, c});
}

Mat2 qubit_state(const std::array<double, 3> &bloch) {
    const double len = std::sqrt(bloch[0] * bloch[0] + bloch[1] * bloch[1] +
                                 bloch[2] * bloch[2]);
    if (!(len <= 1.0 + tol::kPsd)) {
        throw Error(ErrorKind::OutOfRange, "Bloch vector longer than 1");
    }
    Mat2 out = pauli::I;
    for (std::size_t i = 0; i < 3; ++i) {
        out += pauli::xyz[i] * cplx(bloch[i]);
    }
    return out * cplx(0.5);
}

Mat4 singlet_projector() {
    Mat4 p;
    p(1, 1) = 0.5;
    p(2, 2) = 0.5;
    p(1, 2) = -0.5;
    p(2, 1) = -0.5;
    return p;
}

DensityMatrix werner(double c) {
    if (!(c >= 0.0 && c <= 1.0)) {
        std::ostringstream msg;
        msg << "Werner parameter " << c << " outside [0, 1]";
        throw Error(ErrorKind::OutOfRange, msg.str());
    }
    // Shortest text that round-trips, so werner(0.2) reads "werner:0.2".
    std::array<char, 32> buf{};
    const auto end = std::to_chars(buf.data(), buf.data() + buf.size(), c).ptr;
    const std::string label = "werner:" + std::string(buf.data(), end);
    return DensityMatrix(singlet_projector() * cplx(c) +
                             Mat4::identity() * cplx((1.0 - c) / 4.0),
                         label);
}

DensityMatrix maximally_mixed() {
    return DensityMatrix(Mat4::identity() * cplx(0.25), "maximally-mixed");
}

namespace {

template <std::size_t N> Matrix<N> ginibre(CounterRng &rng) {
    Matrix<N> g;
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(r, c) = cplx(re, im);
        }
    }
    return g;
}

template <std::size_t N> Matrix<N> normalized_gram(const Matrix<N> &g) {
    Matrix<N> w = g * g.adjoint();
    w *= cplx(1.0 / w.trace().real());
    // Remove rounding asymmetry so the output is Hermitian to the last bit.
    return (w + w.adjoint()) * cplx(0.5);
}

} // namespace

Mat2 random_qubit_state(CounterRng &rng) {
    return normalized_gram(ginibre<2>(rng));
}

DensityMatrix random_state(RandomSeed seed) {
    CounterRng rng(seed);
    std::ostringstream label;
    label << "ginibre:" << seed.value;
    return DensityMatrix(normalized_gram(ginibre<4>(rng)), label.str());
}

ZeroDiscordComponents zero_discord_components(RandomSeed seed) {
    CounterRng rng(seed);
    ZeroDiscordComponents parts;

    // Gram-Schmidt on the columns gives a QR factorization whose R has a
    // positive real diagonal.
    const Mat2 g = ginibre<2>(rng);
    const cplx g00 = g(0, 0), g10 = g(1, 0), g01 = g(0, 1), g11 = g(1, 1);
    const double n1 = std::sqrt(std::norm(g00) + std::norm(g10));
    const cplx q00 = g00 / n1, q10 = g10 / n1;
    const cplx overlap = std::conj(q00) * g01 + std::conj(q10) * g11;
    cplx r01 = g01 - overlap * q00;
    cplx r11 = g11 - overlap * q10;
    const double n2 = std::sqrt(std::norm(r01) + std::norm(r11));
    parts.basis = Mat2({q00, r01 / n2, q10, r11 / n2});

    const double u = rng.uniform();
    parts.weights = {u, 1.0 - u};
    parts.b_states[0] = random_qubit_state(rng);
    parts.b_states[1] = random_qubit_state(rng);
    return parts;
}

DensityMatrix assemble_zero_discord(const ZeroDiscordComponents &parts,
                                    std::string label) {
    Mat4 rho;
    for (std::size_t i = 0; i < 2; ++i) {
        Mat2 proj;
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 2; ++c) {
                proj(r, c) = parts.basis(r, i) * std::conj(parts.basis(c, i));
            }
        }
        rho += tensor(proj, parts.b_states[i]) * cplx(parts.weights[i]);
    }
    rho = (rho + rho.adjoint()) * cplx(0.5);
    return DensityMatrix(rho, std::move(label));
}

DensityMatrix zero_discord_state(RandomSeed seed) {
    return assemble_zero_discord(zero_discord_components(seed),
                                 "zd:" + std::to_string(seed.value));
}

std::array<double, 15> PauliCoefficients::flat() const {
    std::array<double, 15> v{};
    for (std::size_t i = 0; i < 3; ++i) {
        v[i] = a[i];
        v[3 + i] = b[i];
        for (std::size_t j = 0; j < 3; ++j) {
            v[6 + 3 * i + j] = corr[i][j];
        }
    }
    return v;
}

PauliCoefficients PauliCoefficients::from_flat(const std::array<double, 15> &v) {
    PauliCoefficients out;
    for (std::size_t i = 0; i < 3; ++i) {
        out.a[i] = v[i];
        out.b[i] = v[3 + i];
        for (std::size_t j = 0; j < 3; ++j) {
            out.corr[i][j] = v[6 + 3 * i + j];
        }
    }
    return out;
}

Mat4 pauli_observable(std::size_t k) {
    if (k < 3) {
        return tensor(pauli::xyz[k], pauli::I);
    }
    if (k < 6) {
        return tensor(pauli::I, pauli::xyz[k - 3]);
    }
    if (k < 15) {
        return tensor(pauli::xyz[(k - 6) / 3], pauli::xyz[(k - 6) % 3]);
    }
    throw Error(ErrorKind::OutOfRange, "observable index beyond 15");
}

PauliCoefficients pauli_decompose(const DensityMatrix &rho) {
    std::array<double, 15> v{};
    for (std::size_t k = 0; k < 15; ++k) {
        v[k] = (pauli_observable(k) * rho.mat()).trace().real();
    }
    return PauliCoefficients::from_flat(v);
}

Mat4 pauli_reconstruct(const PauliCoefficients &coeffs) {
    const auto v = coeffs.flat();
    Mat4 out = Mat4::identity();
    for (std::size_t k = 0; k < 15; ++k) {
        out += pauli_observable(k) * cplx(v[k]);
    }
    return out * cplx(0.25);
}

Mat4 apply_local(const Mat4 &rho, const Mat2 &ua, const Mat2 &ub) {
    const Mat4 u = tensor(ua, ub);
    return u * rho * u.adjoint();
}

} // namespace discordlab
