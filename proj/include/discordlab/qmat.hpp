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
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace discordlab {

using cplx = std::complex<double>;

/// Numerical tolerances shared by every module.
namespace tol {
inline constexpr double kHermiticity = 1e-10;
inline constexpr double kEigenReconstruction = 1e-10;
inline constexpr double kPsd = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kJacobiOffDiagonal = 1e-14;
inline constexpr int kJacobiMaxSweeps = 50;
} // namespace tol

/// Dense square complex matrix of fixed order, row-major.
template <std::size_t N> class Matrix {
  public:
    static constexpr std::size_t order = N;

    constexpr Matrix() = default;
    explicit constexpr Matrix(const std::array<cplx, N * N> &entries)
        : data_(entries) {}

    static constexpr Matrix identity() {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static constexpr Matrix diagonal(const std::array<double, N> &d) {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) {
            m(i, i) = d[i];
        }
        return m;
    }

    constexpr cplx &operator()(std::size_t r, std::size_t c) {
        return data_[r * N + c];
    }
    constexpr const cplx &operator()(std::size_t r, std::size_t c) const {
        return data_[r * N + c];
    }

    [[nodiscard]] std::span<const cplx, N * N> entries() const {
        return data_;
    }

    [[nodiscard]] Matrix adjoint() const {
        Matrix out;
        for (std::size_t r = 0; r < N; ++r) {
            for (std::size_t c = 0; c < N; ++c) {
                out(c, r) = std::conj((*this)(r, c));
            }
        }
        return out;
    }

    [[nodiscard]] cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    Matrix &operator+=(const Matrix &o) {
        for (std::size_t i = 0; i < N * N; ++i) {
            data_[i] += o.data_[i];
        }
        return *this;
    }
    Matrix &operator-=(const Matrix &o) {
        for (std::size_t i = 0; i < N * N; ++i) {
            data_[i] -= o.data_[i];
        }
        return *this;
    }
    Matrix &operator*=(cplx s) {
        for (auto &x : data_) {
            x *= s;
        }
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
    friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
    friend Matrix operator*(cplx s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        Matrix out;
        for (std::size_t r = 0; r < N; ++r) {
            for (std::size_t k = 0; k < N; ++k) {
                const cplx ark = a(r, k);
                for (std::size_t c = 0; c < N; ++c) {
                    out(r, c) += ark * b(k, c);
                }
            }
        }
        return out;
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;

  private:
    std::array<cplx, N * N> data_{};
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

namespace pauli {
inline const Mat2 I = Mat2::identity();
inline const Mat2 X{{0.0, 1.0, 1.0, 0.0}};
inline const Mat2 Y{{0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0}};
inline const Mat2 Z{{1.0, 0.0, 0.0, -1.0}};

/// sigma_x, sigma_y, sigma_z in that order.
inline const std::array<Mat2, 3> xyz{X, Y, Z};
} // namespace pauli

enum class Subsystem { A, B };

/// Kronecker product with A as the slow (left) index.
Mat4 tensor(const Mat2 &a, const Mat2 &b);

Mat2 partial_trace(const Mat4 &rho, Subsystem keep);

Mat4 partial_transpose(const Mat4 &rho, Subsystem on);

/// Converts nested rows into a fixed-order matrix, rejecting ragged or
/// wrongly sized input.
template <std::size_t N>
Matrix<N> matrix_from_rows(const std::vector<std::vector<cplx>> &rows);

template <std::size_t N> double frobenius_norm(const Matrix<N> &m);

/// Largest |m(i,j) - conj(m(j,i))|.
template <std::size_t N> double max_hermitian_asymmetry(const Matrix<N> &m);

template <std::size_t N> struct EigenDecomposition {
    std::array<double, N> eigenvalues{}; ///< descending
    Matrix<N> eigenvectors;              ///< column k pairs with eigenvalues[k]

    [[nodiscard]] Matrix<N> reconstruct() const;
};

/// Cyclic complex Jacobi eigensolver. Throws not-hermitian if the input
/// deviates from Hermiticity by more than tol::kHermiticity.
template <std::size_t N>
EigenDecomposition<N> hermitian_eigen(const Matrix<N> &h);

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const Matrix<N> &h) {
    return hermitian_eigen(h).eigenvalues;
}

/// Entropy in bits of a unit-trace positive semidefinite matrix.
template <std::size_t N> double von_neumann_entropy(const Matrix<N> &rho);

/// Shannon entropy in bits of a spectrum; entries in [-kPsd, 0) count as 0.
double entropy_of_spectrum(std::span<const double> eigenvalues);

/// Half the trace norm of a - b.
template <std::size_t N>
double trace_distance(const Matrix<N> &a, const Matrix<N> &b);

} // namespace discordlab
