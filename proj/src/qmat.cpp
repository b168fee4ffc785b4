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

#include "discordlab/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "discordlab/error.hpp"

namespace discordlab {

Mat4 tensor(const Mat2 &a, const Mat2 &b) {
    Mat4 out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 2; ++l) {
                    out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

Mat2 partial_trace(const Mat4 &rho, Subsystem keep) {
    Mat2 out;
    for (std::size_t x = 0; x < 2; ++x) {
        for (std::size_t y = 0; y < 2; ++y) {
            for (std::size_t s = 0; s < 2; ++s) {
                if (keep == Subsystem::A) {
                    out(x, y) += rho(2 * x + s, 2 * y + s);
                } else {
                    out(x, y) += rho(2 * s + x, 2 * s + y);
                }
            }
        }
    }
    return out;
}

Mat4 partial_transpose(const Mat4 &rho, Subsystem on) {
    Mat4 out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 2; ++l) {
                    if (on == Subsystem::B) {
                        out(2 * i + k, 2 * j + l) = rho(2 * i + l, 2 * j + k);
                    } else {
                        out(2 * i + k, 2 * j + l) = rho(2 * j + k, 2 * i + l);
                    }
                }
            }
        }
    }
    return out;
}

template <std::size_t N>
Matrix<N> matrix_from_rows(const std::vector<std::vector<cplx>> &rows) {
    if (rows.size() != N) {
        std::ostringstream msg;
        msg << "expected " << N << " rows, got " << rows.size();
        throw Error(ErrorKind::InvalidDimension, msg.str());
    }
    Matrix<N> out;
    for (std::size_t r = 0; r < N; ++r) {
        if (rows[r].size() != N) {
            std::ostringstream msg;
            msg << "row " << r << " has " << rows[r].size()
                << " entries, expected " << N;
            throw Error(ErrorKind::InvalidDimension, msg.str());
        }
        for (std::size_t c = 0; c < N; ++c) {
            out(r, c) = rows[r][c];
        }
    }
    return out;
}

template <std::size_t N> double frobenius_norm(const Matrix<N> &m) {
    double s = 0.0;
    for (const cplx &x : m.entries()) {
        s += std::norm(x);
    }
    return std::sqrt(s);
}

template <std::size_t N> double max_hermitian_asymmetry(const Matrix<N> &m) {
    double worst = 0.0;
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = r; c < N; ++c) {
            worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return worst;
}

template <std::size_t N>
Matrix<N> EigenDecomposition<N>::reconstruct() const {
    Matrix<N> scaled = eigenvectors;
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) {
            scaled(r, c) *= eigenvalues[c];
        }
    }
    return scaled * eigenvectors.adjoint();
}

namespace {

template <std::size_t N> double off_diagonal_norm(const Matrix<N> &a) {
    double s = 0.0;
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) {
            if (r != c) {
                s += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(s);
}

// Annihilates a(p,q) with the unitary G = diag(1, e^{-i gamma}) * R, where
// gamma = arg a(p,q) and R is the real Jacobi rotation of the resulting real
// symmetric 2x2 block. Updates a <- G^H a G and v <- v G.
template <std::size_t N>
void jacobi_rotate(Matrix<N> &a, Matrix<N> &v, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) {
        return;
    }
    const cplx phase = std::conj(apq) / mag; // e^{-i gamma}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double zeta = (aqq - app) / (2.0 * mag);
    const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                     (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // G restricted to (p,q): [[c, s], [-s e^{-i gamma}, c e^{-i gamma}]].
    const cplx g_pp = c;
    const cplx g_pq = s;
    const cplx g_qp = -s * phase;
    const cplx g_qq = c * phase;

    for (std::size_t r = 0; r < N; ++r) {
        const cplx arp = a(r, p);
        const cplx arq = a(r, q);
        a(r, p) = arp * g_pp + arq * g_qp;
        a(r, q) = arp * g_pq + arq * g_qq;
        const cplx vrp = v(r, p);
        const cplx vrq = v(r, q);
        v(r, p) = vrp * g_pp + vrq * g_qp;
        v(r, q) = vrp * g_pq + vrq * g_qq;
    }
    for (std::size_t c2 = 0; c2 < N; ++c2) {
        const cplx apc = a(p, c2);
        const cplx aqc = a(q, c2);
        a(p, c2) = std::conj(g_pp) * apc + std::conj(g_qp) * aqc;
        a(q, c2) = std::conj(g_pq) * apc + std::conj(g_qq) * aqc;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

} // namespace

template <std::size_t N>
EigenDecomposition<N> hermitian_eigen(const Matrix<N> &h) {
    const double asym = max_hermitian_asymmetry(h);
    if (!(asym <= tol::kHermiticity)) {
        std::ostringstream msg;
        msg << "max asymmetry " << asym;
        throw Error(ErrorKind::NotHermitian, msg.str());
    }
    // Symmetrize so the rotations act on an exactly Hermitian matrix.
    Matrix<N> a = (h + h.adjoint()) * cplx(0.5);
    Matrix<N> v = Matrix<N>::identity();

    const double scale = std::max(1.0, frobenius_norm(a));
    for (int sweep = 0; sweep < tol::kJacobiMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) < tol::kJacobiOffDiagonal * scale) {
            break;
        }
        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                jacobi_rotate(a, v, p, q);
            }
        }
    }

    std::array<std::size_t, N> order{};
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) {
                         return a(x, x).real() > a(y, y).real();
                     });
    EigenDecomposition<N> out;
    for (std::size_t k = 0; k < N; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < N; ++r) {
            out.eigenvectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

double entropy_of_spectrum(std::span<const double> eigenvalues) {
    double s = 0.0;
    for (double lambda : eigenvalues) {
        if (lambda > 0.0) {
            s -= lambda * std::log2(lambda);
        }
    }
    return s;
}

template <std::size_t N> double von_neumann_entropy(const Matrix<N> &rho) {
    const double trace_dev = std::abs(rho.trace() - 1.0);
    if (trace_dev > tol::kTrace) {
        std::ostringstream msg;
        msg << "trace deviates from 1 by " << trace_dev;
        throw Error(ErrorKind::NotNormalized, msg.str());
    }
    auto lambda = hermitian_eigenvalues(rho);
    if (lambda.back() < -tol::kPsd) {
        std::ostringstream msg;
        msg << "eigenvalue " << lambda.back() << " below tolerance";
        throw Error(ErrorKind::NotPositive, msg.str());
    }
    return std::clamp(entropy_of_spectrum(lambda), 0.0,
                      std::log2(static_cast<double>(N)));
}

template <std::size_t N>
double trace_distance(const Matrix<N> &a, const Matrix<N> &b) {
    const auto lambda = hermitian_eigenvalues(Matrix<N>(a - b));
    double s = 0.0;
    for (double x : lambda) {
        s += std::abs(x);
    }
    return 0.5 * s;
}

#define DISCORDLAB_INSTANTIATE(N)                                              \
    template Matrix<N> matrix_from_rows<N>(                                    \
        const std::vector<std::vector<cplx>> &);                               \
    template double frobenius_norm<N>(const Matrix<N> &);                      \
    template double max_hermitian_asymmetry<N>(const Matrix<N> &);             \
    template struct EigenDecomposition<N>;                                     \
    template EigenDecomposition<N> hermitian_eigen<N>(const Matrix<N> &);      \
    template double von_neumann_entropy<N>(const Matrix<N> &);                 \
    template double trace_distance<N>(const Matrix<N> &, const Matrix<N> &);

DISCORDLAB_INSTANTIATE(2)
DISCORDLAB_INSTANTIATE(4)

#undef DISCORDLAB_INSTANTIATE

} // namespace discordlab
