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

#include "discordlab/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "discordlab/optimize.hpp"

namespace discordlab {

namespace {

constexpr double kPi = std::numbers::pi;

// (S^A (x) S^B) rho (...)^H, read out as the fringe amplitude.
double visibility_of_rotated(const Mat4 &rotated) {
    return 2.0 * std::abs(rotated(0, 2) - rotated(1, 3));
}

double wrap_pi(double angle) {
    double r = std::fmod(angle, kPi);
    if (r < 0.0) {
        r += kPi;
    }
    return r >= kPi ? 0.0 : r;
}

// Signed distance from `from` to `to` on the circle of circumference pi,
// in [-pi/2, pi/2).
double circular_diff_pi(double to, double from) {
    double d = std::fmod(to - from, kPi);
    if (d >= kPi / 2.0) {
        d -= kPi;
    } else if (d < -kPi / 2.0) {
        d += kPi;
    }
    return d;
}

void require_grid(const std::vector<double> &grid, const char *name) {
    if (grid.empty()) {
        throw Error(ErrorKind::InvalidGrid, std::string(name) + " is empty");
    }
    for (std::size_t k = 1; k < grid.size(); ++k) {
        if (!(grid[k] > grid[k - 1])) {
            throw Error(ErrorKind::InvalidGrid,
                        std::string(name) + " is not strictly increasing");
        }
    }
}

} // namespace

double wrap_two_pi(double angle) {
    double r = std::fmod(angle, 2.0 * kPi);
    if (r < 0.0) {
        r += 2.0 * kPi;
    }
    return r >= 2.0 * kPi ? 0.0 : r;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n == 0) {
        return {};
    }
    if (n == 1) {
        return {lo};
    }
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = lo + (hi - lo) * static_cast<double>(k) /
                          static_cast<double>(n - 1);
    }
    out.back() = hi;
    return out;
}

std::vector<double> periodic_grid(std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    }
    return out;
}

Mat4 fringe_observable() { return tensor(pauli::X, pauli::Z); }

DensityMatrix transformed_state(const DensityMatrix &rho,
                                const ProtocolParams &p) {
    const Mat2 sa = qubit_rotation_matrix({p.alpha, p.phi_a});
    const Mat2 sb = qubit_rotation_matrix({p.beta, p.phi_b});
    const Mat2 sd({std::polar(1.0, p.phi_d / 2.0), 0.0, 0.0,
                   std::polar(1.0, -p.phi_d / 2.0)});
    const Mat4 u = tensor(sd * sa, sb);
    Mat4 out = u * rho.mat() * u.adjoint();
    out = (out + out.adjoint()) * cplx(0.5);
    return DensityMatrix(out, rho.label());
}

double visibility_exact(const DensityMatrix &rho, const ProtocolParams &p) {
    const Mat2 sa = qubit_rotation_matrix({p.alpha, p.phi_a});
    const Mat2 sb = qubit_rotation_matrix({p.beta, p.phi_b});
    return visibility_of_rotated(apply_local(rho.mat(), sa, sb));
}

double werner_visibility_closed(double c, double alpha, double beta,
                                double phi_a, double phi_b) {
    if (!(c >= 0.0 && c <= 1.0)) {
        std::ostringstream msg;
        msg << "Werner parameter " << c << " outside [0, 1]";
        throw Error(ErrorKind::OutOfRange, msg.str());
    }
    const double dphi = phi_a - phi_b;
    const double x =
        std::sin(alpha) * std::cos(beta) -
        std::cos(alpha) * std::sin(beta) * std::cos(dphi);
    const double y = std::sin(beta) * std::sin(dphi);
    return c * std::sqrt(x * x + y * y);
}

VisibilityField visibility_map(const DensityMatrix &rho,
                               const std::vector<double> &alpha_grid,
                               const std::vector<double> &beta_grid,
                               double phi_a, double phi_b,
                               Execution execution) {
    require_grid(alpha_grid, "alpha grid");
    require_grid(beta_grid, "beta grid");

    VisibilityField field;
    field.alpha_axis = alpha_grid;
    field.beta_axis = beta_grid;
    field.phi_a = phi_a;
    field.phi_b = phi_b;
    field.label = rho.label();
    field.mode = FieldMode::Exact;

    const std::size_t na = alpha_grid.size();
    const std::size_t nb = beta_grid.size();
    field.values.assign(na * nb, 0.0);

    std::vector<Mat2> ub(nb);
    for (std::size_t j = 0; j < nb; ++j) {
        ub[j] = qubit_rotation_matrix({beta_grid[j], phi_b});
    }
    auto row = [&](std::size_t i) {
        const Mat2 ua = qubit_rotation_matrix({alpha_grid[i], phi_a});
        const Mat4 rotated_a = apply_local(rho.mat(), ua, pauli::I);
        for (std::size_t j = 0; j < nb; ++j) {
            field.values[i * nb + j] = visibility_of_rotated(
                apply_local(rotated_a, pauli::I, ub[j]));
        }
    };
    if (execution == Execution::Parallel) {
        const auto n = static_cast<std::ptrdiff_t>(na);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            row(static_cast<std::size_t>(i));
        }
    } else {
        for (std::size_t i = 0; i < na; ++i) {
            row(i);
        }
    }
    return field;
}

double sampled_zero_threshold(std::uint64_t shots) {
    return 3.0 / std::sqrt(static_cast<double>(shots));
}

double ZeroLine::spread() const {
    if (points.empty()) {
        return 0.0;
    }
    const auto [lo, hi] = std::minmax_element(
        points.begin(), points.end(), [](const auto &a, const auto &b) {
            return a.alpha_unwrapped < b.alpha_unwrapped;
        });
    return hi->alpha_unwrapped - lo->alpha_unwrapped;
}

ZeroLineSet extract_zero_lines(const VisibilityField &field, double threshold) {
    if (!(threshold > 0.0)) {
        throw Error(ErrorKind::InvalidGrid, "zero threshold must be positive");
    }
    const auto &alpha = field.alpha_axis;
    const std::size_t na = alpha.size();
    const std::size_t nb = field.beta_axis.size();

    ZeroLineSet out;
    out.threshold = threshold;
    out.column_roots.resize(nb);
    out.degenerate = std::all_of(field.values.begin(), field.values.end(),
                                 [&](double v) { return v < threshold; });
    if (out.degenerate) {
        return out;
    }

    const double spacing =
        na > 1 ? (alpha.back() - alpha.front()) / static_cast<double>(na - 1)
               : kPi;
    for (std::size_t j = 0; j < nb; ++j) {
        std::vector<double> roots;
        std::size_t i = 0;
        while (i < na) {
            if (field.at(i, j) >= threshold) {
                ++i;
                continue;
            }
            std::size_t best = i;
            for (; i < na && field.at(i, j) < threshold; ++i) {
                if (field.at(i, j) < field.at(best, j)) {
                    best = i;
                }
            }
            double root = alpha[best];
            if (best > 0 && best + 1 < na) {
                const double x0 = alpha[best - 1], x1 = alpha[best],
                             x2 = alpha[best + 1];
                const double f0 = std::pow(field.at(best - 1, j), 2);
                const double f1 = std::pow(field.at(best, j), 2);
                const double f2 = std::pow(field.at(best + 1, j), 2);
                const double num = (x1 - x0) * (x1 - x0) * (f1 - f2) -
                                   (x1 - x2) * (x1 - x2) * (f1 - f0);
                const double den =
                    (x1 - x0) * (f1 - f2) - (x1 - x2) * (f1 - f0);
                if (den != 0.0) {
                    root = std::clamp(x1 - 0.5 * num / den, x0, x2);
                }
            }
            roots.push_back(wrap_pi(root));
        }
        // Boundary images of one root coincide mod pi.
        std::sort(roots.begin(), roots.end());
        std::vector<double> unique;
        for (double r : roots) {
            const bool dup = std::any_of(
                unique.begin(), unique.end(), [&](double u) {
                    return std::abs(circular_diff_pi(r, u)) < spacing / 2.0;
                });
            if (!dup) {
                unique.push_back(r);
            }
        }
        out.column_roots[j] = std::move(unique);
    }

    // Nearest-neighbour continuation between consecutive columns.
    constexpr double kMaxStep = kPi / 4.0;
    std::vector<std::size_t> active; // indices into out.lines
    for (std::size_t j = 0; j < nb; ++j) {
        const auto &roots = out.column_roots[j];
        struct Candidate {
            double dist;
            std::size_t line;
            std::size_t root;
        };
        std::vector<Candidate> candidates;
        for (std::size_t l : active) {
            const double last = out.lines[l].points.back().alpha;
            for (std::size_t r = 0; r < roots.size(); ++r) {
                const double d = std::abs(circular_diff_pi(roots[r], last));
                if (d <= kMaxStep) {
                    candidates.push_back({d, l, r});
                }
            }
        }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const Candidate &a, const Candidate &b) {
                             return a.dist < b.dist;
                         });
        std::vector<bool> line_taken(out.lines.size(), false);
        std::vector<bool> root_taken(roots.size(), false);
        std::vector<std::size_t> next_active;
        for (const Candidate &c : candidates) {
            if (line_taken[c.line] || root_taken[c.root]) {
                continue;
            }
            line_taken[c.line] = true;
            root_taken[c.root] = true;
            const ZeroLinePoint &prev = out.lines[c.line].points.back();
            out.lines[c.line].points.push_back(
                {field.beta_axis[j], roots[c.root],
                 prev.alpha_unwrapped +
                     circular_diff_pi(roots[c.root], prev.alpha)});
            next_active.push_back(c.line);
        }
        for (std::size_t r = 0; r < roots.size(); ++r) {
            if (!root_taken[r]) {
                out.lines.push_back(ZeroLine{
                    {{field.beta_axis[j], roots[r], roots[r]}}});
                next_active.push_back(out.lines.size() - 1);
            }
        }
        std::sort(next_active.begin(), next_active.end());
        active = std::move(next_active);
    }

    if (!out.lines.empty()) {
        double flat = 0.0;
        for (const ZeroLine &line : out.lines) {
            flat = std::max(flat, line.spread());
        }
        out.flatness = flat;
    }
    return out;
}

WitnessResult discord_witness(const DensityMatrix &rho, const AngleGrid &a_grid,
                              const AngleGrid &b_grid, Execution execution) {
    if (a_grid.theta.empty() || a_grid.phi.empty() || b_grid.theta.empty() ||
        b_grid.phi.empty()) {
        throw Error(ErrorKind::InvalidGrid, "witness grids must be non-empty");
    }
    std::vector<Mat2> ub;
    for (double beta : b_grid.theta) {
        for (double phi_b : b_grid.phi) {
            ub.push_back(qubit_rotation_matrix({beta, phi_b}));
        }
    }
    const std::size_t npa = a_grid.phi.size();
    const std::size_t total = a_grid.theta.size() * npa;
    std::vector<double> worst(total, 0.0);

    auto eval = [&](std::size_t k) {
        const Mat2 ua =
            qubit_rotation_matrix({a_grid.theta[k / npa], a_grid.phi[k % npa]});
        const Mat4 rotated_a = apply_local(rho.mat(), ua, pauli::I);
        double w = 0.0;
        for (const Mat2 &u : ub) {
            w = std::max(w, visibility_of_rotated(
                                apply_local(rotated_a, pauli::I, u)));
        }
        worst[k] = w;
    };
    if (execution == Execution::Parallel) {
        const auto n = static_cast<std::ptrdiff_t>(total);
#pragma omp parallel for schedule(dynamic, 4)
        for (std::ptrdiff_t k = 0; k < n; ++k) {
            eval(static_cast<std::size_t>(k));
        }
    } else {
        for (std::size_t k = 0; k < total; ++k) {
            eval(k);
        }
    }

    // First minimum in scan order.
    std::size_t best = 0;
    for (std::size_t k = 1; k < total; ++k) {
        if (worst[k] < worst[best]) {
            best = k;
        }
    }
    return {worst[best], a_grid.theta[best / npa], a_grid.phi[best % npa]};
}

namespace {

// || <v1|_A rho |v2>_A ||_F^2 for the A basis with Bloch angles p.
double cross_block_norm2(const Mat4 &rho, const Point2 &p) {
    const double c = std::cos(p[0] / 2.0);
    const double s = std::sin(p[0] / 2.0);
    const cplx e = std::polar(1.0, p[1]);
    const std::array<cplx, 2> v1{c, e * s};
    const std::array<cplx, 2> v2{-std::conj(e) * s, c};
    double total = 0.0;
    for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t l = 0; l < 2; ++l) {
            cplx z = 0.0;
            for (std::size_t x = 0; x < 2; ++x) {
                for (std::size_t y = 0; y < 2; ++y) {
                    z += std::conj(v1[x]) * rho(2 * x + k, 2 * y + l) * v2[y];
                }
            }
            total += std::norm(z);
        }
    }
    return total;
}

using Vec3 = std::array<double, 3>;

double dot(const Vec3 &a, const Vec3 &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

} // namespace

S0Result find_s0(const DensityMatrix &rho) {
    const Mat4 &m = rho.mat();

    // Coarse search for the axis whose projectors leave rho block diagonal.
    constexpr std::size_t kTheta = 32;
    constexpr std::size_t kPhi = 64;
    const auto thetas = linspace(0.0, kPi, kTheta);
    const auto phis = periodic_grid(kPhi);
    std::vector<double> grid(kTheta * kPhi);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        grid[k] = cross_block_norm2(m, {thetas[k / kPhi], phis[k % kPhi]});
    }
    std::vector<std::size_t> idx(grid.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::partial_sort(idx.begin(), idx.begin() + 3, idx.end(),
                      [&](std::size_t a, std::size_t b) {
                          return grid[a] < grid[b] ||
                                 (grid[a] == grid[b] && a < b);
                      });
    auto objective = [&m](const Point2 &p) { return cross_block_norm2(m, p); };
    const double dt = kPi / static_cast<double>(kTheta - 1);
    const double dp = 2.0 * kPi / static_cast<double>(kPhi);
    Point2 axis_angles{thetas[idx[0] / kPhi], phis[idx[0] % kPhi]};
    double best = grid[idx[0]];
    for (std::size_t s = 0; s < 3; ++s) {
        const Point2 p0{thetas[idx[s] / kPhi], phis[idx[s] % kPhi]};
        const auto run = nelder_mead(
            objective, {p0, Point2{p0[0] + dt / 2.0, p0[1]},
                        Point2{p0[0], p0[1] + dp / 2.0}},
            SimplexSettings{200, 1e-20});
        if (run.value < best) {
            best = run.value;
            axis_angles = run.argmin;
        }
    }

    // Polish: for an A-classical state every A-side Bloch vector of
    // tr_B[rho (I (x) X)] is parallel to the classical axis, so power
    // iteration on their outer-product sum converges in one step.
    const PauliCoefficients pc = pauli_decompose(rho);
    std::array<Vec3, 4> r{pc.a, Vec3{}, Vec3{}, Vec3{}};
    for (std::size_t j = 0; j < 3; ++j) {
        r[j + 1] = {pc.corr[0][j], pc.corr[1][j], pc.corr[2][j]};
    }
    Vec3 n{std::sin(axis_angles[0]) * std::cos(axis_angles[1]),
           std::sin(axis_angles[0]) * std::sin(axis_angles[1]),
           std::cos(axis_angles[0])};
    for (int step = 0; step < 3; ++step) {
        Vec3 next{};
        for (const Vec3 &v : r) {
            const double w = dot(v, n);
            for (std::size_t k = 0; k < 3; ++k) {
                next[k] += w * v[k];
            }
        }
        const double len = std::sqrt(dot(next, next));
        if (!(len > 1e-150)) {
            break;
        }
        for (std::size_t k = 0; k < 3; ++k) {
            n[k] = next[k] / len;
        }
    }
    if (n[2] < 0.0) {
        for (double &x : n) {
            x = -x;
        }
    }
    const double theta = std::acos(std::clamp(n[2], -1.0, 1.0));
    const double phi = std::atan2(n[1], n[0]);

    S0Result result;
    // R(theta, phi + pi) = R(theta, phi)^H undoes the map |up> -> n.
    result.rotation = {theta, theta == 0.0 ? 0.0 : wrap_two_pi(phi + kPi)};

    const Mat4 k_obs = fringe_observable();
    CounterRng rng(RandomSeed{0x50A5C0DEULL});
    double worst = 0.0;
    for (int k = 0; k < 16; ++k) {
        ProtocolParams p;
        p.alpha = result.rotation.theta;
        p.phi_a = result.rotation.phi;
        p.beta = 2.0 * kPi * rng.uniform();
        p.phi_b = 2.0 * kPi * rng.uniform();
        p.phi_d = 2.0 * kPi * rng.uniform();
        worst = std::max(worst, visibility_exact(rho, p));
        // The fringe itself must not move with phi_d either.
        const double shifted =
            (k_obs * transformed_state(rho, p).mat()).trace().real();
        p.phi_d = 0.0;
        const double base =
            (k_obs * transformed_state(rho, p).mat()).trace().real();
        worst = std::max(worst, std::abs(shifted - base));
    }
    result.max_visibility = worst;
    if (!(worst < kS0VisibilityTolerance)) {
        std::ostringstream msg;
        msg << "no B-independent zero-visibility setting found (residual "
            << worst << ")";
        throw Error(ErrorKind::NotZeroDiscord, msg.str());
    }
    return result;
}

} // namespace discordlab
