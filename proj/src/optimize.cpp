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

#include "discordlab/optimize.hpp"

#include <algorithm>

namespace discordlab {

namespace {

Point2 lerp(const Point2 &from, const Point2 &to, double t) {
    return {from[0] + t * (to[0] - from[0]), from[1] + t * (to[1] - from[1])};
}

} // namespace

SimplexResult nelder_mead(const std::function<double(const Point2 &)> &f,
                          const std::array<Point2, 3> &initial,
                          const SimplexSettings &settings) {
    std::array<Point2, 3> x = initial;
    std::array<double, 3> fx{f(x[0]), f(x[1]), f(x[2])};

    auto order = [&] {
        std::array<int, 3> idx{0, 1, 2};
        std::stable_sort(idx.begin(), idx.end(),
                         [&](int a, int b) { return fx[a] < fx[b]; });
        const std::array<Point2, 3> xs{x[idx[0]], x[idx[1]], x[idx[2]]};
        const std::array<double, 3> fs{fx[idx[0]], fx[idx[1]], fx[idx[2]]};
        x = xs;
        fx = fs;
    };

    SimplexResult result;
    order();
    int it = 0;
    for (; it < settings.max_iterations; ++it) {
        if (fx[2] - fx[0] < settings.spread_tolerance) {
            break;
        }
        const Point2 centroid{(x[0][0] + x[1][0]) / 2.0,
                              (x[0][1] + x[1][1]) / 2.0};
        const Point2 reflected = lerp(centroid, x[2], -1.0);
        const double fr = f(reflected);
        if (fr < fx[0]) {
            const Point2 expanded = lerp(centroid, x[2], -2.0);
            const double fe = f(expanded);
            if (fe < fr) {
                x[2] = expanded;
                fx[2] = fe;
            } else {
                x[2] = reflected;
                fx[2] = fr;
            }
        } else if (fr < fx[1]) {
            x[2] = reflected;
            fx[2] = fr;
        } else {
            // Outside contraction when the reflection beat the worst vertex,
            // inside contraction otherwise.
            const bool outside = fr < fx[2];
            const Point2 contracted =
                outside ? lerp(centroid, reflected, 0.5)
                        : lerp(centroid, x[2], 0.5);
            const double fc = f(contracted);
            if (fc < (outside ? fr : fx[2])) {
                x[2] = contracted;
                fx[2] = fc;
            } else {
                for (int k = 1; k < 3; ++k) {
                    x[k] = lerp(x[0], x[k], 0.5);
                    fx[k] = f(x[k]);
                }
            }
        }
        order();
    }

    result.argmin = x[0];
    result.value = fx[0];
    result.iterations = it;
    result.spread = fx[2] - fx[0];
    result.converged = result.spread < settings.spread_tolerance;
    return result;
}

} // namespace discordlab
