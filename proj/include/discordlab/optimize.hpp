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
#include <functional>

namespace discordlab {

using Point2 = std::array<double, 2>;

struct SimplexSettings {
    int max_iterations = 200;
    double spread_tolerance = 1e-10; ///< max f - min f over the vertices
};

struct SimplexResult {
    Point2 argmin{};
    double value = 0.0;
    int iterations = 0;
    double spread = 0.0;
    bool converged = false;
};

/// Nelder-Mead in two dimensions with the standard coefficients
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
SimplexResult nelder_mead(const std::function<double(const Point2 &)> &f,
                          const std::array<Point2, 3> &initial,
                          const SimplexSettings &settings = {});

} // namespace discordlab
