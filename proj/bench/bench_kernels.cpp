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

// Serial vs OpenMP timings of the grid kernels. Each kernel also checks
// that both paths return identical results.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>

#include "discordlab/discord.hpp"
#include "discordlab/protocol.hpp"
#include "discordlab/shots.hpp"
#include "discordlab/states.hpp"

using namespace discordlab;

namespace {

constexpr double kPi = std::numbers::pi;

template <typename F>
double best_of(int reps, F &&f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count());
    }
    return best;
}

void report(const char *name, double serial, double parallel, bool same) {
    std::printf("%-26s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel,
                serial / parallel, same ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char **argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("threads: %d, best of %d\n", omp_get_max_threads(), reps);
    std::printf("%-26s %10s %10s %9s\n", "kernel", "serial s", "openmp s", "speedup");

    const DensityMatrix rho = random_state({2026});

    {
        const auto axis = linspace(0.0, kPi, 301);
        std::vector<double> s, p;
        const double ts = best_of(reps, [&] {
            s = visibility_map(rho, axis, axis, 0.3, 1.1, Execution::Serial).values;
        });
        const double tp = best_of(reps, [&] {
            p = visibility_map(rho, axis, axis, 0.3, 1.1, Execution::Parallel).values;
        });
        report("visibility_map 301x301", ts, tp, s == p);
    }
    {
        std::vector<double> s, p;
        const double ts = best_of(reps, [&] {
            s = conditional_entropy_grid(rho, 128, 256, Execution::Serial);
        });
        const double tp = best_of(reps, [&] {
            p = conditional_entropy_grid(rho, 128, 256, Execution::Parallel);
        });
        report("entropy grid 128x256", ts, tp, s == p);
    }
    {
        const AngleGrid g{linspace(0.0, kPi, 32), periodic_grid(32)};
        WitnessResult s, p;
        const double ts = best_of(reps, [&] {
            s = discord_witness(rho, g, g, Execution::Serial);
        });
        const double tp = best_of(reps, [&] {
            p = discord_witness(rho, g, g, Execution::Parallel);
        });
        report("discord_witness 32^2x32^2", ts, tp,
               s.value == p.value && s.alpha == p.alpha);
    }
    {
        ProtocolRunOptions serial, parallel;
        serial.execution = Execution::Serial;
        ProtocolRunResult s, p;
        const ShotBudget budget{Shots::count(1000), 13};
        const double ts = best_of(reps, [&] {
            s = protocol_run(rho, budget, {1}, serial);
        });
        const double tp = best_of(reps, [&] {
            p = protocol_run(rho, budget, {1}, parallel);
        });
        report("protocol_run m=1e3 n=13", ts, tp, s.sweep == p.sweep);
    }
    return 0;
}
