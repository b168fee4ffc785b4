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

#include "discordlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "discordlab/cost.hpp"
#include "discordlab/discord.hpp"
#include "discordlab/protocol.hpp"
#include "discordlab/shots.hpp"
#include "discordlab/state_io.hpp"

namespace discordlab {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kWernerDiscordTolerance = 1e-4;
constexpr double kClosedFormVisibilityTolerance = 1e-12;
constexpr double kExactSentinelTolerance = 1e-12;

[[noreturn]] void usage(const std::string &what) {
    throw Error(ErrorKind::Usage, what);
}

std::string fmt15(double x) {
    if (x == 0.0) {
        x = 0.0; // drop the sign of -0
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

double parse_double(const std::string &text, const std::string &what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size() || text.empty()) {
        throw Error(ErrorKind::Parse, what + ": '" + text + "' is not a number");
    }
    return v;
}

std::uint64_t parse_u64(const std::string &text, const std::string &what) {
    if (text.empty() ||
        !std::all_of(text.begin(), text.end(),
                     [](unsigned char ch) { return std::isdigit(ch); })) {
        throw Error(ErrorKind::Parse,
                    what + ": '" + text + "' is not a non-negative integer");
    }
    try {
        return std::stoull(text);
    } catch (const std::exception &) {
        throw Error(ErrorKind::Parse, what + ": '" + text + "' out of range");
    }
}

std::array<double, 3> parse_bloch(const std::string &text) {
    std::array<double, 3> v{};
    std::stringstream ss(text);
    std::string item;
    std::size_t k = 0;
    while (std::getline(ss, item, ',')) {
        if (k == 3) {
            throw Error(ErrorKind::Parse, "Bloch vector needs 3 components");
        }
        v[k++] = parse_double(item, "Bloch component");
    }
    if (k != 3) {
        throw Error(ErrorKind::Parse, "Bloch vector needs 3 components");
    }
    return v;
}

Shots parse_shots(const std::string &text) {
    if (text == "inf") {
        return Shots::exact();
    }
    const std::uint64_t m = parse_u64(text, "--m");
    if (m == 0) {
        usage("--m must be a positive integer or 'inf'");
    }
    return Shots::count(m);
}

std::string utc_stamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &tm);
    return buf;
}

class ArtifactDir {
  public:
    ArtifactDir(const RunConfig &cfg) {
        const std::string stamp = cfg.stamp.empty() ? utc_stamp() : cfg.stamp;
        path_ = cfg.outdir / (cfg.command + "-" + stamp);
        std::error_code ec;
        fs::create_directories(path_, ec);
        if (ec) {
            throw Error(ErrorKind::Io,
                        "cannot create " + path_.string() + ": " + ec.message());
        }
    }

    [[nodiscard]] const fs::path &path() const { return path_; }

    void write(const std::string &name, const std::string &content) const {
        std::ofstream out(path_ / name, std::ios::binary);
        if (!out) {
            throw Error(ErrorKind::Io, "cannot write " + (path_ / name).string());
        }
        out << content;
    }

  private:
    fs::path path_;
};

ojson config_echo(const RunConfig &cfg) {
    ojson c;
    c["command"] = cfg.command;
    c["state"] = cfg.state_spec;
    c["grid"] = cfg.grid;
    c["phia"] = cfg.phi_a;
    c["phib"] = cfg.phi_b;
    c["m"] = cfg.m;
    c["n"] = cfg.n;
    c["seed"] = cfg.seed;
    c["threshold"] = cfg.threshold ? ojson(*cfg.threshold) : ojson(nullptr);
    c["outdir"] = cfg.outdir.string();
    c["format"] = cfg.formats;
    c["override_resource_guard"] = cfg.override_resource_guard;
    c["mode"] = cfg.mode;
    c["da"] = cfg.d_a;
    c["db"] = cfg.d_b;
    return c;
}

ojson report_header(const RunConfig &cfg) {
    ojson r;
    r["tool"] = "discordlab";
    r["version"] = kToolVersion;
    r["seed"] = cfg.seed;
    r["config"] = config_echo(cfg);
    return r;
}

std::string field_csv(const VisibilityField &field) {
    std::string s = "alpha,beta,visibility\n";
    for (std::size_t i = 0; i < field.alpha_axis.size(); ++i) {
        for (std::size_t j = 0; j < field.beta_axis.size(); ++j) {
            s += fmt15(field.alpha_axis[i]) + "," + fmt15(field.beta_axis[j]) +
                 "," + fmt15(field.at(i, j)) + "\n";
        }
    }
    return s;
}

std::string zero_lines_csv(const ZeroLineSet &lines) {
    std::string s = "line,beta,alpha,alpha_unwrapped\n";
    for (std::size_t l = 0; l < lines.lines.size(); ++l) {
        for (const ZeroLinePoint &p : lines.lines[l].points) {
            s += std::to_string(l) + "," + fmt15(p.beta) + "," +
                 fmt15(p.alpha) + "," + fmt15(p.alpha_unwrapped) + "\n";
        }
    }
    return s;
}

/// Binary greyscale pixmap, alpha increasing upwards, beta to the right.
std::string heatmap_ppm(const VisibilityField &field) {
    const std::size_t w = field.beta_axis.size();
    const std::size_t h = field.alpha_axis.size();
    const double vmax =
        field.values.empty()
            ? 0.0
            : *std::max_element(field.values.begin(), field.values.end());
    std::string s = "P5\n" + std::to_string(w) + " " + std::to_string(h) +
                    "\n255\n";
    for (std::size_t r = 0; r < h; ++r) {
        const std::size_t i = h - 1 - r;
        for (std::size_t j = 0; j < w; ++j) {
            const double v = vmax > 0.0 ? field.at(i, j) / vmax : 0.0;
            s.push_back(static_cast<char>(static_cast<unsigned char>(
                std::lround(std::clamp(v, 0.0, 1.0) * 255.0))));
        }
    }
    return s;
}

ojson zero_line_summary(const ZeroLineSet &lines) {
    ojson z;
    z["threshold"] = lines.threshold;
    z["degenerate"] = lines.degenerate;
    z["line_count"] = lines.lines.size();
    z["flatness"] = lines.flatness ? ojson(*lines.flatness) : ojson(nullptr);
    ojson spreads = ojson::array();
    for (const ZeroLine &l : lines.lines) {
        spreads.push_back(l.spread());
    }
    z["line_spreads"] = spreads;
    return z;
}

void finish_report(const RunConfig &cfg, const ArtifactDir &dir,
                   const ojson &report) {
    if (cfg.wants("json")) {
        dir.write("report.json", report.dump(2) + "\n");
    }
}

int cmd_discord(const RunConfig &cfg, std::ostream &out) {
    const StateSource src = parse_state_spec(cfg.state_spec);
    const DiscordResult d = discord(src.state);
    ArtifactDir dir(cfg);

    ojson report = report_header(cfg);
    report["state_label"] = src.state.label();
    report["discord"] = {{"value", d.value},
                         {"argmin_basis",
                          {{"theta", d.argmin_basis.theta},
                           {"phi", d.argmin_basis.phi}}},
                         {"min_conditional_entropy", d.min_conditional_entropy},
                         {"optimizer", {{"iterations", d.iterations},
                                        {"spread", d.spread}}}};
    report["mutual_information"] = mutual_information(src.state);
    int code = kExitOk;
    out << "discord = " << fmt15(d.value) << " bits\n";
    if (src.werner_c) {
        const double closed = werner_discord_closed(*src.werner_c);
        const double diff = d.value - closed;
        report["closed_form"] = closed;
        report["difference"] = diff;
        report["consistent"] = std::abs(diff) < kWernerDiscordTolerance;
        out << "closed form = " << fmt15(closed) << " bits\n";
        if (!(std::abs(diff) < kWernerDiscordTolerance)) {
            code = kExitNumerical;
        }
    }
    finish_report(cfg, dir, report);
    out << "artifacts: " << dir.path().string() << "\n";
    return code;
}

int cmd_vismap(const RunConfig &cfg, std::ostream &out) {
    if (cfg.grid < 2) {
        usage("--grid must be at least 2");
    }
    const double threshold = cfg.threshold.value_or(kExactZeroThreshold);
    if (!(threshold > 0.0)) {
        usage("--threshold must be positive");
    }
    const StateSource src = parse_state_spec(cfg.state_spec);
    const auto axis = linspace(0.0, kPi, cfg.grid);
    const VisibilityField field =
        visibility_map(src.state, axis, axis, cfg.phi_a, cfg.phi_b);
    const ZeroLineSet lines = extract_zero_lines(field, threshold);
    ArtifactDir dir(cfg);

    ojson report = report_header(cfg);
    report["state_label"] = src.state.label();
    report["zero_lines"] = zero_line_summary(lines);
    if (cfg.wants("csv")) {
        dir.write("field.csv", field_csv(field));
        dir.write("zerolines.csv", zero_lines_csv(lines));
    }
    if (cfg.wants("ppm")) {
        dir.write("heatmap.ppm", heatmap_ppm(field));
    }
    int code = kExitOk;
    if (src.werner_c) {
        VisibilityField closed = field;
        double worst = 0.0;
        for (std::size_t i = 0; i < axis.size(); ++i) {
            for (std::size_t j = 0; j < axis.size(); ++j) {
                const double v = werner_visibility_closed(
                    *src.werner_c, axis[i], axis[j], cfg.phi_a, cfg.phi_b);
                closed.values[i * axis.size() + j] = v;
                worst = std::max(worst, std::abs(v - field.at(i, j)));
            }
        }
        report["closed_form_max_deviation"] = worst;
        if (cfg.wants("csv")) {
            dir.write("closed_form.csv", field_csv(closed));
        }
        out << "max |exact - closed form| = " << worst << "\n";
        if (!(worst < kClosedFormVisibilityTolerance)) {
            code = kExitNumerical;
        }
    }
    finish_report(cfg, dir, report);
    out << (lines.degenerate ? "degenerate field: every node below threshold\n"
                             : "zero lines: " +
                                   std::to_string(lines.lines.size()) + "\n");
    out << "artifacts: " << dir.path().string() << "\n";
    return code;
}

int cmd_compare_costs(const RunConfig &cfg, std::ostream &out) {
    const Shots m = parse_shots(cfg.m);
    if (m.is_exact()) {
        usage("compare-costs needs a finite --m");
    }
    if (cfg.n < 2) {
        usage("--n must be at least 2");
    }
    ArtifactDir dir(cfg);
    std::string csv = "n,protocol,tomography_fixed,tomography_sampled\n";
    for (std::uint64_t n = 2; n <= cfg.n; ++n) {
        const CostReport r = cost_report(m.value(), n, cfg.d_a, cfg.d_b);
        csv += std::to_string(n) + "," + r.protocol_count + "," +
               r.tomography_fixed_count + "," + r.tomography_sampled_count +
               "\n";
    }
    if (cfg.wants("csv")) {
        dir.write("costs.csv", csv);
    }
    ojson report = report_header(cfg);
    report["symbolic"] = {
        {"protocol_exponent", protocol_exponent(cfg.d_a, cfg.d_b)},
        {"tomography_sampled_exponent", tomography_sampled_exponent(cfg.d_a)},
        {"tomography_sampled_multiplier",
         tomography_sampled_multiplier(cfg.d_a, cfg.d_b)},
        {"tomography_fixed_multiplier",
         tomography_fixed_multiplier(cfg.d_a, cfg.d_b)}};
    const auto crossover = cost_crossover(m.value(), cfg.d_a, cfg.d_b, cfg.n);
    report["crossover_n"] = crossover ? ojson(*crossover) : ojson(nullptr);
    finish_report(cfg, dir, report);
    out << "protocol m n^" << protocol_exponent(cfg.d_a, cfg.d_b) << " vs "
        << tomography_sampled_multiplier(cfg.d_a, cfg.d_b) << " m n^"
        << tomography_sampled_exponent(cfg.d_a) << "; crossover n = "
        << (crossover ? std::to_string(*crossover) : std::string("none"))
        << "\nartifacts: " << dir.path().string() << "\n";
    return kExitOk;
}

int cmd_simulate(const RunConfig &cfg, std::ostream &out) {
    if (cfg.mode != "protocol" && cfg.mode != "tomography" && cfg.mode != "both") {
        usage("--mode must be protocol, tomography or both");
    }
    const Shots m = parse_shots(cfg.m);
    if (cfg.n < 2) {
        usage("--n must be at least 2");
    }
    const StateSource src = parse_state_spec(cfg.state_spec);
    const RandomSeed seed{cfg.seed};
    const bool run_protocol = cfg.mode != "tomography";
    const bool run_tomography = cfg.mode != "protocol";

    std::optional<ProtocolRunResult> run;
    if (run_protocol) {
        ProtocolRunOptions opts;
        opts.phi_a = cfg.phi_a;
        opts.phi_b = cfg.phi_b;
        opts.override_resource_guard = cfg.override_resource_guard;
        run = protocol_run(src.state, ShotBudget{m, cfg.n}, seed, opts);
    }
    std::optional<TomographyResult> tomo;
    if (run_tomography) {
        tomo = tomography(src.state, m, RandomSeed{cfg.seed ^ 0x746f6d6fULL});
    }

    ArtifactDir dir(cfg);
    ojson report = report_header(cfg);
    report["state_label"] = src.state.label();
    int code = kExitOk;

    if (run) {
        const VisibilityField exact =
            visibility_map(src.state, run->field.alpha_axis,
                           run->field.beta_axis, run->field.phi_a,
                           run->field.phi_b);
        double deviation = 0.0;
        for (std::size_t k = 0; k < exact.values.size(); ++k) {
            deviation = std::max(deviation,
                                 std::abs(exact.values[k] - run->field.values[k]));
        }
        const double threshold = cfg.threshold.value_or(
            m.is_exact() ? kExactZeroThreshold : sampled_zero_threshold(m.value()));
        const ZeroLineSet lines = extract_zero_lines(run->field, threshold);
        ojson p;
        p["slice"] = {{"phia", run->field.phi_a}, {"phib", run->field.phi_b}};
        p["max_deviation_from_exact"] = deviation;
        p["zero_lines"] = zero_line_summary(lines);
        if (m.is_exact()) {
            p["measurement_count"] = nullptr;
            p["predicted_count"] = nullptr;
            if (!(deviation < kExactSentinelTolerance)) {
                code = kExitNumerical;
            }
        } else {
            const std::string predicted =
                to_decimal(cost_protocol(m.value(), cfg.n, 2, 2));
            const std::string actual = std::to_string(*run->measurement_count);
            p["measurement_count"] = actual;
            p["predicted_count"] = predicted;
            if (actual != predicted) {
                code = kExitNumerical;
            }
            out << "protocol shots: " << actual << " (model " << predicted
                << ")\n";
        }
        report["protocol"] = p;
        if (cfg.wants("csv")) {
            dir.write("field.csv", field_csv(run->field));
            dir.write("zerolines.csv", zero_lines_csv(lines));
        }
        if (cfg.wants("ppm")) {
            dir.write("heatmap.ppm", heatmap_ppm(run->field));
        }
    }

    if (tomo) {
        ojson t;
        t["trace_distance"] = tomo->trace_distance_to_truth;
        t["discord_of_reconstruction"] = discord(tomo->projected).value;
        t["discord_of_input"] = discord(src.state).value;
        if (m.is_exact()) {
            t["measurement_count"] = nullptr;
            t["predicted_count"] = nullptr;
        } else {
            const std::string predicted =
                to_decimal(cost_tomography(m.value(), cfg.n, 2, 2, false));
            const std::string actual = std::to_string(*tomo->shots_used);
            t["measurement_count"] = actual;
            t["predicted_count"] = predicted;
            t["predicted_count_sampled_basis"] =
                to_decimal(cost_tomography(m.value(), cfg.n, 2, 2, true));
            if (actual != predicted) {
                code = kExitNumerical;
            }
            out << "tomography shots: " << actual << " (model " << predicted
                << ")\n";
        }
        report["tomography"] = t;
        if (cfg.wants("json")) {
            dir.write("recon_state.json",
                      state_to_json(tomo->projected).dump(2) + "\n");
        }
        out << "trace distance = " << fmt15(tomo->trace_distance_to_truth)
            << "\n";
    }
    finish_report(cfg, dir, report);
    out << "artifacts: " << dir.path().string() << "\n";
    return code;
}

int cmd_export_state(const RunConfig &cfg, std::ostream &out) {
    if (cfg.output_file.empty()) {
        usage("export-state needs --out");
    }
    const StateSource src = parse_state_spec(cfg.state_spec);
    write_state_file(cfg.output_file, src.state);
    out << "wrote " << cfg.output_file.string() << "\n";
    return kExitOk;
}

} // namespace

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Usage:
    case ErrorKind::InvalidGrid:
        return kExitUsage;
    case ErrorKind::InvalidDimension:
    case ErrorKind::NotHermitian:
    case ErrorKind::NotPositive:
    case ErrorKind::NotNormalized:
    case ErrorKind::OutOfRange:
    case ErrorKind::Io:
    case ErrorKind::Parse:
    case ErrorKind::UnsupportedObservable:
        return kExitValidation;
    case ErrorKind::ResourceGuard:
        return kExitResourceGuard;
    case ErrorKind::NotConverged:
    case ErrorKind::InternalConsistency:
    case ErrorKind::NotZeroDiscord:
    case ErrorKind::ReconstructionFailed:
    case ErrorKind::CostOverflow:
        return kExitNumerical;
    }
    return kExitNumerical;
}

bool RunConfig::wants(const std::string &format) const {
    return std::find(formats.begin(), formats.end(), format) != formats.end();
}

StateSource parse_state_spec(const std::string &spec_in) {
    std::string spec = spec_in;
    if (spec.rfind("builtin:", 0) == 0) {
        spec = spec.substr(8);
    }
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string arg =
        colon == std::string::npos ? std::string() : spec.substr(colon + 1);
    auto need_arg = [&] {
        if (colon == std::string::npos) {
            throw Error(ErrorKind::Parse,
                        "state spec '" + spec_in + "' needs an argument");
        }
    };

    if (kind == "werner") {
        need_arg();
        const double c = parse_double(arg, "werner parameter");
        return {werner(c), c};
    }
    if (kind == "maximally-mixed") {
        return {maximally_mixed(), std::nullopt};
    }
    if (kind == "singlet") {
        return {DensityMatrix(singlet_projector(), "singlet"), 1.0};
    }
    if (kind == "product") {
        need_arg();
        const auto semi = arg.find(';');
        if (semi == std::string::npos) {
            throw Error(ErrorKind::Parse,
                        "product state needs 'ax,ay,az;bx,by,bz'");
        }
        const Mat4 m = tensor(qubit_state(parse_bloch(arg.substr(0, semi))),
                              qubit_state(parse_bloch(arg.substr(semi + 1))));
        return {DensityMatrix(m, "product:" + arg), std::nullopt};
    }
    if (kind == "zd") {
        need_arg();
        return {zero_discord_state({parse_u64(arg, "zd seed")}), std::nullopt};
    }
    if (kind == "ginibre") {
        need_arg();
        return {random_state({parse_u64(arg, "ginibre seed")}), std::nullopt};
    }
    if (kind == "file") {
        need_arg();
        return {read_state_file(arg), std::nullopt};
    }
    throw Error(ErrorKind::Parse, "unknown state spec '" + spec_in + "'");
}

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
    RunConfig cfg;
    std::string formats = "csv,ppm,json";
    std::optional<std::uint64_t> seed_flag;

    CLI::App app{"Two-qubit discord, interferometric visibility and "
                 "measurement-cost toolkit"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--seed", seed_flag, "RNG seed (env DISCORDLAB_SEED)");
        sub->add_option("--outdir", cfg.outdir, "Artifact root directory");
        sub->add_option("--format", formats, "Comma list of csv,ppm,json");
        sub->add_option("--stamp", cfg.stamp,
                        "Run directory suffix (default: UTC timestamp)");
    };
    auto add_state = [&](CLI::App *sub) {
        sub->add_option("--state", cfg.state_spec,
                        "werner:<c> | maximally-mixed | singlet | "
                        "product:<a;b> | zd:<seed> | ginibre:<seed> | "
                        "file:<path>")
            ->required();
    };

    CLI::App *discord_cmd = app.add_subcommand("discord", "Quantum discord of a state");
    add_state(discord_cmd);
    add_common(discord_cmd);

    CLI::App *vismap = app.add_subcommand("vismap", "Exact visibility map over (alpha, beta)");
    add_state(vismap);
    add_common(vismap);
    vismap->add_option("--grid", cfg.grid, "Nodes per axis on [0, pi]");
    vismap->add_option("--phia", cfg.phi_a, "A-rotation azimuth");
    vismap->add_option("--phib", cfg.phi_b, "B-rotation azimuth");
    vismap->add_option("--threshold", cfg.threshold, "Zero-visibility threshold");

    CLI::App *costs = app.add_subcommand("compare-costs", "Protocol vs tomography measurement counts");
    add_common(costs);
    std::string costs_m = "100";
    std::uint64_t costs_n = 20;
    costs->add_option("--m", costs_m, "Shots per setting");
    costs->add_option("--n", costs_n, "Largest n in the table (rows 2..n)");
    costs->add_option("--da", cfg.d_a, "Dimension of A");
    costs->add_option("--db", cfg.d_b, "Dimension of B");

    CLI::App *simulate = app.add_subcommand("simulate", "Shot-level protocol and tomography");
    add_state(simulate);
    add_common(simulate);
    simulate->add_option("--m", cfg.m, "Shots per setting, or inf");
    simulate->add_option("--n", cfg.n, "Grid points per protocol parameter");
    simulate->add_option("--phia", cfg.phi_a, "Reported phi_a slice");
    simulate->add_option("--phib", cfg.phi_b, "Reported phi_b slice");
    simulate->add_option("--threshold", cfg.threshold, "Zero-visibility threshold");
    simulate->add_option("--mode", cfg.mode, "protocol | tomography | both");
    simulate->add_flag("--override-resource-guard", cfg.override_resource_guard,
                       "Allow more than 1e9 simulated shots");

    CLI::App *export_state = app.add_subcommand("export-state", "Write a state file");
    add_state(export_state);
    export_state->add_option("--out", cfg.output_file, "Destination path")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    for (CLI::App *sub : app.get_subcommands()) {
        cfg.command = sub->get_name();
    }
    cfg.formats.clear();
    {
        std::stringstream ss(formats);
        std::string f;
        while (std::getline(ss, f, ',')) {
            if (f != "csv" && f != "ppm" && f != "json") {
                err << "error: unknown format '" << f << "'\n";
                return kExitUsage;
            }
            cfg.formats.push_back(f);
        }
    }

    try {
        if (seed_flag) {
            cfg.seed = *seed_flag;
        } else if (const char *env = std::getenv(kSeedEnvVar)) {
            cfg.seed = parse_u64(env, kSeedEnvVar);
        }
        if (cfg.command == "discord") {
            return cmd_discord(cfg, out);
        }
        if (cfg.command == "vismap") {
            return cmd_vismap(cfg, out);
        }
        if (cfg.command == "compare-costs") {
            cfg.m = costs_m;
            cfg.n = costs_n;
            return cmd_compare_costs(cfg, out);
        }
        if (cfg.command == "simulate") {
            return cmd_simulate(cfg, out);
        }
        return cmd_export_state(cfg, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        const int code = exit_code_for(e.kind());
        return code;
    }
}

} // namespace discordlab
