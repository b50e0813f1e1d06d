// SPDX-License-Identifier: Apache-2.0
//
// mimo-ee: energy-efficiency optimal antenna counts for single-user massive MIMO
// Copyright (C) 2026 The mimo-ee authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// mimo-ee: sweeps and single-point queries for the EE-optimal antenna count.
//
//   mimo-ee sweep           --config fig1.cfg --out fig1.csv
//   mimo-ee optimize        --config c.cfg --rate 5 --gc-db -140
//   mimo-ee pa-fraction     --config c.cfg --rate 5 --gc-db -170
//   mimo-ee compare-fixed-m --config c.cfg --rate 5 --gc-db -150 --antennas 1
//
// Exit status: 0 success, 1 configuration/usage/I/O error, 2 numerical failure.

#include "mimo_ee/mimo_ee.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

struct CommonOptions {
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::string objectives;
    std::optional<double> rate;
    std::optional<double> gc_db;
    std::optional<unsigned> threads;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool config_required)
{
    auto* config = cmd->add_option("--config", opts.config_path, "flat key = value configuration file");
    if (config_required)
        config->required();
    config->check(CLI::ExistingFile);
    cmd->add_option("--seed", opts.seed, "seed for the Monte Carlo capacity estimator");
}

void add_point(CLI::App* cmd, CommonOptions& opts)
{
    cmd->add_option("--rate", opts.rate, "spectral efficiency R in bits/s/Hz (overrides config)");
    cmd->add_option("--gc-db", opts.gc_db, "average channel gain in dB (overrides config)");
}

mimo_ee::RunConfig resolve(const CommonOptions& opts)
{
    mimo_ee::RunConfig cfg = opts.config_path.empty() ? mimo_ee::RunConfig{} : mimo_ee::load_config(opts.config_path);
    if (opts.seed)
        cfg.capacity.seed = *opts.seed;
    if (!opts.objectives.empty())
        cfg.objectives = mimo_ee::parse_objectives(opts.objectives);
    if (!opts.out_path.empty())
        cfg.output_path = opts.out_path;
    if (opts.rate) {
        if (!(*opts.rate > 0.0))
            throw mimo_ee::InvalidArgument("--rate must be > 0");
        cfg.rate = *opts.rate;
    }
    if (opts.gc_db)
        cfg.channel_gain_db = *opts.gc_db;
    if (opts.threads)
        cfg.threads = *opts.threads;
    cfg.point_params().validate();
    return cfg;
}

mimo_ee::SweepContext make_context(const mimo_ee::RunConfig& cfg)
{
    mimo_ee::SweepContext ctx;
    ctx.optimizer = mimo_ee::ExactOptimizer(mimo_ee::CapacityEngine(cfg.capacity), cfg.optimizer);
    ctx.dominance_threshold = cfg.dominance_threshold;
    ctx.threads = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
    return ctx;
}

int write_curve(const mimo_ee::TradeoffCurve& curve, const std::string& path)
{
    if (path.empty() || path == "-")
        mimo_ee::write_csv(curve, std::cout);
    else
        mimo_ee::emit_csv(curve, path);
    for (const auto& row : curve.rows)
        if (!row.result)
            return kExitNumerical;
    return 0;
}

int run_sweep(const CommonOptions& opts)
{
    const mimo_ee::RunConfig cfg = resolve(opts);
    const mimo_ee::SweepSpec spec = cfg.sweep_spec();
    return write_curve(mimo_ee::run_sweep(spec, make_context(cfg)), spec.output_path);
}

int run_optimize(const CommonOptions& opts)
{
    const mimo_ee::RunConfig cfg = resolve(opts);
    mimo_ee::SweepSpec spec;
    spec.variable = mimo_ee::SweepVariable::rate;
    spec.grid = {cfg.rate};
    spec.fixed_value = cfg.channel_gain_db;
    spec.params = cfg.point_params();
    spec.objectives = cfg.objectives;
    mimo_ee::SweepContext ctx = make_context(cfg);
    ctx.threads = 1;
    return write_curve(mimo_ee::run_sweep(spec, ctx), cfg.output_path);
}

int run_pa_fraction(const CommonOptions& opts)
{
    const mimo_ee::RunConfig cfg = resolve(opts);
    const mimo_ee::SystemParams params = cfg.point_params();
    const mimo_ee::Theta theta = mimo_ee::normalize(params);
    const mimo_ee::EEResult relaxed = mimo_ee::to_physical(mimo_ee::relaxed_optimum(cfg.rate, theta), cfg.rate, params);
    std::cout << "rate,gc_db,relaxed_M,f_pa_closed_form,f_pa_breakdown\n"
              << mimo_ee::format_number(cfg.rate) << ',' << mimo_ee::format_number(cfg.channel_gain_db) << ','
              << mimo_ee::format_number(relaxed.antennas) << ','
              << mimo_ee::format_number(mimo_ee::pa_fraction_closed_form(params, cfg.rate)) << ','
              << mimo_ee::format_number(relaxed.breakdown.f_pa) << '\n';
    return 0;
}

int run_compare(const CommonOptions& opts, std::optional<int> antennas)
{
    const mimo_ee::RunConfig cfg = resolve(opts);
    const int fixed = antennas.value_or(cfg.compare_antennas);
    if (fixed < 1)
        throw mimo_ee::InvalidArgument("--antennas must be >= 1");
    const mimo_ee::SystemParams params = cfg.point_params();
    const mimo_ee::ExactOptimizer optimizer = make_context(cfg).optimizer;
    const mimo_ee::Theta theta = mimo_ee::normalize(params);
    const mimo_ee::EEResult best = mimo_ee::to_physical(optimizer.optimize_exact(cfg.rate, theta), cfg.rate, params);
    const mimo_ee::EEResult pinned = mimo_ee::to_physical(optimizer.zeta_exact(fixed, cfg.rate, theta), cfg.rate, params);
    std::cout << "rate,gc_db,optimal_M,eta_optimal,fixed_M,eta_fixed,ratio\n"
              << mimo_ee::format_number(cfg.rate) << ',' << mimo_ee::format_number(cfg.channel_gain_db) << ','
              << mimo_ee::format_number(best.antennas) << ',' << mimo_ee::format_number(best.eta) << ',' << fixed << ','
              << mimo_ee::format_number(pinned.eta) << ','
              << mimo_ee::format_number(mimo_ee::compare_fixed_m(cfg.rate, params, fixed, optimizer)) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Energy-efficiency optimal antenna counts for single-user massive MIMO"};
    app.require_subcommand(1);

    CommonOptions sweep_opts, optimize_opts, pa_opts, compare_opts;
    std::optional<int> compare_antennas;

    auto* sweep = app.add_subcommand("sweep", "sweep R or Gc and write the trade-off CSV");
    add_common(sweep, sweep_opts, true);
    sweep->add_option("--out", sweep_opts.out_path, "CSV output path ('-' for stdout)");
    sweep->add_option("--objective", sweep_opts.objectives, "comma list of exact,bound,relaxed,fixed-M-<k>");
    sweep->add_option("--threads", sweep_opts.threads, "worker threads (0: one per hardware thread)");

    auto* optimize = app.add_subcommand("optimize", "optimize a single (R, Gc) point");
    add_common(optimize, optimize_opts, false);
    add_point(optimize, optimize_opts);
    optimize->add_option("--out", optimize_opts.out_path, "CSV output path (default stdout)");
    optimize->add_option("--objective", optimize_opts.objectives, "comma list of exact,bound,relaxed,fixed-M-<k>");

    auto* pa = app.add_subcommand("pa-fraction", "fraction of total power drawn by the PAs at the relaxed optimum");
    add_common(pa, pa_opts, false);
    add_point(pa, pa_opts);

    auto* compare = app.add_subcommand("compare-fixed-m", "ratio of the optimal EE to the EE with M pinned");
    add_common(compare, compare_opts, false);
    add_point(compare, compare_opts);
    compare->add_option("--antennas", compare_antennas, "pinned antenna count (default: compare.antennas or 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (sweep->parsed())
            return run_sweep(sweep_opts);
        if (optimize->parsed())
            return run_optimize(optimize_opts);
        if (pa->parsed())
            return run_pa_fraction(pa_opts);
        if (compare->parsed())
            return run_compare(compare_opts, compare_antennas);
    } catch (const mimo_ee::NumericalError& e) {
        std::cerr << "mimo-ee: numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const mimo_ee::InvalidArgument& e) {
        std::cerr << "mimo-ee: " << e.what() << '\n';
        return kExitConfig;
    } catch (const mimo_ee::IoError& e) {
        std::cerr << "mimo-ee: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}
