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

// Acceptance suite: one PASS/FAIL line per criterion. With no arguments every
// criterion runs; `--only N` runs criterion N. Exit status is 1 if any ran and
// failed.
#include "oracles.hpp"

#include <mimo_ee/mimo_ee.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace mimo_ee;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* format, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

SystemParams reference_db(double gc_db)
{
    return SystemParams::reference(db_to_linear(gc_db));
}

std::vector<double> log_grid(double lo, double hi, int points)
{
    std::vector<double> out;
    for (int i = 0; i < points; ++i)
        out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1)));
    return out;
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= x.size();
    my /= y.size();
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

Theta random_theta(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Theta t;
    t.alpha = 1.0 + 3.0 * u(rng);
    t.rho = std::pow(10.0, -3.0 + 4.0 * u(rng));
    t.rho_c = 10.0 * t.rho * u(rng);
    t.rho_d = 1e-3 * u(rng);
    return t;
}

const std::vector<int> kAntennas{1, 2, 4, 8, 16, 64, 256};

Outcome ratio_reproduction()
{
    const ExactOptimizer opt;
    const double r140 = compare_fixed_m(5.0, reference_db(-140.0), 1, opt);
    const double r150 = compare_fixed_m(5.0, reference_db(-150.0), 1, opt);
    const bool pass = std::abs(r140 / 5.65 - 1.0) <= 0.10 && std::abs(r150 / 29.59 - 1.0) <= 0.10;
    return {pass, fmt("ratio %.4f at -140 dB (target 5.65 +-10%%), %.4f at -150 dB (target 29.59 +-10%%)", r140, r150)};
}

Outcome single_antenna_region()
{
    const ExactOptimizer opt;
    std::string misses;
    for (double gc_db = -120.0; gc_db <= -90.0; gc_db += 2.0) {
        const SystemParams p = reference_db(gc_db);
        const NormalizedEfficiency x = opt.optimize_exact(5.0, normalize(p));
        if (x.antennas != 1.0) {
            const double gain = x.zeta / opt.zeta_exact(1, 5.0, normalize(p)).zeta;
            misses += fmt(" M0*=%g at %g dB (EE %.2f%% above M=1);", x.antennas, gc_db, 100.0 * (gain - 1.0));
        }
    }
    if (misses.empty())
        return {true, "M0* = 1 on the 2 dB grid from -120 to -90 dB"};
    return {false, "single antenna not optimal:" + misses};
}

Outcome near_optimality()
{
    const ExactOptimizer opt;
    double worst_gap = 0.0;
    std::string gaps;
    for (double gc_db : {-150.0, -145.0, -140.0}) {
        const SystemParams p = reference_db(gc_db);
        const double eta_exact = to_physical(opt.optimize_exact(5.0, normalize(p)), 5.0, p).eta;
        const double gap = std::abs(relaxed_eta(5.0, p) - eta_exact) / eta_exact;
        worst_gap = std::max(worst_gap, gap);
        gaps += fmt(" %.3f%%", 100.0 * gap);
    }
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> rate(1.0, 15.0);
    double worst_distance = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double r = rate(rng);
        const Theta t = random_theta(rng);
        worst_distance = std::max(worst_distance, std::abs(optimize_bound(r, t).antennas - relaxed_antennas(r, t)));
    }
    const bool pass = worst_gap < 0.03 && worst_distance < 1.0;
    return {pass, fmt("relaxed-vs-exact EE gaps%s (limit 3%%); max |M1* - M'| = %.4f over 1000 draws (limit 1)",
                      gaps.c_str(), worst_distance)};
}

Outcome sandwich()
{
    const CapacityEngine engine;
    int violations = 0, checked = 0;
    for (int m : kAntennas) {
        for (double gamma : log_grid(1e-3, 1e3, 61)) {
            const CapacityEstimate est = engine.ergodic_capacity(m, gamma);
            const CapacityBounds b = capacity_bounds(m, gamma);
            ++checked;
            if (est.value < b.lower - est.abs_error_bound || est.value > b.upper + est.abs_error_bound)
                ++violations;
        }
    }
    return {violations == 0, fmt("%d violations over %d (M, gamma) points", violations, checked)};
}

Outcome inversion_bracket()
{
    const CapacityEngine engine;
    int violations = 0, checked = 0;
    for (int m : kAntennas) {
        if (m < 2)
            continue;
        for (double rate : {1.0, 5.0, 10.0}) {
            const double excess = std::pow(2.0, rate) - 1.0;
            const double gamma = engine.invert_capacity(m, rate).gamma;
            ++checked;
            if (gamma < excess / m || gamma > excess / (m - 1))
                ++violations;
        }
    }
    return {violations == 0, fmt("%d violations over %d (M, R) points", violations, checked)};
}

Outcome small_rate_linearity()
{
    const SystemParams p = reference_db(-150.0);
    const Theta t = normalize(p);
    const double target = 1.0 / (t.rho + t.rho_c);
    int covered = 0;
    double worst = 0.0, largest_rate = 0.0;
    for (double log_r = -8.0; log_r <= 1.0 + 1e-9; log_r += 0.05) {
        const double rate = std::pow(10.0, log_r);
        const RegimeCheck& c = classify(rate, p).checks[0];
        if (c.rhs < 10.0 * c.lhs)
            continue;
        ++covered;
        largest_rate = rate;
        worst = std::max(worst, std::abs(relaxed_optimum(rate, t).zeta / rate - target) / target);
    }
    const bool pass = covered > 0 && worst < 0.02;
    return {pass, fmt("%d rates with dominance >= 10 (up to R = %.3g); max deviation of zeta'/R from 1/(rho + rho_c) "
                      "%.3f%% (limit 2%%)",
                      covered, largest_rate, 100.0 * worst)};
}

Outcome weak_channel_scaling()
{
    std::vector<double> x, y_eta, y_m;
    int in_regime = 0;
    for (double log_gc = -18.0; log_gc <= -16.0 + 1e-9; log_gc += 0.1) {
        const SystemParams p = SystemParams::reference(std::pow(10.0, log_gc));
        x.push_back(std::log(p.channel_gain));
        y_eta.push_back(std::log(relaxed_eta(5.0, p)));
        y_m.push_back(std::log(relaxed_antennas(5.0, normalize(p)) - 1.0));
        in_regime += classify(5.0, p).holds(Regime::small_gain);
    }
    const double eta_slope = least_squares_slope(x, y_eta);
    const double m_slope = least_squares_slope(x, y_m);
    const bool pass = eta_slope >= 0.48 && eta_slope <= 0.52 && m_slope >= -0.52 && m_slope <= -0.48;
    return {pass, fmt("slope of log eta' = %.4f (need [0.48, 0.52]); slope of log(M' - 1) = %.4f (need [-0.52, -0.48]); "
                      "%d of %zu grid points satisfy the small-Gc test at 10x",
                      eta_slope, m_slope, in_regime, x.size())};
}

Outcome pa_fraction_limits()
{
    double max_f = 0.0;
    for (double gc_db = -200.0; gc_db <= -60.0; gc_db += 2.0)
        for (double rate = 0.1; rate <= 30.0; rate += 0.1)
            max_f = std::max(max_f, pa_fraction_closed_form(reference_db(gc_db), rate));
    const double weak = pa_fraction_closed_form(reference_db(-170.0), 5.0);
    const double strong = pa_fraction_closed_form(reference_db(-100.0), 5.0);
    const bool pass = max_f < 0.5 && weak > 0.45 && strong < 0.05;
    return {pass, fmt("max f_PA %.9f (< 0.5); f_PA(5, -170 dB) = %.4f (> 0.45); f_PA(5, -100 dB) = %.5f (< 0.05)", max_f,
                      weak, strong)};
}

Outcome convexity()
{
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> rate_draw(1.0, 15.0);
    int negative = 0;
    double worst_rel = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double rate = rate_draw(rng);
        const Theta t = random_theta(rng);
        std::vector<double> f(1001);
        for (int m = 2; m <= 1000; ++m)
            f[m] = 1.0 / zeta_bound(m, rate, t).zeta;
        for (int m = 3; m < 1000; ++m)
            if (!(f[m + 1] - 2.0 * f[m] + f[m - 1] > 0.0))
                ++negative;
        const oracle::ThetaValues o{t.alpha, t.rho, t.rho_c, t.rho_d};
        const double m_relaxed = relaxed_antennas(rate, t);
        const double m_golden = oracle::golden_section_min(
            [&](double m) { return oracle::inverse_zeta_bound(m, rate, o); }, 1.0 + 1e-9, 10.0 * m_relaxed + 10.0);
        worst_rel = std::max(worst_rel, std::abs(m_golden - m_relaxed) / m_relaxed);
    }
    const bool pass = negative == 0 && worst_rel <= 1e-6;
    return {pass, fmt("%d non-positive second differences over 100 draws x M in [2, 1000]; max relative "
                      "golden-section gap %.3g (limit 1e-6)",
                      negative, worst_rel)};
}

Outcome determinism(const std::filesystem::path& config, const std::filesystem::path& workdir)
{
    const RunConfig cfg = load_config(config);
    SweepContext ctx;
    ctx.optimizer = ExactOptimizer(CapacityEngine(cfg.capacity), cfg.optimizer);
    ctx.dominance_threshold = cfg.dominance_threshold;
    std::vector<std::string> bytes;
    for (unsigned threads : {1u, 4u}) {
        ctx.threads = threads;
        const std::filesystem::path out = workdir / ("determinism_" + std::to_string(threads) + ".csv");
        emit_csv(run_sweep(cfg.sweep_spec(), ctx), out);
        std::ifstream in(out, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        bytes.push_back(s.str());
    }
    const bool pass = !bytes[0].empty() && bytes[0] == bytes[1];
    return {pass, fmt("%zu bytes per run, %s", bytes[0].size(), pass ? "byte-identical" : "outputs differ")};
}

} // namespace

int main(int argc, char** argv)
{
    int only = 0;
    if (argc == 3 && std::string(argv[1]) == "--only")
        only = std::atoi(argv[2]);
    else if (argc != 1) {
        std::cerr << "usage: " << argv[0] << " [--only N]\n";
        return 2;
    }

    const std::filesystem::path workdir = std::filesystem::temp_directory_path() / "mimo_ee_acceptance";
    std::filesystem::create_directories(workdir);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"exact-to-single-antenna EE ratio", ratio_reproduction},
        {"single antenna optimal for Gc >= -120 dB", single_antenna_region},
        {"relaxation near-optimality", near_optimality},
        {"capacity sandwich", sandwich},
        {"inversion bracket", inversion_bracket},
        {"small-R linearity", small_rate_linearity},
        {"small-Gc square-root scaling", weak_channel_scaling},
        {"PA fraction limits", pa_fraction_limits},
        {"bound convexity and relaxed minimizer", convexity},
        {"sweep determinism", [&] { return determinism(MIMO_EE_GC_SWEEP_CONFIG, workdir); }},
    };

    int failures = 0, ran = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int number = static_cast<int>(i) + 1;
        if (only != 0 && only != number)
            continue;
        ++ran;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << number << " (" << criteria[i].first
                  << "): " << o.detail << std::endl;
    }
    if (ran == 0) {
        std::cerr << "no criterion numbered " << only << '\n';
        return 2;
    }
    std::cout << (ran - failures) << "/" << ran << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
