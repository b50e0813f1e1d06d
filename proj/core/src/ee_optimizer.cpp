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

#include "mimo_ee/ee_optimizer.hpp"

#include "mimo_ee/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mimo_ee {

namespace {

constexpr double kMaxEnumerableAntennas = 1e8;

bool preferred(double value, int antennas, double best_value, int best_antennas, TieBreak tie)
{
    if (value < best_value)
        return true;
    if (value > best_value)
        return false;
    return tie == TieBreak::smaller ? antennas < best_antennas : antennas > best_antennas;
}

void require_rate(double rate)
{
    detail::require_positive(rate, "rate");
}

void require_antenna_cost(const Theta& theta)
{
    if (!(theta.rho > 0.0))
        throw InvalidArgument("relaxed optimum needs rho > 0 (a positive per-antenna power)");
}

} // namespace

std::string_view to_string(Objective objective)
{
    switch (objective) {
    case Objective::exact: return "exact";
    case Objective::bound: return "bound";
    case Objective::relaxed: return "relaxed";
    case Objective::fixed_antennas: return "fixed";
    }
    return "unknown";
}

TieBreak parse_tie_break(std::string_view text)
{
    if (text == "smaller")
        return TieBreak::smaller;
    if (text == "larger")
        return TieBreak::larger;
    throw InvalidArgument("tie_break must be 'smaller' or 'larger', got '" + std::string(text) + "'");
}

EEResult to_physical(const NormalizedEfficiency& point, double rate, const SystemParams& params)
{
    EEResult r;
    r.objective = point.objective;
    r.antennas = point.antennas;
    r.gamma = point.gamma;
    r.zeta = point.zeta;
    r.eta = point.zeta * params.channel_gain / params.noise_psd_w_per_hz;
    r.breakdown = total_power(params, point.antennas, rate, tx_power_for_snr(params, point.gamma));
    r.search = point.search;
    return r;
}

double inverse_zeta(double antennas, double rate, double gamma, const Theta& theta)
{
    return theta.rho_d + (antennas * theta.rho + theta.rho_c) / rate + theta.alpha * gamma / rate;
}

NormalizedEfficiency zeta_bound(int antennas, double rate, const Theta& theta)
{
    theta.validate();
    require_rate(rate);
    NormalizedEfficiency out;
    out.objective = Objective::bound;
    out.antennas = antennas;
    out.gamma = snr_lower_bound_rate(antennas, rate);
    out.zeta = 1.0 / inverse_zeta(out.antennas, rate, out.gamma, theta);
    return out;
}

double relaxed_antennas(double rate, const Theta& theta)
{
    theta.validate();
    require_rate(rate);
    require_antenna_cost(theta);
    return 1.0 + std::sqrt(theta.alpha * rate_excess(rate) / theta.rho);
}

NormalizedEfficiency relaxed_optimum(double rate, const Theta& theta)
{
    theta.validate();
    require_rate(rate);
    require_antenna_cost(theta);
    const double excess = rate_excess(rate);
    NormalizedEfficiency out;
    out.objective = Objective::relaxed;
    out.antennas = 1.0 + std::sqrt(theta.alpha * excess / theta.rho);
    // gamma_1(M', R) = (2^R - 1) / (M' - 1), written so that it stays finite as R -> 0.
    out.gamma = std::sqrt(theta.rho * excess / theta.alpha);
    out.zeta = rate / (theta.rho + theta.rho_c + rate * theta.rho_d + 2.0 * std::sqrt(theta.alpha * theta.rho * excess));
    return out;
}

NormalizedEfficiency optimize_bound(double rate, const Theta& theta, TieBreak tie)
{
    const double m_relaxed = relaxed_antennas(rate, theta);
    if (!(m_relaxed < kMaxEnumerableAntennas))
        throw InvalidArgument("relaxed antenna count too large to enumerate");

    auto objective = [&](int m) { return zeta_bound(m, rate, theta).inverse_zeta(); };

    const int lo = std::max(2, static_cast<int>(std::floor(m_relaxed)));
    const int hi = std::max(2, static_cast<int>(std::ceil(m_relaxed)));
    int best = lo;
    double best_value = objective(lo);
    if (hi != lo) {
        const double v = objective(hi);
        if (preferred(v, hi, best_value, best, tie)) {
            best = hi;
            best_value = v;
        }
    }

    const bool left_better = best > 2 && objective(best - 1) < best_value;
    const bool right_better = objective(best + 1) < best_value;
    if (left_better || right_better) {
        const int limit = 2 * hi + 8;
        for (int m = 2; m <= limit; ++m) {
            const double v = objective(m);
            if (preferred(v, m, best_value, best, tie)) {
                best = m;
                best_value = v;
            }
        }
    }
    return zeta_bound(best, rate, theta);
}

void OptimizerConfig::validate() const
{
    detail::require_positive(search_cap_multiplier, "search_cap_multiplier");
    if (search_cap_offset < 0)
        throw InvalidArgument("search_cap_offset must be >= 0");
    if (stop_width < 1)
        throw InvalidArgument("stop_width must be >= 1");
}

int OptimizerConfig::default_search_cap(double relaxed_m) const
{
    const double cap = search_cap_multiplier * std::ceil(relaxed_m) + search_cap_offset;
    if (!(cap < kMaxEnumerableAntennas))
        throw InvalidArgument("search cap too large to enumerate");
    return std::max(1, static_cast<int>(cap));
}

ExactOptimizer::ExactOptimizer(CapacityEngine capacity, OptimizerConfig config)
    : capacity_(std::move(capacity)), config_(config)
{
    config_.validate();
}

NormalizedEfficiency ExactOptimizer::zeta_exact(int antennas, double rate, const Theta& theta) const
{
    theta.validate();
    require_rate(rate);
    const SnrSolution snr = capacity_.invert_capacity(antennas, rate);
    NormalizedEfficiency out;
    out.objective = Objective::exact;
    out.antennas = antennas;
    out.gamma = snr.gamma;
    out.zeta = 1.0 / inverse_zeta(out.antennas, rate, out.gamma, theta);
    return out;
}

NormalizedEfficiency ExactOptimizer::optimize_exact(double rate, const Theta& theta) const
{
    return optimize_exact(rate, theta, config_.default_search_cap(relaxed_antennas(rate, theta)));
}

NormalizedEfficiency ExactOptimizer::optimize_exact(double rate, const Theta& theta, int search_cap) const
{
    const double m_relaxed = relaxed_antennas(rate, theta);
    if (search_cap < 2.0 * std::ceil(m_relaxed))
        throw InvalidArgument("search_cap must be at least 2 ceil(M')");

    SearchReport report;
    report.search_cap = search_cap;
    report.start = std::clamp(static_cast<int>(std::lround(m_relaxed)), 1, search_cap);

    auto objective = [&](int m) {
        ++report.evaluations;
        return inverse_zeta(m, rate, capacity_.invert_capacity(m, rate).gamma, theta);
    };

    int best = report.start;
    double best_value = objective(best);
    const TieBreak tie = config_.tie_break;

    // Scans one side; returns true if the stop rule fired.
    auto scan = [&](int step) {
        double previous = best_value;
        int rising = 0;
        bool fell_last = false;
        for (int m = report.start + step; m >= 1 && m <= search_cap; m += step) {
            const double v = objective(m);
            if (v > previous) {
                ++rising;
                fell_last = false;
            } else {
                if (rising > 0 && v < previous)
                    ++report.unimodality_violations;
                rising = 0;
                fell_last = v < previous;
            }
            if (preferred(v, m, best_value, best, tie)) {
                best = m;
                best_value = v;
            }
            previous = v;
            if (rising >= config_.stop_width)
                return std::pair{true, fell_last};
        }
        return std::pair{false, fell_last};
    };

    const auto [up_stopped, up_falling] = scan(+1);
    if (!up_stopped) {
        report.reached_cap = true;
        report.still_decreasing = up_falling || report.start == search_cap;
    }
    scan(-1);

    NormalizedEfficiency out = zeta_exact(best, rate, theta);
    out.search = report;
    return out;
}

} // namespace mimo_ee
