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

#include "mimo_ee/regime_analyzer.hpp"

#include "mimo_ee/capacity_engine.hpp"
#include "mimo_ee/ee_optimizer.hpp"
#include "mimo_ee/errors.hpp"

#include <cmath>

namespace mimo_ee {

namespace {

RegimeCheck much_less(Regime regime, double lhs, double rhs, double threshold)
{
    RegimeCheck c;
    c.regime = regime;
    c.lhs = lhs;
    c.rhs = rhs;
    c.dominance_ratio = lhs / rhs;
    c.satisfied = lhs * threshold < rhs;
    return c;
}

RegimeCheck much_greater(Regime regime, double lhs, double rhs, double threshold)
{
    RegimeCheck c = much_less(regime, rhs, lhs, threshold);
    c.lhs = lhs;
    c.rhs = rhs;
    c.dominance_ratio = lhs / rhs;
    return c;
}

// sqrt(N0 B / Gc) sqrt(alpha (2^R - 1) (P_BS + 2 C0 B)): the PA draw at M'.
double relaxed_pa_power(double rate, const SystemParams& params)
{
    return std::sqrt(params.noise_power_w() / params.channel_gain)
         * std::sqrt(params.pa_inefficiency * rate_excess(rate) * params.per_antenna_power_w());
}

double rate_independent_power(double rate, const SystemParams& params)
{
    return params.per_antenna_power_w() + params.circuit_power_w()
         + rate * params.bandwidth_hz * params.p_dec_w_per_bps;
}

} // namespace

std::string_view to_string(Regime regime)
{
    switch (regime) {
    case Regime::small_rate: return "small-R";
    case Regime::large_rate: return "large-R";
    case Regime::large_gain: return "large-Gc";
    case Regime::small_gain: return "small-Gc";
    case Regime::transitional: return "transitional";
    }
    return "unknown";
}

const RegimeCheck* RegimeReport::primary() const
{
    for (const auto& c : checks)
        if (c.satisfied)
            return &c;
    return nullptr;
}

Regime RegimeReport::regime() const
{
    const RegimeCheck* c = primary();
    return c ? c->regime : Regime::transitional;
}

bool RegimeReport::holds(Regime regime) const
{
    for (const auto& c : checks)
        if (c.regime == regime)
            return c.satisfied;
    return regime == Regime::transitional && primary() == nullptr;
}

std::string RegimeReport::label() const
{
    std::string out;
    for (const auto& c : checks) {
        if (!c.satisfied)
            continue;
        if (!out.empty())
            out += '+';
        out += to_string(c.regime);
    }
    return out.empty() ? std::string(to_string(Regime::transitional)) : out;
}

RegimeReport classify(double rate, const SystemParams& params, double threshold)
{
    detail::require_finite(threshold, "threshold");
    if (threshold < 1.0)
        throw InvalidArgument("dominance threshold must be >= 1");
    detail::require_positive(rate, "rate");
    const Theta theta = normalize(params);

    RegimeReport report;
    report.threshold = threshold;

    const double rate_lhs = rate * theta.rho_d + 2.0 * std::sqrt(theta.alpha * theta.rho * rate_excess(rate));
    const RateApproximation small_r = small_r_approx(rate, theta);
    const NormalizedEfficiency relaxed = relaxed_optimum(rate, theta);

    auto& small_rate = report.checks[0];
    small_rate = much_less(Regime::small_rate, rate_lhs, theta.rho, threshold);
    small_rate.approx_efficiency = small_r.zeta;
    small_rate.approx_antennas = small_r.antennas;

    auto& large_rate = report.checks[1];
    large_rate = much_greater(Regime::large_rate, rate_lhs, theta.rho + theta.rho_c, threshold);
    large_rate.approx_efficiency = large_r_approx(rate, theta);
    large_rate.approx_antennas = relaxed.antennas;

    const double gain_lhs = 2.0 * relaxed_pa_power(rate, params);

    auto& large_gain = report.checks[2];
    large_gain = much_less(Regime::large_gain, gain_lhs, params.per_antenna_power_w(), threshold);
    large_gain.approx_efficiency = large_gc_approx(rate, params);
    large_gain.approx_antennas = 1.0;

    const GainApproximation small_g = small_gc_approx(rate, params);
    auto& small_gain = report.checks[3];
    small_gain = much_greater(Regime::small_gain, gain_lhs, rate_independent_power(rate, params), threshold);
    small_gain.approx_efficiency = small_g.eta;
    small_gain.approx_antennas = small_g.antennas;

    return report;
}

RateApproximation small_r_approx(double rate, const Theta& theta)
{
    theta.validate();
    detail::require_positive(rate, "rate");
    return {rate / (theta.rho + theta.rho_c), 1.0};
}

double large_r_approx(double rate, const Theta& theta)
{
    theta.validate();
    detail::require_positive(rate, "rate");
    return 1.0 / (theta.rho_d + 2.0 * std::sqrt(theta.alpha * theta.rho * rate_excess(rate) / (rate * rate)));
}

double large_gc_approx(double rate, const SystemParams& params)
{
    params.validate();
    detail::require_positive(rate, "rate");
    return rate * params.bandwidth_hz / rate_independent_power(rate, params);
}

GainApproximation small_gc_approx(double rate, const SystemParams& params)
{
    params.validate();
    detail::require_positive(rate, "rate");
    const double excess = rate_excess(rate);
    const double p_antenna = params.per_antenna_power_w();
    GainApproximation out;
    out.eta = std::sqrt(params.channel_gain) * rate
            / (2.0 * std::sqrt(params.noise_psd_w_per_hz / params.bandwidth_hz)
               * std::sqrt(params.pa_inefficiency * excess * p_antenna));
    out.antennas = 1.0 + std::sqrt(params.noise_power_w() / params.channel_gain)
                       * std::sqrt(params.pa_inefficiency * excess / p_antenna);
    return out;
}

double relaxed_eta(double rate, const SystemParams& params)
{
    params.validate();
    detail::require_positive(rate, "rate");
    return rate * params.bandwidth_hz / (rate_independent_power(rate, params) + 2.0 * relaxed_pa_power(rate, params));
}

} // namespace mimo_ee
