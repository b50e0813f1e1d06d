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

#include "mimo_ee/power_model.hpp"

#include "mimo_ee/errors.hpp"

#include <cmath>

namespace mimo_ee {

using detail::require_finite;
using detail::require_non_negative;
using detail::require_positive;

void SystemParams::validate() const
{
    require_positive(bandwidth_hz, "bandwidth_hz");
    require_positive(noise_psd_w_per_hz, "noise_psd_w_per_hz");
    require_positive(channel_gain, "channel_gain");
    require_finite(pa_inefficiency, "pa_inefficiency");
    if (pa_inefficiency < 1.0)
        throw InvalidArgument("pa_inefficiency (alpha) must be >= 1");
    require_non_negative(p_bs_w, "p_bs_w");
    require_non_negative(p_ut_w, "p_ut_w");
    require_non_negative(p_osc_w, "p_osc_w");
    require_non_negative(p_fixed_w, "p_fixed_w");
    require_non_negative(p_dec_w_per_bps, "p_dec_w_per_bps");
    require_non_negative(energy_per_op_j, "energy_per_op_j");
}

SystemParams SystemParams::reference(double channel_gain)
{
    SystemParams p;
    p.bandwidth_hz = 1e6;
    p.noise_psd_w_per_hz = std::pow(10.0, -20.4);
    p.channel_gain = channel_gain;
    p.pa_inefficiency = 1.0 / 0.39;
    p.p_bs_w = 0.1;
    p.p_ut_w = 0.1;
    p.p_osc_w = 2.0;
    p.p_fixed_w = 5.0;
    p.p_dec_w_per_bps = 1.15e-9;
    p.energy_per_op_j = 1e-9;
    return p;
}

void Theta::validate() const
{
    require_finite(alpha, "alpha");
    if (alpha < 1.0)
        throw InvalidArgument("alpha must be >= 1");
    require_non_negative(rho, "rho");
    require_non_negative(rho_c, "rho_c");
    require_non_negative(rho_d, "rho_d");
}

Theta normalize(const SystemParams& params)
{
    params.validate();
    const double gain_over_noise = params.channel_gain / params.noise_power_w();
    Theta theta;
    theta.alpha = params.pa_inefficiency;
    theta.rho = gain_over_noise * params.per_antenna_power_w();
    theta.rho_c = gain_over_noise * params.circuit_power_w();
    theta.rho_d = params.channel_gain * params.p_dec_w_per_bps / params.noise_psd_w_per_hz;
    return theta;
}

PowerBreakdown total_power(const SystemParams& params, double antennas, double rate, double tx_power_w)
{
    params.validate();
    require_finite(antennas, "antennas");
    if (antennas < 1.0)
        throw InvalidArgument("antennas must be >= 1");
    require_non_negative(rate, "rate");
    require_non_negative(tx_power_w, "tx_power_w");

    PowerBreakdown b;
    b.p_rf_bs = antennas * params.p_bs_w;
    b.p_rf_fixed = params.p_ut_w + params.p_osc_w;
    b.p_lp = 2.0 * antennas * params.energy_per_op_j * params.bandwidth_hz;
    b.p_fixed = params.p_fixed_w;
    b.p_load = rate * params.bandwidth_hz * params.p_dec_w_per_bps;
    b.p_pa = params.pa_inefficiency * tx_power_w;
    b.total = b.p_rf_bs + b.p_rf_fixed + b.p_lp + b.p_fixed + b.p_load + b.p_pa;
    b.f_pa = b.total > 0.0 ? b.p_pa / b.total : 0.0;
    return b;
}

double tx_power_for_snr(const SystemParams& params, double gamma)
{
    require_non_negative(gamma, "gamma");
    return gamma * params.noise_power_w() / params.channel_gain;
}

double pa_fraction_closed_form(const SystemParams& params, double rate)
{
    params.validate();
    require_positive(rate, "rate");
    const double p_antenna = params.per_antenna_power_w();
    const double p_other = p_antenna + params.circuit_power_w()
                         + rate * params.bandwidth_hz * params.p_dec_w_per_bps;
    // PA draw at the relaxed optimum: sqrt(N0 B / Gc) sqrt(alpha (2^R - 1) (P_BS + 2 C0 B)).
    const double pa_scale = std::sqrt(params.noise_power_w())
                          * std::sqrt(params.pa_inefficiency * std::expm1(rate * std::log(2.0)) * p_antenna);
    if (!(pa_scale > 0.0))
        return 0.0;
    return 1.0 / (2.0 + std::sqrt(params.channel_gain) * p_other / pa_scale);
}

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double linear)
{
    return 10.0 * std::log10(linear);
}

} // namespace mimo_ee
