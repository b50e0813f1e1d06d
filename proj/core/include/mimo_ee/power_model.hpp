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

#pragma once

namespace mimo_ee {

// Physical link and hardware parameters, all in SI units. The channel gain is
// linear; dB values are converted at the configuration boundary.
struct SystemParams {
    double bandwidth_hz = 1e6;              // B
    double noise_psd_w_per_hz = 0.0;        // N0
    double channel_gain = 0.0;              // Gc
    double pa_inefficiency = 1.0;           // alpha, consumed/radiated power of the PA
    double p_bs_w = 0.0;                    // per-antenna BS RF chain
    double p_ut_w = 0.0;                    // UT RF chain
    double p_osc_w = 0.0;                   // local oscillators
    double p_fixed_w = 0.0;                 // baseband processing, load independent
    double p_dec_w_per_bps = 0.0;           // coding/decoding/backhaul, per bit/s
    double energy_per_op_j = 0.0;           // C0, per beamforming operation

    // P_C = P_UT + P_OSC + P_s.
    double circuit_power_w() const { return p_ut_w + p_osc_w + p_fixed_w; }

    // Cost of one extra antenna: its RF chain plus 2 beamforming ops per channel use.
    double per_antenna_power_w() const { return p_bs_w + 2.0 * energy_per_op_j * bandwidth_hz; }

    double noise_power_w() const { return noise_psd_w_per_hz * bandwidth_hz; }

    // Throws InvalidArgument unless every field is finite, B, N0 and Gc are
    // strictly positive, alpha >= 1 and the power draws are non-negative.
    void validate() const;

    // Realistic hardware values used throughout the reference experiments:
    // N0 = 10^-20.4 W/Hz, B = 1 MHz, P_s = 5 W, P_dec = 1.15 W per Gbit/s,
    // P_BS = P_UT = 0.1 W, P_OSC = 2 W, PA efficiency 0.39, C0 = 1 nJ.
    static SystemParams reference(double channel_gain);
};

// Normalized parameter vector: the per-antenna, fixed and per-rate power draws
// expressed relative to the received noise power.
struct Theta {
    double alpha = 1.0;
    double rho = 0.0;      // Gc (P_BS + 2 C0 B) / (N0 B)
    double rho_c = 0.0;    // Gc P_C / (N0 B)
    double rho_d = 0.0;    // Gc P_dec / N0

    void validate() const;
};

Theta normalize(const SystemParams& params);

struct PowerBreakdown {
    double p_rf_bs = 0.0;     // M P_BS
    double p_rf_fixed = 0.0;  // P_UT + P_OSC
    double p_lp = 0.0;        // 2 M C0 B
    double p_fixed = 0.0;     // P_s
    double p_load = 0.0;      // R B P_dec
    double p_pa = 0.0;        // alpha P_T
    double total = 0.0;
    double f_pa = 0.0;        // p_pa / total
};

// Total consumed power for M antennas (real-valued so that relaxed solutions
// can be costed too), spectral efficiency R and radiated power P_T.
PowerBreakdown total_power(const SystemParams& params, double antennas, double rate,
                           double tx_power_w);

// Radiated power required for transmit SNR gamma: P_T = gamma N0 B / Gc.
double tx_power_for_snr(const SystemParams& params, double gamma);

// Fraction of the total power drawn by the PAs when the array is sized at the
// relaxed optimum and powered for the achievable-rate lower bound.
double pa_fraction_closed_form(const SystemParams& params, double rate);

double db_to_linear(double db);
double linear_to_db(double linear);

} // namespace mimo_ee
