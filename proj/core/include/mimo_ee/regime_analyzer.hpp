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

#include "mimo_ee/power_model.hpp"

#include <array>
#include <string>
#include <string_view>

namespace mimo_ee {

enum class Regime { small_rate, large_rate, large_gain, small_gain, transitional };

std::string_view to_string(Regime regime);

// One dominance test "lhs << rhs" or "lhs >> rhs". With threshold t, "<<" holds
// when lhs * t < rhs and ">>" when lhs > t * rhs (strict, so equality at t = 1
// is never a regime).
struct RegimeCheck {
    Regime regime = Regime::transitional;
    double lhs = 0.0;
    double rhs = 0.0;
    double dominance_ratio = 0.0;  // lhs / rhs
    bool satisfied = false;
    double approx_efficiency = 0.0;  // zeta for the rate regimes, eta (bits/J) for the gain regimes
    double approx_antennas = 0.0;
};

struct RegimeReport {
    // small-R, large-R, large-Gc, small-Gc, in that order.
    std::array<RegimeCheck, 4> checks{};
    double threshold = 10.0;

    // First satisfied regime in the order above, or transitional.
    Regime regime() const;
    const RegimeCheck* primary() const;
    bool holds(Regime regime) const;
    // Satisfied regimes joined with '+', or "transitional".
    std::string label() const;
};

RegimeReport classify(double rate, const SystemParams& params, double threshold = 10.0);

struct RateApproximation {
    double zeta = 0.0;
    double antennas = 0.0;
};

struct GainApproximation {
    double eta = 0.0;  // bits/Joule
    double antennas = 0.0;
};

// zeta' ~ R / (rho + rho_c), M' ~ 1.
RateApproximation small_r_approx(double rate, const Theta& theta);

// zeta' ~ 1 / (rho_d + 2 sqrt(alpha rho (2^R - 1) / R^2)).
double large_r_approx(double rate, const Theta& theta);

// eta' ~ R B / (P_BS + 2 C0 B + P_C + R B P_dec), independent of Gc.
double large_gc_approx(double rate, const SystemParams& params);

// eta' ~ sqrt(Gc) R / (2 sqrt(N0 / B) sqrt(alpha (2^R - 1) (P_BS + 2 C0 B))) and
// M' = 1 + sqrt(N0 B / Gc) sqrt(alpha (2^R - 1) / (P_BS + 2 C0 B)).
GainApproximation small_gc_approx(double rate, const SystemParams& params);

// Unnormalized relaxed optimum eta' = zeta' Gc / N0, written in physical units.
double relaxed_eta(double rate, const SystemParams& params);

} // namespace mimo_ee
