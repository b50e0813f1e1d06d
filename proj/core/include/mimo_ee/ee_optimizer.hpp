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

#include "mimo_ee/capacity_engine.hpp"
#include "mimo_ee/power_model.hpp"

#include <optional>
#include <string_view>

namespace mimo_ee {

// exact:    SNR from the ergodic-capacity inverse gamma_0(M, R)
// bound:    SNR from the achievable-rate lower bound gamma_1(M, R)
// relaxed:  bound objective minimized over real M (closed form)
// fixed_antennas: exact objective at a caller-chosen M
enum class Objective { exact, bound, relaxed, fixed_antennas };

std::string_view to_string(Objective objective);

enum class TieBreak { smaller, larger };

TieBreak parse_tie_break(std::string_view text);

struct SearchReport {
    int start = 0;              // first M evaluated (rounded relaxed optimum)
    int search_cap = 0;
    int evaluations = 0;
    bool reached_cap = false;
    bool still_decreasing = false;  // objective was falling when the cap stopped the scan
    int unimodality_violations = 0; // objective fell again after rising on one side

    bool converged() const { return !(reached_cap && still_decreasing); }
};

// Energy efficiency in normalized form, zeta = eta N0 / Gc.
struct NormalizedEfficiency {
    Objective objective = Objective::exact;
    double antennas = 1.0;  // integral except for the relaxed objective
    double gamma = 0.0;     // transmit SNR Gc P_T / (N0 B)
    double zeta = 0.0;
    std::optional<SearchReport> search;

    double inverse_zeta() const { return 1.0 / zeta; }
};

struct EEResult {
    Objective objective = Objective::exact;
    double antennas = 1.0;
    double gamma = 0.0;
    double zeta = 0.0;
    double eta = 0.0;  // bits/Joule
    PowerBreakdown breakdown;
    std::optional<SearchReport> search;
};

// Attaches bits/Joule and the physical power split to a normalized result.
EEResult to_physical(const NormalizedEfficiency& point, double rate, const SystemParams& params);

// 1/zeta = rho_d + (M rho + rho_c) / R + alpha gamma / R.
double inverse_zeta(double antennas, double rate, double gamma, const Theta& theta);

// Bound objective at integer M >= 2.
NormalizedEfficiency zeta_bound(int antennas, double rate, const Theta& theta);

// M' = 1 + sqrt(alpha (2^R - 1) / rho).
double relaxed_antennas(double rate, const Theta& theta);

// M' together with zeta' = R / (rho + rho_c + R rho_d + 2 sqrt(alpha rho (2^R - 1))).
NormalizedEfficiency relaxed_optimum(double rate, const Theta& theta);

// Integer minimizer of the bound objective over M >= 2. Convexity puts it at
// floor(M') or ceil(M'); a neighbour check falls back to a bounded scan.
NormalizedEfficiency optimize_bound(double rate, const Theta& theta, TieBreak tie = TieBreak::smaller);

struct OptimizerConfig {
    double search_cap_multiplier = 4.0;
    int search_cap_offset = 16;
    int stop_width = 8;
    TieBreak tie_break = TieBreak::smaller;

    void validate() const;
    int default_search_cap(double relaxed_m) const;
};

// Minimizes the exact (capacity-achieving) inverse efficiency over integer M.
// The objective is only empirically unimodal, so the search scans outward
// from round(M') and stops a side after `stop_width` consecutive increases.
class ExactOptimizer {
public:
    ExactOptimizer() = default;
    ExactOptimizer(CapacityEngine capacity, OptimizerConfig config);

    const CapacityEngine& capacity() const { return capacity_; }
    const OptimizerConfig& config() const { return config_; }

    NormalizedEfficiency zeta_exact(int antennas, double rate, const Theta& theta) const;

    NormalizedEfficiency optimize_exact(double rate, const Theta& theta) const;
    NormalizedEfficiency optimize_exact(double rate, const Theta& theta, int search_cap) const;

private:
    CapacityEngine capacity_{};
    OptimizerConfig config_{};
};

} // namespace mimo_ee
