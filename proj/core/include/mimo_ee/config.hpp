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
#include "mimo_ee/ee_optimizer.hpp"
#include "mimo_ee/power_model.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mimo_ee {

// One requested objective. `fixed-M-<k>` is the exact objective pinned to k antennas.
struct ObjectiveSpec {
    Objective kind = Objective::exact;
    int antennas = 0;  // fixed_antennas only

    std::string label() const;
    static ObjectiveSpec parse(std::string_view text);

    friend bool operator==(const ObjectiveSpec&, const ObjectiveSpec&) = default;
};

std::vector<ObjectiveSpec> parse_objectives(std::string_view comma_list);

enum class SweepVariable { rate, channel_gain };

std::string_view to_string(SweepVariable variable);
SweepVariable parse_sweep_variable(std::string_view text);

struct SweepSpec {
    SweepVariable variable = SweepVariable::channel_gain;
    std::vector<double> grid;  // bits/s/Hz for rate, dB for channel gain
    double fixed_value = 0.0;  // the other coordinate: rate, or channel gain in dB
    SystemParams params;       // channel_gain is replaced per point when sweeping Gc
    std::vector<ObjectiveSpec> objectives;
    std::string output_path;

    void validate() const;
};

// Everything a CLI invocation needs, parsed from a flat `key = value` file.
// Lines starting with '#' are comments. Units are SI except where the key
// names another unit (channel_gain_db, p_dec_w_per_gbps, noise_psd_dbw_per_hz).
struct RunConfig {
    SystemParams params = SystemParams::reference(1e-15);
    double rate = 5.0;
    double channel_gain_db = -150.0;
    CapacityConfig capacity;
    OptimizerConfig optimizer;
    double dominance_threshold = 10.0;
    std::vector<ObjectiveSpec> objectives = parse_objectives("exact,bound,relaxed,fixed-M-1");
    std::optional<SweepVariable> sweep_variable;
    std::vector<double> sweep_grid;
    std::string output_path;
    int compare_antennas = 1;
    unsigned threads = 0;  // 0: one per hardware thread

    // Params with the configured channel gain applied.
    SystemParams point_params() const;
    SweepSpec sweep_spec() const;
};

RunConfig parse_config(std::istream& in, std::string_view source = "<config>");
RunConfig load_config(const std::filesystem::path& path);

// start, start + step, ... up to stop (inclusive, with a small slack for rounding).
std::vector<double> linear_grid(double start, double stop, double step);

} // namespace mimo_ee
