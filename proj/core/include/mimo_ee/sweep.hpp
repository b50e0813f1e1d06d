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

#include "mimo_ee/config.hpp"
#include "mimo_ee/ee_optimizer.hpp"
#include "mimo_ee/regime_analyzer.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mimo_ee {

struct TradeoffRow {
    double sweep_value = 0.0;
    ObjectiveSpec objective;
    double rate = 0.0;
    double channel_gain = 0.0;  // linear
    std::optional<EEResult> result;  // empty when the point failed
    RegimeReport regime;
    std::string status = "ok";
};

struct TradeoffCurve {
    SweepVariable variable = SweepVariable::channel_gain;
    std::vector<TradeoffRow> rows;  // grid order, objectives in request order
};

struct SweepContext {
    ExactOptimizer optimizer;
    double dominance_threshold = 10.0;
    unsigned threads = 1;
};

EEResult evaluate_objective(const ObjectiveSpec& objective, double rate, const SystemParams& params,
                            const ExactOptimizer& optimizer);

// Evaluates every objective at every grid point. Per-point failures land in
// the row status and do not stop the sweep. Rows come back in grid order
// whatever the thread count.
TradeoffCurve run_sweep(const SweepSpec& spec, const SweepContext& context);

// eta_0* / eta_0(M = fixed_antennas).
double compare_fixed_m(double rate, const SystemParams& params, int fixed_antennas, const ExactOptimizer& optimizer);

inline constexpr const char* kCsvHeader =
    "sweep_var,sweep_value,objective,M,gamma,zeta,eta_bits_per_joule,f_pa,regime,status";

// Nine significant digits, '\n' line endings, fixed column order.
void write_csv(const TradeoffCurve& curve, std::ostream& out);

// Throws InvalidArgument on an empty curve (before touching the file system)
// and IoError if the file cannot be written.
void emit_csv(const TradeoffCurve& curve, const std::filesystem::path& path);

struct CsvRecord {
    std::string sweep_var;
    double sweep_value = 0.0;
    std::string objective;
    double antennas = 0.0;
    double gamma = 0.0;
    double zeta = 0.0;
    double eta = 0.0;
    double f_pa = 0.0;
    std::string regime;
    std::string status;
};

std::vector<CsvRecord> read_csv(std::istream& in);
std::vector<CsvRecord> load_csv(const std::filesystem::path& path);

std::string format_number(double value);

} // namespace mimo_ee
