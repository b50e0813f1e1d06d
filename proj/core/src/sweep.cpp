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

#include "mimo_ee/sweep.hpp"

#include "mimo_ee/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

namespace mimo_ee {

namespace {

std::string row_status(const EEResult& result)
{
    if (!result.search)
        return "ok";
    const SearchReport& s = *result.search;
    std::string status = s.converged() ? "ok" : "not-converged";
    if (s.unimodality_violations > 0)
        status += ";non-unimodal=" + std::to_string(s.unimodality_violations);
    return status;
}

std::string sanitize(std::string text)
{
    std::replace(text.begin(), text.end(), ',', ';');
    std::replace(text.begin(), text.end(), '\n', ' ');
    return text;
}

std::vector<TradeoffRow> evaluate_point(const SweepSpec& spec, const SweepContext& context, double value)
{
    SystemParams params = spec.params;
    double rate = spec.fixed_value;
    if (spec.variable == SweepVariable::rate) {
        rate = value;
        params.channel_gain = db_to_linear(spec.fixed_value);
    } else {
        params.channel_gain = db_to_linear(value);
    }

    std::vector<TradeoffRow> rows;
    RegimeReport regime;
    std::string regime_error;
    try {
        regime = classify(rate, params, context.dominance_threshold);
    } catch (const std::exception& e) {
        regime_error = e.what();
    }
    for (const ObjectiveSpec& objective : spec.objectives) {
        TradeoffRow row;
        row.sweep_value = value;
        row.objective = objective;
        row.rate = rate;
        row.channel_gain = params.channel_gain;
        row.regime = regime;
        try {
            if (!regime_error.empty())
                throw NumericalError(regime_error);
            row.result = evaluate_objective(objective, rate, params, context.optimizer);
            row.status = row_status(*row.result);
        } catch (const std::exception& e) {
            row.result.reset();
            row.status = "error: " + sanitize(e.what());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

EEResult evaluate_objective(const ObjectiveSpec& objective, double rate, const SystemParams& params,
                            const ExactOptimizer& optimizer)
{
    const Theta theta = normalize(params);
    NormalizedEfficiency point;
    switch (objective.kind) {
    case Objective::exact:
        point = optimizer.optimize_exact(rate, theta);
        break;
    case Objective::bound:
        point = optimize_bound(rate, theta, optimizer.config().tie_break);
        break;
    case Objective::relaxed:
        point = relaxed_optimum(rate, theta);
        break;
    case Objective::fixed_antennas:
        point = optimizer.zeta_exact(objective.antennas, rate, theta);
        point.objective = Objective::fixed_antennas;
        break;
    }
    return to_physical(point, rate, params);
}

TradeoffCurve run_sweep(const SweepSpec& spec, const SweepContext& context)
{
    spec.validate();
    const std::size_t n = spec.grid.size();
    std::vector<std::vector<TradeoffRow>> per_point(n);

    const unsigned workers = std::max(1u, std::min<unsigned>(context.threads, static_cast<unsigned>(n)));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i)
            per_point[i] = evaluate_point(spec, context, spec.grid[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++)
                    per_point[i] = evaluate_point(spec, context, spec.grid[i]);
            });
    }

    TradeoffCurve curve;
    curve.variable = spec.variable;
    for (auto& rows : per_point)
        for (auto& row : rows)
            curve.rows.push_back(std::move(row));
    return curve;
}

double compare_fixed_m(double rate, const SystemParams& params, int fixed_antennas, const ExactOptimizer& optimizer)
{
    const Theta theta = normalize(params);
    const NormalizedEfficiency best = optimizer.optimize_exact(rate, theta);
    const NormalizedEfficiency fixed = optimizer.zeta_exact(fixed_antennas, rate, theta);
    // eta ratio equals the zeta ratio: both share the factor Gc / N0.
    return best.zeta / fixed.zeta;
}

std::string format_number(double value)
{
    if (std::isnan(value))
        return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

void write_csv(const TradeoffCurve& curve, std::ostream& out)
{
    out << kCsvHeader << '\n';
    const std::string var(to_string(curve.variable));
    for (const TradeoffRow& row : curve.rows) {
        out << var << ',' << format_number(row.sweep_value) << ',' << row.objective.label() << ',';
        if (row.result) {
            const EEResult& r = *row.result;
            out << format_number(r.antennas) << ',' << format_number(r.gamma) << ',' << format_number(r.zeta) << ','
                << format_number(r.eta) << ',' << format_number(r.breakdown.f_pa);
        } else {
            out << "nan,nan,nan,nan,nan";
        }
        out << ',' << row.regime.label() << ',' << row.status << '\n';
    }
}

void emit_csv(const TradeoffCurve& curve, const std::filesystem::path& path)
{
    if (curve.rows.empty())
        throw InvalidArgument("refusing to write an empty trade-off curve");
    std::ostringstream buffer;
    write_csv(curve, buffer);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out << buffer.str();
    out.flush();
    if (!out)
        throw IoError("failed writing '" + path.string() + "'");
}

std::vector<CsvRecord> read_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw InvalidArgument("CSV header does not match the trade-off schema");
    std::vector<CsvRecord> out;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ','))
            fields.push_back(field);
        if (fields.size() != 10)
            throw InvalidArgument("CSV line " + std::to_string(line_no) + ": expected 10 fields");
        auto num = [&](const std::string& s) {
            char* end = nullptr;
            const double v = std::strtod(s.c_str(), &end);
            if (end != s.c_str() + s.size())
                throw InvalidArgument("CSV line " + std::to_string(line_no) + ": bad number '" + s + "'");
            return v;
        };
        CsvRecord r;
        r.sweep_var = fields[0];
        r.sweep_value = num(fields[1]);
        r.objective = fields[2];
        r.antennas = num(fields[3]);
        r.gamma = num(fields[4]);
        r.zeta = num(fields[5]);
        r.eta = num(fields[6]);
        r.f_pa = num(fields[7]);
        r.regime = fields[8];
        r.status = fields[9];
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CsvRecord> load_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path.string() + "'");
    return read_csv(in);
}

} // namespace mimo_ee
