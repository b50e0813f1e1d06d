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

#include "mimo_ee/config.hpp"

#include "mimo_ee/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace mimo_ee {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = s.find(sep, pos);
        out.push_back(trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
        if (next == std::string_view::npos)
            break;
        pos = next + 1;
    }
    return out;
}

double to_double(std::string_view text, std::string_view key)
{
    const std::string s(text);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v))
        throw InvalidArgument("key '" + std::string(key) + "': expected a finite number, got '" + s + "'");
    return v;
}

template <typename Int>
Int to_integer(std::string_view text, std::string_view key)
{
    Int v{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw InvalidArgument("key '" + std::string(key) + "': expected an integer, got '" + std::string(text) + "'");
    return v;
}

} // namespace

std::string ObjectiveSpec::label() const
{
    if (kind == Objective::fixed_antennas)
        return "fixed-M-" + std::to_string(antennas);
    return std::string(to_string(kind));
}

ObjectiveSpec ObjectiveSpec::parse(std::string_view text)
{
    text = trim(text);
    if (text == "exact")
        return {Objective::exact, 0};
    if (text == "bound")
        return {Objective::bound, 0};
    if (text == "relaxed")
        return {Objective::relaxed, 0};
    constexpr std::string_view fixed_prefix = "fixed-M-";
    if (text.starts_with(fixed_prefix)) {
        const int m = to_integer<int>(text.substr(fixed_prefix.size()), "objective");
        if (m < 1)
            throw InvalidArgument("fixed antenna count must be >= 1");
        return {Objective::fixed_antennas, m};
    }
    throw InvalidArgument("unknown objective '" + std::string(text)
                          + "' (expected exact, bound, relaxed or fixed-M-<k>)");
}

std::vector<ObjectiveSpec> parse_objectives(std::string_view comma_list)
{
    std::vector<ObjectiveSpec> out;
    for (auto item : split(comma_list, ',')) {
        const ObjectiveSpec spec = ObjectiveSpec::parse(item);
        for (const auto& existing : out)
            if (existing == spec)
                throw InvalidArgument("objective '" + spec.label() + "' listed twice");
        out.push_back(spec);
    }
    if (out.empty())
        throw InvalidArgument("objective list is empty");
    return out;
}

std::string_view to_string(SweepVariable variable)
{
    return variable == SweepVariable::rate ? "R" : "Gc_dB";
}

SweepVariable parse_sweep_variable(std::string_view text)
{
    if (text == "R" || text == "rate")
        return SweepVariable::rate;
    if (text == "Gc" || text == "gc" || text == "Gc_dB" || text == "channel_gain")
        return SweepVariable::channel_gain;
    throw InvalidArgument("sweep.variable must be 'rate' or 'gc', got '" + std::string(text) + "'");
}

void SweepSpec::validate() const
{
    if (grid.empty())
        throw InvalidArgument("sweep grid is empty");
    for (double v : grid)
        detail::require_finite(v, "sweep grid value");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw InvalidArgument("sweep grid must be strictly increasing");
    if (variable == SweepVariable::rate) {
        if (!(grid.front() > 0.0))
            throw InvalidArgument("rate grid values must be > 0");
        detail::require_finite(fixed_value, "channel_gain_db");
    } else {
        detail::require_positive(fixed_value, "rate");
    }
    if (objectives.empty())
        throw InvalidArgument("no objectives requested");
}

SystemParams RunConfig::point_params() const
{
    SystemParams p = params;
    p.channel_gain = db_to_linear(channel_gain_db);
    return p;
}

SweepSpec RunConfig::sweep_spec() const
{
    if (!sweep_variable)
        throw InvalidArgument("config has no sweep.variable");
    SweepSpec spec;
    spec.variable = *sweep_variable;
    spec.grid = sweep_grid;
    spec.fixed_value = spec.variable == SweepVariable::rate ? channel_gain_db : rate;
    spec.params = point_params();
    spec.objectives = objectives;
    spec.output_path = output_path;
    spec.validate();
    return spec;
}

std::vector<double> linear_grid(double start, double stop, double step)
{
    detail::require_finite(start, "sweep.start");
    detail::require_finite(stop, "sweep.stop");
    detail::require_positive(step, "sweep.step");
    if (stop < start)
        throw InvalidArgument("sweep.stop must be >= sweep.start");
    const double count = std::floor((stop - start) / step + 1e-9);
    if (count > 1e6)
        throw InvalidArgument("sweep grid has more than a million points");
    std::vector<double> out;
    for (long i = 0; i <= static_cast<long>(count); ++i)
        out.push_back(start + static_cast<double>(i) * step);
    return out;
}

RunConfig parse_config(std::istream& in, std::string_view source)
{
    std::map<std::string, std::string, std::less<>> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim(std::string_view(line).substr(0, line.find('#')));
        if (body.empty())
            continue;
        const auto eq = body.find('=');
        const std::string where = std::string(source) + ":" + std::to_string(line_no);
        if (eq == std::string_view::npos)
            throw InvalidArgument(where + ": expected 'key = value'");
        const std::string key(trim(body.substr(0, eq)));
        const std::string value(trim(body.substr(eq + 1)));
        if (key.empty())
            throw InvalidArgument(where + ": empty key");
        if (!entries.emplace(key, value).second)
            throw InvalidArgument(where + ": duplicate key '" + key + "'");
    }

    RunConfig cfg;
    std::set<std::string, std::less<>> used;
    auto take = [&](std::string_view key) -> const std::string* {
        const auto it = entries.find(key);
        if (it == entries.end())
            return nullptr;
        used.emplace(key);
        return &it->second;
    };
    auto number = [&](std::string_view key, double& target) {
        if (const auto* v = take(key))
            target = to_double(*v, key);
    };
    auto exclusive = [&](std::string_view a, std::string_view b) {
        if (entries.contains(a) && entries.contains(b))
            throw InvalidArgument("keys '" + std::string(a) + "' and '" + std::string(b) + "' are mutually exclusive");
    };

    SystemParams& p = cfg.params;
    number("bandwidth_hz", p.bandwidth_hz);
    number("noise_psd_w_per_hz", p.noise_psd_w_per_hz);
    exclusive("pa_efficiency", "pa_inefficiency");
    if (const auto* v = take("pa_efficiency")) {
        const double eff = to_double(*v, "pa_efficiency");
        if (!(eff > 0.0 && eff <= 1.0))
            throw InvalidArgument("pa_efficiency must be in (0, 1]");
        p.pa_inefficiency = 1.0 / eff;
    }
    number("pa_inefficiency", p.pa_inefficiency);
    number("p_bs_w", p.p_bs_w);
    number("p_ut_w", p.p_ut_w);
    number("p_osc_w", p.p_osc_w);
    number("p_fixed_w", p.p_fixed_w);
    number("p_dec_w_per_bps", p.p_dec_w_per_bps);
    number("energy_per_op_j", p.energy_per_op_j);

    exclusive("channel_gain_db", "channel_gain");
    number("channel_gain_db", cfg.channel_gain_db);
    if (const auto* v = take("channel_gain")) {
        const double g = to_double(*v, "channel_gain");
        detail::require_positive(g, "channel_gain");
        cfg.channel_gain_db = linear_to_db(g);
    }
    number("rate", cfg.rate);

    if (const auto* v = take("objectives"))
        cfg.objectives = parse_objectives(*v);
    if (const auto* v = take("output"))
        cfg.output_path = *v;

    if (const auto* v = take("capacity.method"))
        cfg.capacity.method = parse_estimator_method(*v);
    if (const auto* v = take("capacity.quadrature_nodes"))
        cfg.capacity.quadrature_nodes = to_integer<std::size_t>(*v, "capacity.quadrature_nodes");
    if (const auto* v = take("capacity.mc_samples"))
        cfg.capacity.monte_carlo_samples = to_integer<std::size_t>(*v, "capacity.mc_samples");
    if (const auto* v = take("capacity.seed"))
        cfg.capacity.seed = to_integer<std::uint64_t>(*v, "capacity.seed");
    number("capacity.rate_tolerance", cfg.capacity.rate_tolerance);

    number("optimizer.search_cap_multiplier", cfg.optimizer.search_cap_multiplier);
    if (const auto* v = take("optimizer.search_cap_offset"))
        cfg.optimizer.search_cap_offset = to_integer<int>(*v, "optimizer.search_cap_offset");
    if (const auto* v = take("optimizer.stop_width"))
        cfg.optimizer.stop_width = to_integer<int>(*v, "optimizer.stop_width");
    if (const auto* v = take("optimizer.tie_break"))
        cfg.optimizer.tie_break = parse_tie_break(*v);

    number("regime.dominance_threshold", cfg.dominance_threshold);
    if (const auto* v = take("compare.antennas"))
        cfg.compare_antennas = to_integer<int>(*v, "compare.antennas");
    if (const auto* v = take("threads"))
        cfg.threads = to_integer<unsigned>(*v, "threads");

    if (const auto* v = take("sweep.variable"))
        cfg.sweep_variable = parse_sweep_variable(*v);
    const bool has_values = entries.contains("sweep.values");
    const bool has_range = entries.contains("sweep.start") || entries.contains("sweep.stop")
                        || entries.contains("sweep.step");
    if (has_values && has_range)
        throw InvalidArgument("use either sweep.values or sweep.start/stop/step, not both");
    if (const auto* v = take("sweep.values")) {
        for (auto item : split(*v, ','))
            cfg.sweep_grid.push_back(to_double(item, "sweep.values"));
    } else if (has_range) {
        const auto* start = take("sweep.start");
        const auto* stop = take("sweep.stop");
        const auto* step = take("sweep.step");
        if (!start || !stop || !step)
            throw InvalidArgument("sweep.start, sweep.stop and sweep.step must be given together");
        cfg.sweep_grid = linear_grid(to_double(*start, "sweep.start"), to_double(*stop, "sweep.stop"),
                                     to_double(*step, "sweep.step"));
    }
    if (!cfg.sweep_grid.empty() && !cfg.sweep_variable)
        throw InvalidArgument("sweep grid given without sweep.variable");

    for (const auto& [key, value] : entries)
        if (!used.contains(key))
            throw InvalidArgument(std::string(source) + ": unknown key '" + key + "'");

    p.channel_gain = db_to_linear(cfg.channel_gain_db);
    p.validate();
    detail::require_positive(cfg.rate, "rate");
    cfg.capacity.validate();
    cfg.optimizer.validate();
    if (cfg.dominance_threshold < 1.0)
        throw InvalidArgument("regime.dominance_threshold must be >= 1");
    if (cfg.compare_antennas < 1)
        throw InvalidArgument("compare.antennas must be >= 1");
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config file '" + path.string() + "'");
    return parse_config(in, path.string());
}

} // namespace mimo_ee
