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

#include <mimo_ee/errors.hpp>
#include <mimo_ee/sweep.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mimo_ee;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

namespace fs = std::filesystem;

fs::path tmp_path(const std::string& name)
{
    return fs::path(MIMO_EE_TEST_TMPDIR) / name;
}

std::string slurp(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

SweepSpec gc_sweep(std::vector<double> grid, const std::string& objectives)
{
    SweepSpec s;
    s.variable = SweepVariable::channel_gain;
    s.grid = std::move(grid);
    s.fixed_value = 5.0;
    s.params = SystemParams::reference(1e-15);
    s.objectives = parse_objectives(objectives);
    return s;
}

SweepContext context(unsigned threads = 1)
{
    SweepContext c;
    c.threads = threads;
    return c;
}

const TradeoffRow& row_for(const TradeoffCurve& curve, double value, const std::string& objective)
{
    for (const auto& r : curve.rows)
        if (r.sweep_value == value && r.objective.label() == objective)
            return r;
    throw std::runtime_error("row not found");
}

} // namespace

TEST_CASE("single-point sweep emits one row per objective", "[sweep]")
{
    const TradeoffCurve c = run_sweep(gc_sweep({-150.0}, "exact,bound,relaxed,fixed-M-1"), context());
    REQUIRE(c.rows.size() == 4);
    CHECK(c.rows[0].objective.label() == "exact");
    CHECK(c.rows[3].objective.label() == "fixed-M-1");
    for (const auto& r : c.rows) {
        REQUIRE(r.result.has_value());
        CHECK(r.status == "ok");
        CHECK(r.rate == 5.0);
        CHECK_THAT(r.channel_gain, WithinRel(1e-15, 1e-14));
    }
    CHECK(c.rows[3].result->antennas == 1.0);
    CHECK(c.rows[3].result->objective == Objective::fixed_antennas);
    // The relaxed objective keeps its real-valued M.
    CHECK(c.rows[2].result->antennas != std::round(c.rows[2].result->antennas));
}

TEST_CASE("rows come out in grid order for any thread count", "[sweep]")
{
    const SweepSpec spec = gc_sweep({-150.0, -140.0, -130.0}, "bound,relaxed");
    const TradeoffCurve serial = run_sweep(spec, context(1));
    const TradeoffCurve parallel = run_sweep(spec, context(3));
    REQUIRE(serial.rows.size() == 6);
    std::ostringstream a, b;
    write_csv(serial, a);
    write_csv(parallel, b);
    CHECK(a.str() == b.str());
    CHECK(serial.rows[0].sweep_value == -150.0);
    CHECK(serial.rows[1].objective.label() == "relaxed");
    CHECK(serial.rows[5].sweep_value == -130.0);

    std::size_t lines = 0;
    for (char ch : a.str())
        lines += ch == '\n';
    CHECK(lines == 7);
}

TEST_CASE("rate sweep uses the fixed channel gain", "[sweep]")
{
    SweepSpec s = gc_sweep({1.0, 2.0, 4.0, 8.0, 12.0, 16.0}, "exact,relaxed");
    s.variable = SweepVariable::rate;
    s.fixed_value = -150.0;
    const TradeoffCurve c = run_sweep(s, context(2));
    REQUIRE(c.rows.size() == 12);
    for (const auto& r : c.rows) {
        CHECK(r.rate == r.sweep_value);
        CHECK_THAT(r.channel_gain, WithinRel(1e-15, 1e-14));
    }
    // Energy efficiency rises with rate, then falls.
    std::vector<double> eta;
    for (const auto& r : c.rows)
        if (r.objective.kind == Objective::exact)
            eta.push_back(r.result->eta);
    const auto peak = std::max_element(eta.begin(), eta.end()) - eta.begin();
    CHECK(peak > 0);
    CHECK(peak < static_cast<long>(eta.size()) - 1);
}

TEST_CASE("channel-gain sweep: exact optimum shrinks to one antenna", "[sweep]")
{
    const TradeoffCurve c = run_sweep(gc_sweep(linear_grid(-160.0, -90.0, 2.0), "exact,fixed-M-1"), context(2));
    REQUIRE(c.rows.size() == 72);
    double prev = 1e9;
    for (const auto& r : c.rows) {
        if (r.objective.kind != Objective::exact)
            continue;
        REQUIRE(r.result.has_value());
        CHECK(r.status == "ok");
        CHECK(r.result->antennas <= prev);
        prev = r.result->antennas;
        if (r.sweep_value >= -114.0)
            CHECK(r.result->antennas == 1.0);
        CHECK(r.result->eta >= row_for(c, r.sweep_value, "fixed-M-1").result->eta);
    }
    CHECK(row_for(c, -160.0, "exact").result->antennas > 100.0);
}

TEST_CASE("row identities", "[sweep][property]")
{
    const TradeoffCurve c = run_sweep(gc_sweep({-160.0, -135.0, -110.0}, "exact,bound,relaxed,fixed-M-3"), context());
    for (const auto& r : c.rows) {
        const EEResult& e = *r.result;
        const SystemParams p = SystemParams::reference(r.channel_gain);
        CHECK_THAT(e.eta, WithinRel(e.zeta * r.channel_gain / p.noise_psd_w_per_hz, 1e-12));
        CHECK_THAT(e.eta, WithinRel(r.rate * p.bandwidth_hz / e.breakdown.total, 1e-12));
        CHECK(e.breakdown.f_pa > 0.0);
        CHECK(e.breakdown.f_pa < 1.0);
        if (r.objective.kind == Objective::bound) {
            const double m_relaxed = relaxed_antennas(r.rate, normalize(p));
            CHECK((e.antennas == std::floor(m_relaxed) || e.antennas == std::ceil(m_relaxed)));
        }
    }
}

TEST_CASE("compare_fixed_m", "[sweep]")
{
    const ExactOptimizer opt;
    const double r140 = compare_fixed_m(5.0, SystemParams::reference(db_to_linear(-140.0)), 1, opt);
    CHECK_THAT(r140, WithinRel(5.65, 0.1));
    CHECK(compare_fixed_m(5.0, SystemParams::reference(db_to_linear(-100.0)), 1, opt) == 1.0);
    CHECK(compare_fixed_m(5.0, SystemParams::reference(db_to_linear(-150.0)), 4, opt) > 1.0);
}

TEST_CASE("failed points become error rows", "[sweep][errors]")
{
    SweepSpec s = gc_sweep({5.0, 1100.0}, "bound,relaxed");
    s.variable = SweepVariable::rate;
    s.fixed_value = -150.0;
    const TradeoffCurve c = run_sweep(s, context());
    REQUIRE(c.rows.size() == 4);
    CHECK(c.rows[0].status == "ok");
    CHECK(c.rows[1].status == "ok");
    for (std::size_t i = 2; i < 4; ++i) {
        CHECK_FALSE(c.rows[i].result.has_value());
        CHECK(c.rows[i].status.rfind("error: ", 0) == 0);
        CHECK(c.rows[i].status.find(',') == std::string::npos);
    }
    std::ostringstream out;
    write_csv(c, out);
    std::istringstream in(out.str());
    const auto records = read_csv(in);
    REQUIRE(records.size() == 4);
    CHECK(std::isnan(records[2].antennas));
    CHECK(records[2].status.rfind("error: ", 0) == 0);
}

TEST_CASE("CSV round-trip", "[sweep][property]")
{
    const TradeoffCurve c = run_sweep(gc_sweep({-150.0, -120.0}, "exact,bound,relaxed,fixed-M-1"), context());
    const fs::path path = tmp_path("roundtrip.csv");
    emit_csv(c, path);
    const auto records = load_csv(path);
    REQUIRE(records.size() == c.rows.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const TradeoffRow& row = c.rows[i];
        const CsvRecord& rec = records[i];
        CHECK(rec.sweep_var == "Gc_dB");
        CHECK(rec.sweep_value == row.sweep_value);
        CHECK(rec.objective == row.objective.label());
        CHECK_THAT(rec.antennas, WithinRel(row.result->antennas, 5e-9));
        CHECK_THAT(rec.gamma, WithinRel(row.result->gamma, 5e-9));
        CHECK_THAT(rec.zeta, WithinRel(row.result->zeta, 5e-9));
        CHECK_THAT(rec.eta, WithinRel(row.result->eta, 5e-9));
        CHECK_THAT(rec.f_pa, WithinRel(row.result->breakdown.f_pa, 5e-9));
        CHECK(rec.regime == row.regime.label());
        CHECK(rec.status == row.status);
    }
}

TEST_CASE("emitting is deterministic", "[sweep]")
{
    const SweepSpec spec = gc_sweep(linear_grid(-160.0, -130.0, 10.0), "exact,relaxed");
    emit_csv(run_sweep(spec, context(1)), tmp_path("det_a.csv"));
    emit_csv(run_sweep(spec, context(4)), tmp_path("det_b.csv"));
    CHECK(slurp(tmp_path("det_a.csv")) == slurp(tmp_path("det_b.csv")));
    CHECK(slurp(tmp_path("det_a.csv")).rfind(kCsvHeader, 0) == 0);
}

TEST_CASE("emit_csv failure modes", "[sweep][errors]")
{
    const fs::path empty_path = tmp_path("empty.csv");
    fs::remove(empty_path);
    CHECK_THROWS_AS(emit_csv(TradeoffCurve{}, empty_path), InvalidArgument);
    CHECK_FALSE(fs::exists(empty_path));

    const TradeoffCurve c = run_sweep(gc_sweep({-150.0}, "relaxed"), context());
    try {
        emit_csv(c, "/nonexistent/dir/out.csv");
        FAIL("expected IoError");
    } catch (const IoError& e) {
        CHECK(std::string(e.what()).find("/nonexistent/dir/out.csv") != std::string::npos);
    }
    std::istringstream bad("not,a,header\n");
    CHECK_THROWS_AS(read_csv(bad), InvalidArgument);
    std::istringstream short_row(std::string(kCsvHeader) + "\nGc_dB,1,exact\n");
    CHECK_THROWS_AS(read_csv(short_row), InvalidArgument);
    CHECK_THROWS_AS(run_sweep(gc_sweep({}, "exact"), context()), InvalidArgument);
}

TEST_CASE("number formatting", "[sweep]")
{
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(0.1234567891234) == "0.123456789");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(2.5e-7) == "2.5e-07");
}
