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

#include "mimo_ee/capacity_engine.hpp"

#include "mimo_ee/errors.hpp"
#include "mimo_ee/gauss_laguerre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

namespace mimo_ee {

namespace {

constexpr double kZ99 = 2.5758293035489004;  // two-sided 99% normal quantile
constexpr int kMaxBisection = 400;
constexpr int kMaxBracketSteps = 64;

void require_antennas(int antennas)
{
    if (antennas < 1)
        throw InvalidArgument("antenna count must be >= 1");
}

} // namespace

std::string_view to_string(EstimatorMethod method)
{
    switch (method) {
    case EstimatorMethod::quadrature: return "quadrature";
    case EstimatorMethod::monte_carlo: return "monte-carlo";
    }
    return "unknown";
}

EstimatorMethod parse_estimator_method(std::string_view text)
{
    if (text == "quadrature")
        return EstimatorMethod::quadrature;
    if (text == "monte-carlo" || text == "monte_carlo")
        return EstimatorMethod::monte_carlo;
    throw InvalidArgument("unknown estimator method '" + std::string(text) + "'");
}

void CapacityConfig::validate() const
{
    if (quadrature_nodes < 2)
        throw InvalidArgument("quadrature_nodes must be >= 2");
    if (monte_carlo_samples < 2)
        throw InvalidArgument("monte_carlo_samples must be >= 2");
    detail::require_positive(rate_tolerance, "rate_tolerance");
}

CapacityEngine::CapacityEngine(CapacityConfig config)
    : config_(config)
{
    config_.validate();
}

double rate_excess(double rate)
{
    return std::expm1(rate * std::numbers::ln2);
}

std::shared_ptr<const CapacityEngine::GainLaw> CapacityEngine::make_law(int antennas) const
{
    if (config_.method != EstimatorMethod::quadrature)
        return std::make_shared<const GainLaw>(build_law(antennas));
    {
        const std::lock_guard lock(cache_->mutex);
        if (auto it = cache_->rules.find(antennas); it != cache_->rules.end())
            return it->second;
    }
    auto law = std::make_shared<const GainLaw>(build_law(antennas));
    const std::lock_guard lock(cache_->mutex);
    return cache_->rules.try_emplace(antennas, std::move(law)).first->second;
}

CapacityEngine::GainLaw CapacityEngine::build_law(int antennas) const
{
    GainLaw law;
    const double shape = static_cast<double>(antennas);
    if (config_.method == EstimatorMethod::quadrature) {
        const GammaQuadrature fine(config_.quadrature_nodes, shape);
        const GammaQuadrature coarse(std::max<std::size_t>(config_.quadrature_nodes / 2, 1), shape);
        law.points.assign(fine.nodes().begin(), fine.nodes().end());
        law.weights.assign(fine.weights().begin(), fine.weights().end());
        law.coarse_points.assign(coarse.nodes().begin(), coarse.nodes().end());
        law.coarse_weights.assign(coarse.weights().begin(), coarse.weights().end());
    } else {
        std::seed_seq seq{static_cast<std::uint32_t>(config_.seed),
                          static_cast<std::uint32_t>(config_.seed >> 32),
                          static_cast<std::uint32_t>(antennas)};
        std::mt19937_64 rng(seq);
        std::gamma_distribution<double> gain(shape, 1.0);
        law.points.resize(config_.monte_carlo_samples);
        for (double& x : law.points)
            x = gain(rng);
    }
    law.max_point = *std::max_element(law.points.begin(), law.points.end());
    return law;
}

double CapacityEngine::expected_rate(const std::vector<double>& points, const std::vector<double>& weights,
                                     double gamma)
{
    double acc = 0.0;
    if (weights.empty()) {
        for (double x : points)
            acc += std::log1p(gamma * x);
        acc /= static_cast<double>(points.size());
    } else {
        for (std::size_t i = 0; i < points.size(); ++i)
            acc += weights[i] * std::log1p(gamma * points[i]);
    }
    return acc / std::numbers::ln2;
}

void CapacityEngine::guard_overflow(const GainLaw& law, double gamma) const
{
    if (!std::isfinite(gamma * law.max_point))
        throw NumericalError("SNR times channel gain overflows", {{"gamma", gamma}, {"max_gain", law.max_point}});
}

CapacityEstimate CapacityEngine::ergodic_capacity(int antennas, double gamma) const
{
    require_antennas(antennas);
    detail::require_positive(gamma, "gamma");
    const auto owner = make_law(antennas);
    const GainLaw& law = *owner;
    guard_overflow(law, gamma);

    CapacityEstimate est;
    est.method = config_.method;
    est.value = expected_rate(law.points, law.weights, gamma);
    if (config_.method == EstimatorMethod::quadrature) {
        const double coarse = expected_rate(law.coarse_points, law.coarse_weights, gamma);
        est.abs_error_bound = std::abs(est.value - coarse)
                            + 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, est.value);
    } else {
        const double n = static_cast<double>(law.points.size());
        double sq = 0.0;
        for (double x : law.points) {
            const double d = std::log1p(gamma * x) / std::numbers::ln2 - est.value;
            sq += d * d;
        }
        est.abs_error_bound = kZ99 * std::sqrt(sq / (n - 1.0) / n);
    }
    return est;
}

SnrSolution CapacityEngine::invert_capacity(int antennas, double rate) const
{
    return invert_capacity(antennas, rate, config_.rate_tolerance);
}

SnrSolution CapacityEngine::invert_capacity(int antennas, double rate, double tolerance) const
{
    require_antennas(antennas);
    detail::require_positive(rate, "rate");
    detail::require_positive(tolerance, "tolerance");

    const auto owner = make_law(antennas);
    const GainLaw& law = *owner;
    const double excess = rate_excess(rate);
    const double m = static_cast<double>(antennas);
    double lo = excess / m;
    double hi = excess / std::max(m - 1.0, 0.5);
    auto residual = [&](double gamma) {
        guard_overflow(law, gamma);
        return expected_rate(law.points, law.weights, gamma) - rate;
    };

    int evaluations = 0;
    double f_lo = residual(lo);
    double f_hi = residual(hi);
    evaluations += 2;
    // The bounds bracket the exact inverse for M >= 2; estimator error (or the
    // open upper end at M = 1) can push an end point over, so widen a little.
    for (int step = 0; f_lo > tolerance && step < kMaxBracketSteps; ++step, ++evaluations) {
        lo *= 0.5;
        f_lo = residual(lo);
    }
    for (int step = 0; f_hi < -tolerance && step < kMaxBracketSteps; ++step, ++evaluations) {
        hi *= 2.0;
        f_hi = residual(hi);
    }
    if (f_lo > tolerance || f_hi < -tolerance)
        throw NumericalError("capacity inversion: rate is not bracketed",
                             {{"antennas", m}, {"rate", rate}, {"gamma_lo", lo}, {"gamma_hi", hi},
                              {"residual_lo", f_lo}, {"residual_hi", f_hi}});

    if (std::abs(f_lo) <= tolerance)
        return {lo, f_lo, evaluations};
    if (std::abs(f_hi) <= tolerance)
        return {hi, f_hi, evaluations};

    for (int iter = 0; iter < kMaxBisection; ++iter) {
        const double mid = std::sqrt(lo * hi);
        const double f_mid = residual(mid);
        ++evaluations;
        if (std::abs(f_mid) <= tolerance)
            return {mid, f_mid, evaluations};
        if (f_mid < 0.0)
            lo = mid;
        else
            hi = mid;
        if (!(hi > lo))
            break;
    }
    throw NumericalError("capacity inversion did not converge",
                         {{"antennas", m}, {"rate", rate}, {"gamma_lo", lo}, {"gamma_hi", hi},
                          {"tolerance", tolerance}});
}

CapacityBounds capacity_bounds(int antennas, double gamma)
{
    require_antennas(antennas);
    detail::require_positive(gamma, "gamma");
    const double m = static_cast<double>(antennas);
    return {std::log1p((m - 1.0) * gamma) / std::numbers::ln2, std::log1p(m * gamma) / std::numbers::ln2};
}

double snr_lower_bound_rate(int antennas, double rate)
{
    if (antennas < 2)
        throw InvalidArgument("bound-based SNR needs at least 2 antennas");
    detail::require_non_negative(rate, "rate");
    return rate_excess(rate) / static_cast<double>(antennas - 1);
}

} // namespace mimo_ee
