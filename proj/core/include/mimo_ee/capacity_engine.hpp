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

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string_view>
#include <utility>
#include <vector>

namespace mimo_ee {

enum class EstimatorMethod { quadrature, monte_carlo };

std::string_view to_string(EstimatorMethod method);
EstimatorMethod parse_estimator_method(std::string_view text);

struct CapacityConfig {
    EstimatorMethod method = EstimatorMethod::quadrature;
    std::size_t quadrature_nodes = 128;
    std::size_t monte_carlo_samples = 1'000'000;
    std::uint64_t seed = 1;
    double rate_tolerance = 1e-6;  // bits/s/Hz

    void validate() const;
};

// Ergodic capacity of the maximum-ratio beamformed Rayleigh link, in bits/s/Hz.
struct CapacityEstimate {
    double value = 0.0;
    EstimatorMethod method = EstimatorMethod::quadrature;
    // Quadrature: |Q_n - Q_{n/2}| plus a rounding allowance.
    // Monte Carlo: 99% confidence half-width.
    double abs_error_bound = 0.0;
};

struct SnrSolution {
    double gamma = 0.0;
    double residual = 0.0;  // C(M, gamma) - R
    int iterations = 0;
};

struct CapacityBounds {
    double lower = 0.0;  // log2(1 + (M - 1) gamma)
    double upper = 0.0;  // log2(1 + M gamma)
};

// Evaluates E[log2(1 + gamma X)] for X ~ Gamma(M, 1), the squared norm of an
// M-antenna i.i.d. CN(0, 1) channel, and inverts it in gamma.
//
// Quadrature rules are built once per M and kept in a mutex-guarded cache that
// copies of the engine share, so an engine can be used freely from several
// threads. Monte Carlo sample sets are rebuilt per call and depend only on
// (seed, M); the inversion reuses one set across all trial SNRs, which keeps
// the bracketed function monotone along the sample path.
class CapacityEngine {
public:
    CapacityEngine() = default;
    explicit CapacityEngine(CapacityConfig config);

    const CapacityConfig& config() const { return config_; }

    CapacityEstimate ergodic_capacity(int antennas, double gamma) const;

    SnrSolution invert_capacity(int antennas, double rate) const;
    SnrSolution invert_capacity(int antennas, double rate, double tolerance) const;

private:
    // Discrete stand-in for the Gamma(M, 1) law: quadrature nodes or samples.
    struct GainLaw {
        std::vector<double> points;
        std::vector<double> weights;  // empty means equal weights
        std::vector<double> coarse_points;
        std::vector<double> coarse_weights;
        double max_point = 0.0;
    };

    struct RuleCache {
        std::mutex mutex;
        std::map<int, std::shared_ptr<const GainLaw>> rules;
    };

    std::shared_ptr<const GainLaw> make_law(int antennas) const;
    GainLaw build_law(int antennas) const;
    static double expected_rate(const std::vector<double>& points, const std::vector<double>& weights,
                                double gamma);
    void guard_overflow(const GainLaw& law, double gamma) const;

    CapacityConfig config_{};
    std::shared_ptr<RuleCache> cache_ = std::make_shared<RuleCache>();
};

CapacityBounds capacity_bounds(int antennas, double gamma);

// gamma_1(M, R) = (2^R - 1) / (M - 1); the SNR at which the lower bound meets R.
double snr_lower_bound_rate(int antennas, double rate);

// 2^R - 1 without cancellation for small R.
double rate_excess(double rate);

} // namespace mimo_ee
