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
#include <span>
#include <vector>

namespace mimo_ee {

// Gauss rule for the Gamma(shape, 1) probability density: the weights sum to
// one, so sum_i w_i f(x_i) approximates E[f(X)] and is exact for polynomials
// of degree <= 2n - 1.
class GammaQuadrature {
public:
    GammaQuadrature(std::size_t nodes, double shape);

    std::span<const double> nodes() const { return nodes_; }
    std::span<const double> weights() const { return weights_; }
    double shape() const { return shape_; }
    std::size_t size() const { return nodes_.size(); }

    template <typename F>
    double expect(F&& f) const
    {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            acc += weights_[i] * f(nodes_[i]);
        return acc;
    }

private:
    double shape_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

} // namespace mimo_ee
