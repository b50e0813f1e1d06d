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

#include "mimo_ee/gauss_laguerre.hpp"

#include "mimo_ee/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>

#include <cmath>

namespace mimo_ee {

GammaQuadrature::GammaQuadrature(std::size_t nodes, double shape)
    : shape_(shape)
{
    if (nodes < 1)
        throw InvalidArgument("quadrature needs at least one node");
    detail::require_positive(shape, "shape");

    // Golub-Welsch on the Jacobi matrix of the generalized Laguerre weight
    // x^a e^-x, a = shape - 1.
    const auto n = static_cast<Eigen::Index>(nodes);
    const double a = shape - 1.0;
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max<Eigen::Index>(n - 1, 0));
    for (Eigen::Index k = 0; k < n; ++k) {
        const double kk = static_cast<double>(k);
        diag(k) = 2.0 * kk + a + 1.0;
        if (k + 1 < n)
            sub(k) = std::sqrt((kk + 1.0) * (kk + 1.0 + a));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw NumericalError("Jacobi eigenproblem did not converge", {{"nodes", double(nodes)}, {"shape", shape}});

    // Eigenvalues come back ascending; the weight is the squared first
    // component of each unit eigenvector.
    nodes_.resize(nodes);
    weights_.resize(nodes);
    double total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        nodes_[i] = solver.eigenvalues()(i);
        const double v0 = solver.eigenvectors()(0, i);
        weights_[i] = v0 * v0;
        total += weights_[i];
    }
    for (double& w : weights_)
        w /= total;
}

} // namespace mimo_ee
