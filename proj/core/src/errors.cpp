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

#include "mimo_ee/errors.hpp"

#include <cmath>
#include <cstdio>

namespace mimo_ee {

namespace {

std::string with_diagnostics(std::string_view message, const NumericalError::Diagnostics& diagnostics)
{
    std::string out(message);
    for (const auto& [name, value] : diagnostics) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", value);
        out += "; ";
        out += name;
        out += '=';
        out += buf;
    }
    return out;
}

} // namespace

NumericalError::NumericalError(std::string_view message, Diagnostics diagnostics)
    : std::runtime_error(with_diagnostics(message, diagnostics)), diagnostics_(std::move(diagnostics))
{
}

namespace detail {

void require_finite(double value, std::string_view name)
{
    if (!std::isfinite(value))
        throw InvalidArgument(std::string(name) + " must be finite");
}

void require_positive(double value, std::string_view name)
{
    require_finite(value, name);
    if (!(value > 0.0))
        throw InvalidArgument(std::string(name) + " must be > 0");
}

void require_non_negative(double value, std::string_view name)
{
    require_finite(value, name);
    if (value < 0.0)
        throw InvalidArgument(std::string(name) + " must be >= 0");
}

} // namespace detail

} // namespace mimo_ee
