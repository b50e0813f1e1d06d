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

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mimo_ee {

// Raised for out-of-domain inputs (bad parameters, malformed configs).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a numerical procedure fails (bracket failure, non-convergence,
// overflow). Carries name/value diagnostics that are appended to what().
class NumericalError : public std::runtime_error {
public:
    using Diagnostics = std::vector<std::pair<std::string, double>>;

    NumericalError(std::string_view message, Diagnostics diagnostics = {});

    const Diagnostics& diagnostics() const noexcept { return diagnostics_; }

private:
    Diagnostics diagnostics_;
};

// Raised for file-system failures; the message includes the offending path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

void require_finite(double value, std::string_view name);
void require_positive(double value, std::string_view name);
void require_non_negative(double value, std::string_view name);

} // namespace detail

} // namespace mimo_ee
