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

#include "mimo_ee/capacity_engine.hpp"
#include "mimo_ee/config.hpp"
#include "mimo_ee/ee_optimizer.hpp"
#include "mimo_ee/errors.hpp"
#include "mimo_ee/gauss_laguerre.hpp"
#include "mimo_ee/power_model.hpp"
#include "mimo_ee/regime_analyzer.hpp"
#include "mimo_ee/sweep.hpp"
