// Copyright 2026 The qwqrng Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Library side of the command-line tool. Each command validates its
// configuration, writes its output and returns a process exit code.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qwqrng/protocol.hpp"
#include "qwqrng/rate.hpp"
#include "qwqrng/selftest.hpp"

namespace qwqrng {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidInput = 2,
    kExitIoFailure = 3,
    kExitSelftestFailure = 4,
};

std::string artifact_version();

/// "1e4,1e5,250000" or "log:<start>:<stop>:<points>".
std::vector<std::uint64_t> parse_n_grid(const std::string& text);

/// Comma-separated positive integers.
std::vector<std::size_t> parse_size_list(const std::string& text);

inline constexpr std::size_t kDefaultMaxSteps = 5000;

struct GammaScanConfig {
    std::size_t positions = 5;
    std::size_t max_steps = kDefaultMaxSteps;
    std::string output = "-";
};

struct RateCurveConfig {
    std::vector<std::size_t> positions{5, 11, 51};
    double noise = 0.15;
    double epsilon = 1e-36;
    std::vector<std::uint64_t> grid = log_grid(1e4, 1e12, 33);
    SampleRule rule = SampleRule::square_root();
    bool paper_compat = false;
    std::optional<double> gamma;  // overrides the scan when set
    std::size_t max_steps = kDefaultMaxSteps;
    std::string preset;           // "", "fig1-left" or "fig1-right"
    std::string output = "-";
};

/// Applies fig1-left / fig1-right settings; rejects unknown names.
void apply_preset(RateCurveConfig& config, const std::string& preset);

struct SimulateConfig {
    std::size_t positions = 51;
    std::optional<std::size_t> steps;  // defaults to the gamma-minimizing T
    std::size_t max_steps = kDefaultMaxSteps;
    std::uint64_t total = 1'000'000;
    SampleRule rule = SampleRule::square_root();
    double noise = 0.05;
    double epsilon = 1e-6;
    ProtocolSeeds seeds;
    bool paper_compat = false;
    std::string output = "-";
    std::string key_output;  // defaults to <output>.key when output is a file
};

int cmd_gamma_scan(const GammaScanConfig& config, std::ostream& diag);
int cmd_rate_curve(const RateCurveConfig& config, std::ostream& diag);
int cmd_simulate(const SimulateConfig& config, std::ostream& diag);
int cmd_selftest(std::ostream& out, const SelftestHooks& hooks = {});

}  // namespace qwqrng
