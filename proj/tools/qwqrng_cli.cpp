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

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "qwqrng/commands.hpp"
#include "qwqrng/errors.hpp"

namespace {

using namespace qwqrng;

int parse_then(const std::function<int()>& run) {
    try {
        return run();
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum-walk QRNG laboratory: walk scans, finite-key rates, protocol simulation"};
    app.set_version_flag("--version", artifact_version());
    app.require_subcommand(1);

    // gamma-scan
    GammaScanConfig scan;
    auto* scan_cmd = app.add_subcommand("gamma-scan", "Tabulate gamma(T) for T = 1..T-max");
    scan_cmd->add_option("--P", scan.positions, "Position dimension (>= 2)")->required();
    scan_cmd->add_option("--T-max", scan.max_steps, "Largest step count")->capture_default_str();
    scan_cmd->add_option("--output", scan.output, "CSV path, '-' for stdout")->capture_default_str();

    // rate-curve
    RateCurveConfig curve;
    std::string curve_p = "5,11,51";
    std::string curve_grid;
    std::string curve_rule = "sqrt";
    std::string curve_preset;
    std::optional<double> curve_gamma;
    auto* curve_cmd = app.add_subcommand("rate-curve", "Key rate ell/N over a grid of N");
    curve_cmd->add_option("--P", curve_p, "Comma-separated position dimensions")->capture_default_str();
    curve_cmd->add_option("--Q", curve.noise, "Depolarizing noise in [0,1)")->capture_default_str();
    curve_cmd->add_option("--epsilon", curve.epsilon, "Security parameter")->capture_default_str();
    curve_cmd->add_option("--N-grid", curve_grid, "N values: a,b,c or log:<start>:<stop>:<points>");
    curve_cmd->add_option("--m-rule", curve_rule, "sqrt or fixed:<k>")->capture_default_str();
    curve_cmd->add_option("--gamma", curve_gamma, "Use this gamma instead of scanning T");
    curve_cmd->add_option("--T-max", curve.max_steps, "Scan range for gamma")->capture_default_str();
    curve_cmd->add_flag("--paper-compat", curve.paper_compat, "Take w(q) = Q");
    curve_cmd->add_option("--preset", curve_preset, "fig1-left or fig1-right");
    curve_cmd->add_option("--output", curve.output, "CSV path, '-' for stdout")->capture_default_str();

    // simulate
    SimulateConfig sim;
    std::string sim_rule = "sqrt";
    std::optional<std::size_t> sim_steps;
    auto* sim_cmd = app.add_subcommand("simulate", "Run the protocol against a depolarizing source");
    sim_cmd->add_option("--P", sim.positions, "Position dimension (>= 2)")->capture_default_str();
    sim_cmd->add_option("--T", sim_steps, "Walk steps (default: gamma-minimizing T)");
    sim_cmd->add_option("--T-max", sim.max_steps, "Scan range when --T is absent")->capture_default_str();
    sim_cmd->add_option("--N", sim.total, "Number of signals")->capture_default_str();
    sim_cmd->add_option("--m-rule", sim_rule, "sqrt or fixed:<k>")->capture_default_str();
    sim_cmd->add_option("--Q", sim.noise, "Depolarizing noise in [0,1]")->capture_default_str();
    sim_cmd->add_option("--epsilon", sim.epsilon, "Security parameter")->capture_default_str();
    sim_cmd->add_option("--seed-subset", sim.seeds.subset, "Seed for the test subset")->capture_default_str();
    sim_cmd->add_option("--seed-measure", sim.seeds.measure, "Seed for measurement outcomes")->capture_default_str();
    sim_cmd->add_option("--seed-hash", sim.seeds.hash, "Seed for the Toeplitz matrix")->capture_default_str();
    sim_cmd->add_flag("--paper-compat", sim.paper_compat, "Test failure probability Q instead of Q(1-1/2P)");
    sim_cmd->add_option("--output", sim.output, "Run record path, '-' for stdout")->capture_default_str();
    sim_cmd->add_option("--key-output", sim.key_output, "Hex key path (default <output>.key)");

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the fast invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    if (*scan_cmd) {
        return cmd_gamma_scan(scan, std::cerr);
    }
    if (*curve_cmd) {
        return parse_then([&] {
            if (!curve_preset.empty()) {
                apply_preset(curve, curve_preset);
            } else {
                curve.positions = parse_size_list(curve_p);
                curve.rule = SampleRule::parse(curve_rule);
            }
            if (!curve_grid.empty()) {
                curve.grid = parse_n_grid(curve_grid);
            }
            curve.gamma = curve_gamma;
            return cmd_rate_curve(curve, std::cerr);
        });
    }
    if (*sim_cmd) {
        return parse_then([&] {
            sim.rule = SampleRule::parse(sim_rule);
            sim.steps = sim_steps;
            return cmd_simulate(sim, std::cerr);
        });
    }
    if (*selftest_cmd) {
        return cmd_selftest(std::cout);
    }
    return kExitInvalidInput;
}
