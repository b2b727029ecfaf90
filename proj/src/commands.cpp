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

#include "qwqrng/commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "qwqrng/errors.hpp"
#include "qwqrng/walk.hpp"

namespace qwqrng {

namespace {

constexpr std::size_t kMaxRecordedEntries = 10'000;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class Output {
public:
    explicit Output(const std::string& path) : path_(path) {
        if (path_ != "-") {
            file_.open(path_, std::ios::out | std::ios::trunc);
            if (!file_) {
                throw IoError("cannot open output file '" + path_ + "'");
            }
        }
    }

    std::ostream& stream() { return path_ == "-" ? std::cout : file_; }

    void finish() {
        stream().flush();
        if (!stream()) {
            throw IoError("failed writing output '" + path_ + "'");
        }
    }

private:
    std::string path_;
    std::ofstream file_;
};

void write_header(std::ostream& os, const std::string& command,
                  const std::vector<std::pair<std::string, std::string>>& fields) {
    os << "# qwqrng " << artifact_version() << '\n';
    os << "# command: " << command << '\n';
    for (const auto& [key, value] : fields) {
        os << "# " << key << ": " << value << '\n';
    }
}

template <typename Fn>
int guarded(std::ostream& diag, Fn&& body) {
    try {
        return body();
    } catch (const InvalidArgument& e) {
        diag << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const IoError& e) {
        diag << "error: " << e.what() << '\n';
        return kExitIoFailure;
    }
}

std::uint64_t parse_count(const std::string& token) {
    require(!token.empty(), "N grid: empty entry");
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &used);
    } catch (const std::exception&) {
        throw InvalidArgument("N grid: cannot parse '" + token + "'");
    }
    require(used == token.size(), "N grid: cannot parse '" + token + "'");
    require(value >= 1.0 && value <= 1e18 && value == std::floor(value),
            "N grid: entries must be positive integers, got '" + token + "'");
    return static_cast<std::uint64_t>(value);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        out.push_back(item);
    }
    return out;
}

template <typename T>
std::string join(const std::vector<T>& values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        os << (i ? "," : "") << values[i];
    }
    return os.str();
}

}  // namespace

std::string artifact_version() { return QWQRNG_VERSION; }

std::vector<std::uint64_t> parse_n_grid(const std::string& text) {
    if (text.rfind("log:", 0) == 0) {
        const auto parts = split(text.substr(4), ':');
        require(parts.size() == 3, "N grid: expected log:<start>:<stop>:<points>");
        const auto points = parse_count(parts[2]);
        return log_grid(static_cast<double>(parse_count(parts[0])),
                        static_cast<double>(parse_count(parts[1])), points);
    }
    std::vector<std::uint64_t> grid;
    for (const auto& token : split(text, ',')) {
        grid.push_back(parse_count(token));
    }
    require(!grid.empty(), "N grid: no entries");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        require(grid[i] > grid[i - 1], "N grid: entries must be strictly increasing");
    }
    return grid;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> out;
    for (const auto& token : split(text, ',')) {
        out.push_back(static_cast<std::size_t>(parse_count(token)));
    }
    require(!out.empty(), "expected a comma-separated list of positive integers");
    return out;
}

void apply_preset(RateCurveConfig& config, const std::string& preset) {
    if (preset == "fig1-left" || preset == "fig1-right") {
        config.positions = {5, 11, 51};
        config.noise = preset == "fig1-left" ? 0.15 : 0.20;
        config.epsilon = 1e-36;
        config.rule = SampleRule::square_root();
        config.paper_compat = true;
        config.max_steps = kDefaultMaxSteps;
        config.preset = preset;
        return;
    }
    throw InvalidArgument("unknown preset '" + preset + "' (expected fig1-left or fig1-right)");
}

int cmd_gamma_scan(const GammaScanConfig& config, std::ostream& diag) {
    return guarded(diag, [&] {
        require(config.positions >= 2, "gamma-scan: P must be at least 2");
        require(config.max_steps >= 1, "gamma-scan: T-max must be at least 1");
        const GammaScan scan = gamma_scan(config.positions, config.max_steps);
        Output out(config.output);
        auto& os = out.stream();
        write_header(os, "gamma-scan",
                     {{"P", std::to_string(config.positions)},
                      {"T-max", std::to_string(config.max_steps)},
                      {"coin", "hadamard"},
                      {"isa", std::string(kernels::isa_name(kernels::best_isa()))}});
        os << "T,gamma\n";
        for (std::size_t t = 1; t <= scan.gammas.size(); ++t) {
            os << t << ',' << fmt_double(scan.gammas[t - 1]) << '\n';
        }
        os << "# argmin: T*=" << scan.best_steps << ",gamma*=" << fmt_double(scan.best_gamma) << '\n';
        out.finish();
        return kExitOk;
    });
}

int cmd_rate_curve(const RateCurveConfig& config, std::ostream& diag) {
    return guarded(diag, [&] {
        require(!config.positions.empty(), "rate-curve: no P values");
        for (std::size_t p : config.positions) {
            require(p >= 2, "rate-curve: P must be at least 2");
        }
        require(config.noise >= 0.0 && config.noise < 1.0, "rate-curve: Q must lie in [0,1)");
        require(config.epsilon > 0.0 && config.epsilon < 1.0, "rate-curve: epsilon must lie in (0,1)");
        require(!config.grid.empty(), "rate-curve: empty N grid");
        require(config.max_steps >= 1, "rate-curve: T-max must be at least 1");

        struct Curve {
            std::size_t positions;
            std::size_t steps;
            double gamma;
            std::vector<RatePoint> points;
        };
        std::vector<Curve> curves;
        for (std::size_t p : config.positions) {
            Curve c{p, 0, 0.0, {}};
            if (config.gamma) {
                c.gamma = *config.gamma;
            } else {
                const GammaScan scan = gamma_scan(p, config.max_steps);
                c.steps = scan.best_steps;
                c.gamma = scan.best_gamma;
            }
            c.points = rate_curve(p, config.noise, config.epsilon, config.grid, config.rule, c.gamma,
                                  config.paper_compat);
            curves.push_back(std::move(c));
        }

        Output out(config.output);
        auto& os = out.stream();
        write_header(os, "rate-curve",
                     {{"preset", config.preset.empty() ? "none" : config.preset},
                      {"P", join(config.positions)},
                      {"Q", fmt_double(config.noise)},
                      {"epsilon", fmt_double(config.epsilon)},
                      {"m-rule", config.rule.to_string()},
                      {"paper-compat", config.paper_compat ? "true" : "false"},
                      {"gamma", config.gamma ? fmt_double(*config.gamma) : "scan"},
                      {"T-max", std::to_string(config.max_steps)},
                      {"N-grid", join(config.grid)}});
        os << "P,T,gamma,N,m,delta,wq,ell,rate\n";
        for (const Curve& c : curves) {
            for (const RatePoint& pt : c.points) {
                os << c.positions << ',' << c.steps << ',' << fmt_double(c.gamma) << ',' << pt.total
                   << ',' << pt.sample << ',' << fmt_double(pt.delta) << ','
                   << fmt_double(pt.test_weight) << ',' << pt.ell << ',' << fmt_double(pt.rate) << '\n';
            }
        }
        out.finish();
        return kExitOk;
    });
}

int cmd_simulate(const SimulateConfig& config, std::ostream& diag) {
    return guarded(diag, [&] {
        require(config.positions >= 2, "simulate: P must be at least 2");
        require(config.noise >= 0.0 && config.noise <= 1.0, "simulate: Q must lie in [0,1]");
        require(config.max_steps >= 1, "simulate: T-max must be at least 1");
        const std::size_t steps =
            config.steps ? *config.steps : gamma_scan(config.positions, config.max_steps).best_steps;
        const WalkContext ctx = WalkContext::make({config.positions, steps});
        const std::uint64_t sample = config.rule(config.total);
        const bool aggregate = config.total > kMaxExplicitSignals;
        const RunOptions options{config.paper_compat};
        const SourceModel model = DepolarizingSource{config.noise};
        const ProtocolRun run =
            aggregate ? run_protocol_aggregate(config.total, sample, model, ctx, config.epsilon,
                                               config.seeds, options)
                      : run_protocol(config.total, sample, model, ctx, config.epsilon, config.seeds,
                                     options);

        std::string key_path = config.key_output;
        if (key_path.empty() && config.output != "-") {
            key_path = config.output + ".key";
        }
        const bool write_key = !run.aborted() && !aggregate && !key_path.empty();

        nlohmann::ordered_json record;
        record["artifact"] = "qwqrng";
        record["version"] = artifact_version();
        record["command"] = "simulate";
        record["config"] = {
            {"P", config.positions},
            {"T", config.steps ? nlohmann::ordered_json(*config.steps) : nlohmann::ordered_json("scan")},
            {"T-max", config.max_steps},
            {"N", config.total},
            {"m-rule", config.rule.to_string()},
            {"Q", config.noise},
            {"epsilon", config.epsilon},
            {"paper-compat", config.paper_compat},
            {"seed-subset", config.seeds.subset},
            {"seed-measure", config.seeds.measure},
            {"seed-hash", config.seeds.hash},
        };
        record["status"] = run.aborted() ? "ABORT" : "OK";
        record["mode"] = aggregate ? "aggregate" : "explicit";
        record["params"] = {{"P", run.params.positions}, {"T", run.params.steps}};
        record["sampling"] = {{"N", run.sampling.total()},
                              {"m", run.sampling.sample()},
                              {"n", run.sampling.remaining()},
                              {"epsilon", run.sampling.epsilon()},
                              {"delta", run.sampling.delta()}};
        record["seeds"] = {{"subset", run.seeds.subset},
                           {"measure", run.seeds.measure},
                           {"hash", run.seeds.hash}};
        record["gamma"] = run.gamma;
        if (run.subset.size() <= kMaxRecordedEntries) {
            record["t"] = run.subset;
        }
        if (!run.test_outcomes.empty() && run.test_outcomes.size() <= kMaxRecordedEntries) {
            std::string q;
            for (auto b : run.test_outcomes) {
                q.push_back(b ? '1' : '0');
            }
            record["q"] = q;
        }
        record["wt_q"] = run.test_ones;
        record["wq"] = run.test_weight;
        if (!run.raw.empty() && run.raw.size() <= kMaxRecordedEntries) {
            record["r"] = run.raw;
        }
        record["r_counts"] = run.raw_counts;
        record["report"] = {{"ell", run.report.ell},
                            {"raw_ell", run.report.raw_ell},
                            {"eta_q", run.report.eta_q},
                            {"min_entropy_term", run.report.min_entropy_term},
                            {"entropy_penalty", run.report.entropy_penalty},
                            {"epsilon_term", run.report.epsilon_term},
                            {"subset_term", run.report.subset_term},
                            {"failure_probability", run.report.failure_probability},
                            {"security_distance", run.report.security_distance}};
        record["key_bits"] = run.key.size();
        record["key_file"] = write_key ? nlohmann::ordered_json(key_path) : nlohmann::ordered_json(nullptr);

        if (write_key) {
            Output key_out(key_path);
            auto& ks = key_out.stream();
            write_header(ks, "simulate-key",
                         {{"P", std::to_string(run.params.positions)},
                          {"T", std::to_string(run.params.steps)},
                          {"N", std::to_string(run.sampling.total())},
                          {"seed-hash", std::to_string(run.seeds.hash)},
                          {"bits", std::to_string(run.key.size())}});
            ks << to_hex(run.key) << '\n';
            key_out.finish();
        }

        Output out(config.output);
        out.stream() << record.dump(2) << '\n';
        out.finish();
        return kExitOk;
    });
}

int cmd_selftest(std::ostream& out, const SelftestHooks& hooks) {
    const auto checks = run_selftest(hooks);
    std::size_t failed = 0;
    for (const auto& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) {
            out << "  (" << c.detail << ')';
        }
        out << '\n';
        failed += c.passed ? 0 : 1;
    }
    out << checks.size() - failed << '/' << checks.size() << " checks passed\n";
    return failed == 0 ? kExitOk : kExitSelftestFailure;
}

}  // namespace qwqrng
