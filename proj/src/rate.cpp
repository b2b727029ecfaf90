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

#include "qwqrng/rate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qwqrng/errors.hpp"

namespace qwqrng {

void RateInputs::validate() const {
    require(positions >= 2, "rate: P must be at least 2");
    require(gamma > 0.0 && gamma <= 1.0, "rate: gamma must lie in (0,1]");
    require(test_weight >= 0.0 && test_weight <= 1.0, "rate: test weight must lie in [0,1]");
}

RateReport key_length(const RateInputs& in) {
    in.validate();
    const SamplingParams& s = in.sampling;
    const double n = static_cast<double>(s.remaining());
    const double delta = s.delta();
    const double eps = s.epsilon();

    RateReport r;
    r.eta_q = std::max(0.0, n * (1.0 - in.test_weight - delta));
    // -eta log2(gamma); written as eta * (-log2 gamma) so gamma = 1 gives +0.
    r.min_entropy_term = r.eta_q * -std::log2(in.gamma);
    const auto alphabet = static_cast<unsigned>(2 * in.positions);
    // Hbar / log_{2P}(2) == Hbar * log2(2P)
    r.entropy_penalty = n * extended_entropy_d(alphabet, in.test_weight + delta) *
                        std::log2(static_cast<double>(alphabet));
    r.epsilon_term = -2.0 * std::log2(eps);
    r.subset_term = log2_binomial(s.total(), s.sample());
    r.raw_ell = r.min_entropy_term - r.entropy_penalty - r.epsilon_term - r.subset_term;
    r.ell = r.raw_ell > 0.0 ? static_cast<std::uint64_t>(std::floor(r.raw_ell)) : 0;
    r.failure_probability = std::cbrt(eps);
    r.security_distance = 5.0 * eps + 4.0 * std::cbrt(eps);
    return r;
}

std::uint64_t isqrt(std::uint64_t v) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) {
        --r;
    }
    while ((r + 1) * (r + 1) <= v) {
        ++r;
    }
    return r;
}

SampleRule SampleRule::parse(const std::string& text) {
    if (text == "sqrt") {
        return square_root();
    }
    const std::string prefix = "fixed:";
    if (text.rfind(prefix, 0) == 0) {
        const std::string digits = text.substr(prefix.size());
        require(!digits.empty() && std::all_of(digits.begin(), digits.end(),
                                               [](char c) { return c >= '0' && c <= '9'; }),
                "m-rule: fixed size must be a positive integer");
        const std::uint64_t m = std::stoull(digits);
        require(m >= 1, "m-rule: fixed size must be a positive integer");
        return fixed(m);
    }
    throw InvalidArgument("m-rule: expected 'sqrt' or 'fixed:<k>', got '" + text + "'");
}

std::uint64_t SampleRule::operator()(std::uint64_t total) const {
    return fixed_ == 0 ? isqrt(total) : fixed_;
}

std::string SampleRule::to_string() const {
    return fixed_ == 0 ? std::string("sqrt") : "fixed:" + std::to_string(fixed_);
}

double expected_test_weight(double noise, std::size_t positions, bool paper_compat) {
    require(noise >= 0.0 && noise <= 1.0, "noise Q must lie in [0,1]");
    if (paper_compat) {
        return noise;
    }
    return noise * (1.0 - 1.0 / (2.0 * static_cast<double>(positions)));
}

std::vector<RatePoint> rate_curve(std::size_t positions, double noise, double epsilon,
                                  std::span<const std::uint64_t> grid, const SampleRule& rule,
                                  double gamma, bool paper_compat) {
    require(noise >= 0.0 && noise < 1.0, "rate_curve: Q must lie in [0,1)");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        require(grid[i] > grid[i - 1], "rate_curve: N grid must be strictly increasing");
    }
    const double wq = expected_test_weight(noise, positions, paper_compat);
    std::vector<RatePoint> out;
    out.reserve(grid.size());
    for (std::uint64_t total : grid) {
        const std::uint64_t m = rule(total);
        const RateInputs in{SamplingParams::make(total, m, epsilon), positions, gamma, wq};
        const RateReport report = key_length(in);
        out.push_back({total, m, in.sampling.delta(), wq, report.ell,
                       static_cast<double>(report.ell) / static_cast<double>(total)});
    }
    return out;
}

double asymptotic_rate(std::size_t positions, double noise, double gamma) {
    require(positions >= 2, "asymptotic_rate: P must be at least 2");
    require(noise >= 0.0 && noise < 1.0, "asymptotic_rate: Q must lie in [0,1)");
    require(gamma > 0.0 && gamma <= 1.0, "asymptotic_rate: gamma must lie in (0,1]");
    const auto alphabet = static_cast<unsigned>(2 * positions);
    const double value = (1.0 - noise) * -std::log2(gamma) -
                         extended_entropy_d(alphabet, noise) * std::log2(static_cast<double>(alphabet));
    return std::max(0.0, value);
}

std::vector<std::uint64_t> log_grid(double first, double last, std::size_t points) {
    require(first >= 1.0 && last >= first, "log grid: need 1 <= start <= stop");
    require(points >= 1, "log grid: need at least one point");
    std::vector<std::uint64_t> out;
    if (points == 1) {
        out.push_back(static_cast<std::uint64_t>(std::llround(first)));
        return out;
    }
    const double a = std::log10(first);
    const double b = std::log10(last);
    for (std::size_t i = 0; i < points; ++i) {
        const double e = a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1);
        const auto v = static_cast<std::uint64_t>(std::llround(std::pow(10.0, e)));
        if (out.empty() || v > out.back()) {
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace qwqrng
