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

// Finite-key random-bit length for the quantum-walk QRNG and the curves built
// from it.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qwqrng/sampling.hpp"

namespace qwqrng {

struct RateInputs {
    SamplingParams sampling;
    std::size_t positions;  // P
    double gamma;           // in (0, 1]
    double test_weight;     // observed w(q) in [0, 1]

    void validate() const;
};

struct RateReport {
    std::uint64_t ell = 0;   // max(0, floor(raw_ell))
    double raw_ell = 0.0;
    double eta_q = 0.0;      // n (1 - w(q) - delta), clamped at 0

    // raw_ell = min_entropy_term - entropy_penalty - epsilon_term - subset_term
    double min_entropy_term = 0.0;  // -eta_q log2 gamma
    double entropy_penalty = 0.0;   // n Hbar_{2P}(w(q)+delta) log2(2P)
    double epsilon_term = 0.0;      // 2 log2(1/eps)
    double subset_term = 0.0;       // log2 C(N, m)

    double failure_probability = 0.0;  // eps^(1/3)
    double security_distance = 0.0;    // 5 eps + 4 eps^(1/3)

    bool aborted() const { return ell == 0; }
};

RateReport key_length(const RateInputs& inputs);

/// Test-subset size as a function of N.
class SampleRule {
public:
    static SampleRule square_root() { return SampleRule(0); }
    static SampleRule fixed(std::uint64_t m) { return SampleRule(m); }
    /// "sqrt" or "fixed:<k>".
    static SampleRule parse(const std::string& text);

    std::uint64_t operator()(std::uint64_t total) const;
    std::string to_string() const;

private:
    explicit SampleRule(std::uint64_t fixed) : fixed_(fixed) {}
    std::uint64_t fixed_;  // 0 selects floor(sqrt(N))
};

std::uint64_t isqrt(std::uint64_t v);

/// Expected test weight of a depolarized walker: Q (1 - 1/(2P)). With
/// paper_compat the observed weight is taken to be Q itself.
double expected_test_weight(double noise, std::size_t positions, bool paper_compat);

struct RatePoint {
    std::uint64_t total = 0;
    std::uint64_t sample = 0;
    double delta = 0.0;
    double test_weight = 0.0;
    std::uint64_t ell = 0;
    double rate = 0.0;  // ell / N
};

/// One key_length evaluation per grid point with w(q) = expected_test_weight.
std::vector<RatePoint> rate_curve(std::size_t positions, double noise, double epsilon,
                                  std::span<const std::uint64_t> grid, const SampleRule& rule,
                                  double gamma, bool paper_compat = true);

/// N -> infinity limit with m = sqrt(N): (1-Q)(-log2 gamma) - Hbar_{2P}(Q) log2(2P), >= 0.
double asymptotic_rate(std::size_t positions, double noise, double gamma);

/// Logarithmic grid of `points` integers from first to last inclusive.
std::vector<std::uint64_t> log_grid(double first, double last, std::size_t points);

}  // namespace qwqrng
