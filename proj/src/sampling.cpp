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

#include "qwqrng/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "qwqrng/errors.hpp"
#include "qwqrng/random.hpp"

namespace qwqrng {

std::vector<std::uint64_t> sample_subset(std::uint64_t n, std::uint64_t k, Rng& rng) {
    require(k <= n, "sample_subset: subset larger than population");
    std::set<std::uint64_t> chosen;
    for (std::uint64_t j = n - k; j < n; ++j) {
        std::uniform_int_distribution<std::uint64_t> pick(0, j);
        const std::uint64_t v = pick(rng);
        if (!chosen.insert(v).second) {
            chosen.insert(j);
        }
    }
    return {chosen.begin(), chosen.end()};
}

void Word::validate() const {
    require(alphabet >= 2, "word: alphabet size must be at least 2");
    for (std::uint32_t s : symbols) {
        require(s < alphabet, "word: symbol outside the alphabet");
    }
}

double relative_weight(std::span<const std::uint32_t> symbols) {
    require(!symbols.empty(), "relative_weight: empty word");
    const auto nonzero = std::count_if(symbols.begin(), symbols.end(),
                                       [](std::uint32_t s) { return s != 0; });
    return static_cast<double>(nonzero) / static_cast<double>(symbols.size());
}

double entropy_d(unsigned d, double x) {
    require(d >= 2, "entropy_d: alphabet size must be at least 2");
    require(x >= 0.0 && x <= 1.0, "entropy_d: argument outside [0,1]");
    const double log_d = std::log(static_cast<double>(d));
    double h = 0.0;
    if (x > 0.0) {
        h += x * std::log(static_cast<double>(d - 1)) - x * std::log(x);
    }
    if (x < 1.0) {
        h -= (1.0 - x) * std::log1p(-x);
    }
    return h / log_d;
}

double extended_entropy_d(unsigned d, double x) {
    require(d >= 2, "extended_entropy_d: alphabet size must be at least 2");
    if (x < 0.0) {
        return 0.0;
    }
    if (x > 1.0 - 1.0 / static_cast<double>(d)) {
        return 1.0;
    }
    return entropy_d(d, x);
}

double sampling_delta(std::uint64_t total, std::uint64_t sample, double epsilon) {
    require(epsilon > 0.0 && epsilon < 1.0, "sampling_delta: epsilon must lie in (0,1)");
    require(sample >= 1 && 2 * sample <= total, "sampling_delta: need 1 <= m <= N/2");
    const double n = static_cast<double>(total);
    const double m = static_cast<double>(sample);
    // ln(2/eps^2) without forming eps^2, which underflows for tiny eps.
    const double log_term = std::numbers::ln2 - 2.0 * std::log(epsilon);
    return std::sqrt((n + 2.0) * log_term / (m * n));
}

double classical_sampling_error(std::uint64_t total, std::uint64_t sample, double delta) {
    require(sample >= 1 && 2 * sample <= total, "classical_sampling_error: need 1 <= m <= N/2");
    require(delta >= 0.0, "classical_sampling_error: delta must be non-negative");
    const double m = static_cast<double>(sample);
    const double rest = static_cast<double>(total - sample);
    return 2.0 * std::exp(-delta * delta * m * (rest + m) / (m + rest + 2.0));
}

SamplingParams SamplingParams::make(std::uint64_t total, std::uint64_t sample, double epsilon) {
    return SamplingParams(total, sample, epsilon, sampling_delta(total, sample, epsilon));
}

bool good_set_member(const Word& word, std::span<const std::size_t> subset, double delta) {
    const std::size_t n = word.size();
    require(!subset.empty() && subset.size() < n,
            "good_set_member: subset and its complement must be non-empty");
    std::vector<char> in_subset(n, 0);
    for (std::size_t i : subset) {
        require(i < n, "good_set_member: subset index out of range");
        require(in_subset[i] == 0, "good_set_member: repeated subset index");
        in_subset[i] = 1;
    }
    std::size_t heavy_in = 0;
    std::size_t heavy_out = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (word.symbols[i] != 0) {
            (in_subset[i] != 0 ? heavy_in : heavy_out) += 1;
        }
    }
    const double w_in = static_cast<double>(heavy_in) / static_cast<double>(subset.size());
    const double w_out = static_cast<double>(heavy_out) / static_cast<double>(n - subset.size());
    return std::abs(w_in - w_out) <= delta;
}

double log2_binomial(std::uint64_t n, std::uint64_t k) {
    require(k <= n, "log2_binomial: k exceeds n");
    if (k == 0 || k == n) {
        return 0.0;
    }
    const double nn = static_cast<double>(n);
    const double kk = static_cast<double>(k);
    const double ln = std::lgamma(nn + 1.0) - std::lgamma(kk + 1.0) - std::lgamma(nn - kk + 1.0);
    return ln / std::numbers::ln2;
}

namespace {

std::vector<std::uint32_t> draw_word(std::uint64_t length, std::uint32_t alphabet,
                                     WordGenerator generator, Rng& rng) {
    std::vector<std::uint32_t> word(length, 0);
    std::uniform_int_distribution<std::uint32_t> nonzero(1, alphabet - 1);
    switch (generator) {
        case WordGenerator::uniform: {
            std::uniform_int_distribution<std::uint32_t> any(0, alphabet - 1);
            for (auto& s : word) {
                s = any(rng);
            }
            break;
        }
        case WordGenerator::constant: {
            std::uniform_int_distribution<std::uint32_t> any(0, alphabet - 1);
            std::fill(word.begin(), word.end(), any(rng));
            break;
        }
        case WordGenerator::half_heavy:
            for (std::uint64_t i = 0; i < length / 2; ++i) {
                word[i] = nonzero(rng);
            }
            break;
        case WordGenerator::blocks: {
            std::uniform_int_distribution<std::uint64_t> run(1, std::max<std::uint64_t>(1, length / 4));
            bool heavy = (rng() & 1U) != 0;
            for (std::uint64_t i = 0; i < length;) {
                const std::uint64_t end = std::min(length, i + run(rng));
                for (; i < end; ++i) {
                    word[i] = heavy ? nonzero(rng) : 0;
                }
                heavy = !heavy;
            }
            break;
        }
    }
    return word;
}

}  // namespace

double monte_carlo_sampling_check(std::uint64_t total, std::uint64_t sample, std::uint32_t alphabet,
                                  double delta, std::uint64_t trials, std::uint64_t seed,
                                  WordGenerator generator) {
    require(trials >= 1, "monte_carlo_sampling_check: need at least one trial");
    require(alphabet >= 2, "monte_carlo_sampling_check: alphabet size must be at least 2");
    require(sample >= 1 && sample < total, "monte_carlo_sampling_check: need 1 <= m < N");
    std::uint64_t failures = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        Rng rng = substream(seed, trial);
        const auto word = draw_word(total, alphabet, generator, rng);
        const auto subset = sample_subset(total, sample, rng);
        std::uint64_t heavy_in = 0;
        for (std::uint64_t i : subset) {
            heavy_in += word[i] != 0 ? 1 : 0;
        }
        std::uint64_t heavy_total = 0;
        for (std::uint32_t s : word) {
            heavy_total += s != 0 ? 1 : 0;
        }
        const double w_in = static_cast<double>(heavy_in) / static_cast<double>(sample);
        const double w_out = static_cast<double>(heavy_total - heavy_in) /
                             static_cast<double>(total - sample);
        if (std::abs(w_in - w_out) > delta) {
            ++failures;
        }
    }
    return static_cast<double>(failures) / static_cast<double>(trials);
}

}  // namespace qwqrng
