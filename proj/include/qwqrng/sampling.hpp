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

// Classical statistics behind the finite-key bound: d-ary entropies, relative
// Hamming weights, the sampling deviation and its error bound, and binomial
// accounting. Entropies here are normalized to base-d logarithms; callers
// convert to bits explicitly.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qwqrng {

/// A word over the alphabet {0, ..., alphabet-1}.
struct Word {
    std::vector<std::uint32_t> symbols;
    std::uint32_t alphabet = 2;

    /// Throws InvalidArgument if alphabet < 2 or any symbol is out of range.
    void validate() const;
    std::size_t size() const { return symbols.size(); }
};

/// Fraction of nonzero symbols. Rejects the empty word.
double relative_weight(std::span<const std::uint32_t> symbols);
inline double relative_weight(const Word& word) { return relative_weight(word.symbols); }

/// h_d(x) = x log_d(d-1) - x log_d x - (1-x) log_d(1-x), for x in [0,1].
double entropy_d(unsigned d, double x);

/// h_d clamped: 0 below 0, 1 above 1 - 1/d. Total on the reals.
double extended_entropy_d(unsigned d, double x);

/// delta = sqrt((N+2) ln(2/eps^2) / (m N)).
double sampling_delta(std::uint64_t total, std::uint64_t sample, double epsilon);

/// 2 exp(-delta^2 m (n+m) / (m+n+2)) with n = N - m.
double classical_sampling_error(std::uint64_t total, std::uint64_t sample, double delta);

class SamplingParams {
public:
    /// Validates 0 < eps < 1 and 1 <= m <= N/2 and computes delta.
    static SamplingParams make(std::uint64_t total, std::uint64_t sample, double epsilon);

    std::uint64_t total() const { return total_; }
    std::uint64_t sample() const { return sample_; }
    std::uint64_t remaining() const { return total_ - sample_; }
    double epsilon() const { return epsilon_; }
    double delta() const { return delta_; }

private:
    SamplingParams(std::uint64_t total, std::uint64_t sample, double epsilon, double delta)
        : total_(total), sample_(sample), epsilon_(epsilon), delta_(delta) {}

    std::uint64_t total_;
    std::uint64_t sample_;
    double epsilon_;
    double delta_;
};

/// |w(q_t) - w(q_rest)| <= delta, where t holds 0-based distinct indices.
bool good_set_member(const Word& word, std::span<const std::size_t> subset, double delta);

/// log2 C(N, m) through log-gamma.
double log2_binomial(std::uint64_t n, std::uint64_t k);

enum class WordGenerator {
    uniform,      // i.i.d. uniform symbols
    constant,     // one symbol everywhere
    half_heavy,   // first half nonzero, second half zero
    blocks,       // alternating runs of zero and nonzero of random length
};

/// Fraction of trials where a fresh uniform size-m subset misjudges the
/// word's unobserved weight by more than delta. Each trial uses its own
/// substream derived from (seed, trial index).
double monte_carlo_sampling_check(std::uint64_t total, std::uint64_t sample, std::uint32_t alphabet,
                                  double delta, std::uint64_t trials, std::uint64_t seed,
                                  WordGenerator generator);

}  // namespace qwqrng
