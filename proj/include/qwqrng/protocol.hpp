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

// End-to-end simulation of the walk QRNG: a source emits N walkers, the user
// tests a random size-m subset with the {|w0><w0|, I - |w0><w0|} POVM,
// measures the position of the rest, sizes the key with key_length and
// hashes the raw positions down with a Toeplitz extractor.

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "qwqrng/bits.hpp"
#include "qwqrng/random.hpp"
#include "qwqrng/rate.hpp"
#include "qwqrng/sampling.hpp"
#include "qwqrng/walk.hpp"

namespace qwqrng {

/// Every walker is exactly W^T|0,0>.
struct IdealSource {};

/// Every walker is (1-Q) |w0><w0| + Q I/(2P).
struct DepolarizingSource {
    double noise = 0.0;
};

/// Validated density operator on the 2P-dimensional walker space.
class DensityOperator {
public:
    /// Requires Hermitian, positive semi-definite, unit trace (tolerance 1e-8).
    static DensityOperator make(Eigen::MatrixXcd rho);
    /// |psi><psi| for a normalized state.
    static DensityOperator pure(const WalkState& psi);

    const Eigen::MatrixXcd& matrix() const { return rho_; }
    std::size_t dimension() const { return static_cast<std::size_t>(rho_.rows()); }

private:
    explicit DensityOperator(Eigen::MatrixXcd rho) : rho_(std::move(rho)) {}
    Eigen::MatrixXcd rho_;
};

/// One density operator per walker (product source); small N only.
struct ExplicitSource {
    std::vector<DensityOperator> walkers;
};

using SourceModel = std::variant<IdealSource, DepolarizingSource, ExplicitSource>;

/// What a single walker looks like; explicit walkers are borrowed.
using WalkerModel = std::variant<IdealSource, DepolarizingSource, const DensityOperator*>;

WalkerModel walker_of(const SourceModel& model, std::size_t index);

/// Precomputed walk data shared by all walkers of a run.
struct WalkContext {
    WalkParams params;
    WalkState w0;                  // W^T|0,0>
    std::vector<double> w0_probs;  // position distribution of w0
    double gamma = 1.0;

    static WalkContext make(const WalkParams& params);
};

/// Probability of test outcome 1 (walker not recognized as w0). With
/// paper_compat a depolarizing walker fails with probability Q instead of
/// the exact Q (1 - 1/(2P)).
double test_failure_probability(const WalkerModel& walker, const WalkContext& ctx,
                                bool paper_compat = false);

/// Born probabilities of the position POVM {I_C x |j><j|}.
std::vector<double> position_probabilities(const WalkerModel& walker, const WalkContext& ctx);

unsigned test_measurement(const WalkerModel& walker, const WalkContext& ctx, Rng& rng,
                          bool paper_compat = false);
unsigned test_measurement(const WalkerModel& walker, const WalkContext& ctx, std::uint64_t seed,
                          bool paper_compat = false);

std::uint32_t position_measurement(const WalkerModel& walker, const WalkContext& ctx, Rng& rng);
std::uint32_t position_measurement(const WalkerModel& walker, const WalkContext& ctx,
                                   std::uint64_t seed);

/// Uniform size-m subset of {0, ..., N-1}, sorted; requires m <= N/2.
std::vector<std::uint64_t> choose_subset(std::uint64_t total, std::uint64_t sample, std::uint64_t seed);

/// ceil(log2 P) bits per symbol.
unsigned symbol_width(std::size_t positions);

/// Fixed-width big-endian encoding of each symbol, concatenated.
BitVector encode_raw(std::span<const std::uint32_t> raw, std::size_t positions);
std::vector<std::uint32_t> decode_raw(const BitVector& bits, std::size_t positions);

struct ProtocolSeeds {
    std::uint64_t subset = 1;
    std::uint64_t measure = 2;
    std::uint64_t hash = 3;
};

struct RunOptions {
    bool paper_compat = false;
};

/// Largest N for which the raw string is materialized.
inline constexpr std::uint64_t kMaxExplicitSignals = 100'000'000;

struct ProtocolRun {
    WalkParams params;
    SamplingParams sampling;
    ProtocolSeeds seeds;
    bool aggregate = false;
    double gamma = 1.0;

    std::vector<std::uint64_t> subset{};      // t, 0-based, sorted
    std::vector<std::uint8_t> test_outcomes{}; // q (empty in aggregate mode)
    std::uint64_t test_ones = 0;             // wt(q)
    double test_weight = 0.0;                // w(q)
    std::vector<std::uint32_t> raw{};          // r (empty in aggregate mode)
    std::vector<std::uint64_t> raw_counts{};   // histogram of r over positions

    RateReport report{};
    BitVector key{};  // report.ell bits; empty in aggregate mode or on abort

    bool aborted() const { return report.ell == 0; }
};

ProtocolRun run_protocol(std::uint64_t total, std::uint64_t sample, const SourceModel& model,
                         const WalkContext& ctx, double epsilon, const ProtocolSeeds& seeds,
                         const RunOptions& options = {});

ProtocolRun run_protocol(std::uint64_t total, std::uint64_t sample, const SourceModel& model,
                         const WalkParams& params, double epsilon, const ProtocolSeeds& seeds,
                         const RunOptions& options = {});

/// Large-N variant for a depolarizing source: draws wt(q) binomially and the
/// position histogram multinomially, and skips extraction.
ProtocolRun run_protocol_aggregate(std::uint64_t total, std::uint64_t sample, double noise,
                                   const WalkContext& ctx, double epsilon, const ProtocolSeeds& seeds,
                                   const RunOptions& options = {});

/// Same, but rejects anything other than a DepolarizingSource.
ProtocolRun run_protocol_aggregate(std::uint64_t total, std::uint64_t sample, const SourceModel& model,
                                   const WalkContext& ctx, double epsilon, const ProtocolSeeds& seeds,
                                   const RunOptions& options = {});

}  // namespace qwqrng
