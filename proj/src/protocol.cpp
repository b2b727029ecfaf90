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

#include "qwqrng/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qwqrng/errors.hpp"
#include "qwqrng/toeplitz.hpp"

namespace qwqrng {

namespace {

constexpr double kDensityTolerance = 1e-8;

void require_noise(double q) {
    require(q >= 0.0 && q <= 1.0, "depolarizing source: Q must lie in [0,1]");
}

// Position distribution of a depolarized walker: (1-Q) p + Q/P.
std::vector<double> mixed_position_probs(double noise, const std::vector<double>& walk) {
    const double uniform = 1.0 / static_cast<double>(walk.size());
    std::vector<double> out(walk.size());
    for (std::size_t z = 0; z < walk.size(); ++z) {
        out[z] = (1.0 - noise) * walk[z] + noise * uniform;
    }
    return out;
}

std::uint32_t sample_inverse_cdf(const std::vector<double>& probs, Rng& rng) {
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    double acc = 0.0;
    for (std::size_t z = 0; z + 1 < probs.size(); ++z) {
        acc += probs[z];
        if (u < acc) {
            return static_cast<std::uint32_t>(z);
        }
    }
    return static_cast<std::uint32_t>(probs.size() - 1);
}

void finish_report(ProtocolRun& run) {
    run.test_weight = static_cast<double>(run.test_ones) / static_cast<double>(run.sampling.sample());
    const RateInputs inputs{run.sampling, run.params.positions, run.gamma, run.test_weight};
    run.report = key_length(inputs);
}

}  // namespace

DensityOperator DensityOperator::make(Eigen::MatrixXcd rho) {
    require(rho.rows() == rho.cols() && rho.rows() >= 4 && rho.rows() % 2 == 0,
            "density operator: must be square with even dimension 2P, P >= 2");
    require((rho - rho.adjoint()).cwiseAbs().maxCoeff() <= kDensityTolerance,
            "density operator: not Hermitian");
    require(std::abs(rho.trace() - std::complex<double>(1.0, 0.0)) <= kDensityTolerance,
            "density operator: trace is not 1");
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    require(solver.eigenvalues().minCoeff() >= -kDensityTolerance,
            "density operator: not positive semi-definite");
    return DensityOperator(std::move(rho));
}

DensityOperator DensityOperator::pure(const WalkState& psi) {
    const auto d = static_cast<Eigen::Index>(psi.dimension());
    const Eigen::Map<const Eigen::VectorXcd> v(psi.amplitudes().data(), d);
    return make(v * v.adjoint());
}

WalkerModel walker_of(const SourceModel& model, std::size_t index) {
    return std::visit(
        [index](const auto& m) -> WalkerModel {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, ExplicitSource>) {
                require(index < m.walkers.size(), "explicit source: walker index out of range");
                return &m.walkers[index];
            } else {
                return m;
            }
        },
        model);
}

WalkContext WalkContext::make(const WalkParams& params) {
    params.validate();
    WalkState w0 = evolve(0, 0, params);
    const PositionDistribution dist = position_distribution(w0);
    std::vector<double> probs(dist.probs().begin(), dist.probs().end());
    const double g = dist.max();
    return WalkContext{params, std::move(w0), std::move(probs), g};
}

double test_failure_probability(const WalkerModel& walker, const WalkContext& ctx, bool paper_compat) {
    return std::visit(
        [&](const auto& w) -> double {
            using M = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<M, IdealSource>) {
                return 0.0;
            } else if constexpr (std::is_same_v<M, DepolarizingSource>) {
                require_noise(w.noise);
                return expected_test_weight(w.noise, ctx.params.positions, paper_compat);
            } else {
                require(w->dimension() == ctx.params.dimension(),
                        "explicit walker: dimension does not match 2P");
                const auto d = static_cast<Eigen::Index>(ctx.w0.dimension());
                const Eigen::Map<const Eigen::VectorXcd> v(ctx.w0.amplitudes().data(), d);
                const double pass = std::real(v.dot(w->matrix() * v));
                return std::clamp(1.0 - pass, 0.0, 1.0);
            }
        },
        walker);
}

std::vector<double> position_probabilities(const WalkerModel& walker, const WalkContext& ctx) {
    return std::visit(
        [&](const auto& w) -> std::vector<double> {
            using M = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<M, IdealSource>) {
                return ctx.w0_probs;
            } else if constexpr (std::is_same_v<M, DepolarizingSource>) {
                require_noise(w.noise);
                return mixed_position_probs(w.noise, ctx.w0_probs);
            } else {
                require(w->dimension() == ctx.params.dimension(),
                        "explicit walker: dimension does not match 2P");
                const std::size_t p = ctx.params.positions;
                std::vector<double> out(p);
                for (std::size_t z = 0; z < p; ++z) {
                    const auto a = static_cast<Eigen::Index>(z);
                    const auto b = static_cast<Eigen::Index>(p + z);
                    out[z] = std::max(0.0, std::real(w->matrix()(a, a)) + std::real(w->matrix()(b, b)));
                }
                return out;
            }
        },
        walker);
}

unsigned test_measurement(const WalkerModel& walker, const WalkContext& ctx, Rng& rng,
                          bool paper_compat) {
    const double fail = test_failure_probability(walker, ctx, paper_compat);
    return std::bernoulli_distribution(fail)(rng) ? 1U : 0U;
}

unsigned test_measurement(const WalkerModel& walker, const WalkContext& ctx, std::uint64_t seed,
                          bool paper_compat) {
    Rng rng(seed);
    return test_measurement(walker, ctx, rng, paper_compat);
}

std::uint32_t position_measurement(const WalkerModel& walker, const WalkContext& ctx, Rng& rng) {
    return sample_inverse_cdf(position_probabilities(walker, ctx), rng);
}

std::uint32_t position_measurement(const WalkerModel& walker, const WalkContext& ctx,
                                   std::uint64_t seed) {
    Rng rng(seed);
    return position_measurement(walker, ctx, rng);
}

std::vector<std::uint64_t> choose_subset(std::uint64_t total, std::uint64_t sample, std::uint64_t seed) {
    require(sample >= 1 && 2 * sample <= total, "choose_subset: need 1 <= m <= N/2");
    Rng rng(seed);
    return sample_subset(total, sample, rng);
}

unsigned symbol_width(std::size_t positions) {
    require(positions >= 2, "symbol_width: P must be at least 2");
    return static_cast<unsigned>(std::bit_width(positions - 1));
}

BitVector encode_raw(std::span<const std::uint32_t> raw, std::size_t positions) {
    const unsigned width = symbol_width(positions);
    BitVector out;
    for (std::uint32_t s : raw) {
        require(s < positions, "encode_raw: symbol outside the position alphabet");
        out.append_msb_first(s, width);
    }
    return out;
}

std::vector<std::uint32_t> decode_raw(const BitVector& bits, std::size_t positions) {
    const unsigned width = symbol_width(positions);
    require(bits.size() % width == 0, "decode_raw: bit length is not a multiple of the symbol width");
    std::vector<std::uint32_t> out(bits.size() / width);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint32_t v = 0;
        for (unsigned b = 0; b < width; ++b) {
            v = (v << 1) | (bits.get(i * width + b) ? 1U : 0U);
        }
        require(v < positions, "decode_raw: code word outside the position alphabet");
        out[i] = v;
    }
    return out;
}

ProtocolRun run_protocol(std::uint64_t total, std::uint64_t sample, const SourceModel& model,
                         const WalkContext& ctx, double epsilon, const ProtocolSeeds& seeds,
                         const RunOptions& options) {
    require(total <= kMaxExplicitSignals,
            "run_protocol: N too large to hold the raw string; use the aggregate mode");
    if (const auto* ex = std::get_if<ExplicitSource>(&model)) {
        require(ex->walkers.size() == total, "explicit source: need exactly one operator per signal");
    }
    ProtocolRun run{.params = ctx.params, .sampling = SamplingParams::make(total, sample, epsilon), .seeds = seeds};
    run.gamma = ctx.gamma;
    run.subset = choose_subset(total, sample, seeds.subset);

    const std::size_t p = ctx.params.positions;
    const bool iid = !std::holds_alternative<ExplicitSource>(model);
    std::discrete_distribution<std::uint32_t> iid_position;
    std::bernoulli_distribution iid_test;
    if (iid) {
        const WalkerModel w = walker_of(model, 0);
        const auto probs = position_probabilities(w, ctx);
        iid_position = std::discrete_distribution<std::uint32_t>(probs.begin(), probs.end());
        iid_test = std::bernoulli_distribution(test_failure_probability(w, ctx, options.paper_compat));
    }

    Rng rng(seeds.measure);
    run.test_outcomes.reserve(sample);
    run.raw.reserve(total - sample);
    run.raw_counts.assign(p, 0);
    auto next_test = run.subset.begin();
    for (std::uint64_t i = 0; i < total; ++i) {
        const bool tested = next_test != run.subset.end() && *next_test == i;
        if (tested) {
            ++next_test;
            const unsigned bit = iid ? (iid_test(rng) ? 1U : 0U)
                                     : test_measurement(walker_of(model, i), ctx, rng, options.paper_compat);
            run.test_outcomes.push_back(static_cast<std::uint8_t>(bit));
            run.test_ones += bit;
        } else {
            const std::uint32_t z = iid ? iid_position(rng) : position_measurement(walker_of(model, i), ctx, rng);
            run.raw.push_back(z);
            ++run.raw_counts[z];
        }
    }

    finish_report(run);
    if (!run.aborted()) {
        const BitVector encoded = encode_raw(run.raw, p);
        const auto ell = static_cast<std::size_t>(run.report.ell);
        const ToeplitzSeed seed = ToeplitzSeed::generate(encoded.size(), ell, seeds.hash);
        run.key = toeplitz_extract(encoded, seed, ell);
    }
    return run;
}

ProtocolRun run_protocol(std::uint64_t total, std::uint64_t sample, const SourceModel& model,
                         const WalkParams& params, double epsilon, const ProtocolSeeds& seeds,
                         const RunOptions& options) {
    return run_protocol(total, sample, model, WalkContext::make(params), epsilon, seeds, options);
}

ProtocolRun run_protocol_aggregate(std::uint64_t total, std::uint64_t sample, double noise,
                                   const WalkContext& ctx, double epsilon, const ProtocolSeeds& seeds,
                                   const RunOptions& options) {
    require_noise(noise);
    ProtocolRun run{.params = ctx.params, .sampling = SamplingParams::make(total, sample, epsilon), .seeds = seeds};
    run.aggregate = true;
    run.gamma = ctx.gamma;
    run.subset = choose_subset(total, sample, seeds.subset);

    Rng rng(seeds.measure);
    const double fail = expected_test_weight(noise, ctx.params.positions, options.paper_compat);
    using Count = unsigned long long;
    run.test_ones = std::binomial_distribution<Count>(sample, fail)(rng);

    // Multinomial histogram by sequential conditional binomials.
    const auto probs = mixed_position_probs(noise, ctx.w0_probs);
    run.raw_counts.assign(probs.size(), 0);
    Count left = total - sample;
    double mass_left = 1.0;
    for (std::size_t z = 0; z < probs.size() && left > 0; ++z) {
        if (z + 1 == probs.size()) {
            run.raw_counts[z] = left;
            break;
        }
        const double cond = mass_left > 0.0 ? std::clamp(probs[z] / mass_left, 0.0, 1.0) : 0.0;
        const Count c = std::binomial_distribution<Count>(left, cond)(rng);
        run.raw_counts[z] = c;
        left -= c;
        mass_left -= probs[z];
    }

    finish_report(run);
    return run;
}

ProtocolRun run_protocol_aggregate(std::uint64_t total, std::uint64_t sample, const SourceModel& model,
                                   const WalkContext& ctx, double epsilon, const ProtocolSeeds& seeds,
                                   const RunOptions& options) {
    const auto* depolarizing = std::get_if<DepolarizingSource>(&model);
    require(depolarizing != nullptr, "aggregate mode requires a depolarizing source model");
    return run_protocol_aggregate(total, sample, depolarizing->noise, ctx, epsilon, seeds, options);
}

}  // namespace qwqrng
