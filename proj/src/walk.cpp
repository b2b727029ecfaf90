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

#include "qwqrng/walk.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "qwqrng/errors.hpp"

namespace qwqrng {

namespace {

constexpr double kNormTolerance = 1e-10;

Eigen::MatrixXcd walk_test_projector(const WalkState& w0, unsigned outcome) {
    const auto d = static_cast<Eigen::Index>(w0.dimension());
    const Eigen::Map<const Eigen::VectorXcd> v(w0.amplitudes().data(), d);
    Eigen::MatrixXcd proj = v * v.adjoint();
    if (outcome == 1) {
        proj = Eigen::MatrixXcd::Identity(d, d) - proj;
    }
    return proj;
}

}  // namespace

void WalkParams::validate() const {
    require(positions >= 2, "walk: position dimension P must be at least 2, got " +
                                std::to_string(positions));
}

WalkState WalkState::basis(unsigned coin, std::size_t position, std::size_t positions) {
    require(positions >= 2, "walk: position dimension P must be at least 2");
    require(coin <= 1, "walk: coin index must be 0 or 1");
    require(position < positions, "walk: position index out of range");
    std::vector<std::complex<double>> amps(2 * positions);
    amps[coin * positions + position] = 1.0;
    return WalkState(std::move(amps));
}

WalkState WalkState::from_amplitudes(std::vector<std::complex<double>> amplitudes) {
    require(amplitudes.size() >= 4 && amplitudes.size() % 2 == 0,
            "walk: amplitude vector must have even length 2P with P >= 2");
    return WalkState(std::move(amplitudes));
}

double WalkState::norm_squared() const {
    return std::accumulate(amplitudes_.begin(), amplitudes_.end(), 0.0,
                           [](double acc, std::complex<double> a) { return acc + std::norm(a); });
}

std::complex<double> WalkState::inner_product(const WalkState& other) const {
    require(other.dimension() == dimension(), "walk: inner product of mismatched dimensions");
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        acc += std::conj(amplitudes_[i]) * other.amplitudes_[i];
    }
    return acc;
}

PositionDistribution::PositionDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
    require(!probs_.empty(), "distribution: empty");
    double total = 0.0;
    for (double p : probs_) {
        require(p >= -kNormTolerance && p <= 1.0 + kNormTolerance,
                "distribution: entry outside [0,1]");
        total += p;
    }
    require(std::abs(total - 1.0) <= kNormTolerance, "distribution: entries do not sum to 1");
}

double PositionDistribution::max() const {
    return *std::max_element(probs_.begin(), probs_.end());
}

WalkState walk_step(const WalkState& state, kernels::Isa isa) {
    std::vector<std::complex<double>> out(state.dimension());
    kernels::walk_step(state.amplitudes(), out, state.positions(), isa);
    return WalkState::from_amplitudes(std::move(out));
}

WalkState walk_step_adjoint(const WalkState& state) {
    const double s = 1.0 / std::numbers::sqrt2;
    const std::size_t p = state.positions();
    const auto in = state.amplitudes();
    std::vector<std::complex<double>> out(state.dimension());
    for (std::size_t x = 0; x < p; ++x) {
        // Undo the shift, then the (self-inverse) Hadamard coin.
        const std::complex<double> heads = in[(x + 1) % p];
        const std::complex<double> tails = in[p + (x + p - 1) % p];
        out[x] = (heads + tails) * s;
        out[p + x] = (heads - tails) * s;
    }
    return WalkState::from_amplitudes(std::move(out));
}

WalkState evolve(unsigned coin, std::size_t position, const WalkParams& params, kernels::Isa isa) {
    params.validate();
    WalkState state = WalkState::basis(coin, position, params.positions);
    std::vector<std::complex<double>> scratch(state.dimension());
    for (std::size_t t = 0; t < params.steps; ++t) {
        kernels::walk_step(state.amplitudes(), scratch, params.positions, isa);
        std::copy(scratch.begin(), scratch.end(), state.amplitudes().begin());
    }
    return state;
}

PositionDistribution position_distribution(const WalkState& state) {
    const std::size_t p = state.positions();
    std::vector<double> probs(p);
    for (std::size_t z = 0; z < p; ++z) {
        probs[z] = std::norm(state.amplitude(0, z)) + std::norm(state.amplitude(1, z));
    }
    return PositionDistribution(std::move(probs));
}

double gamma(const WalkParams& params) {
    return position_distribution(evolve(0, 0, params)).max();
}

GammaScan gamma_scan(std::size_t positions, std::size_t max_steps) {
    require(positions >= 2, "gamma_scan: P must be at least 2");
    require(max_steps >= 1, "gamma_scan: T_max must be at least 1");
    GammaScan scan;
    scan.gammas.reserve(max_steps);
    WalkState state = WalkState::basis(0, 0, positions);
    std::vector<std::complex<double>> next(state.dimension());
    for (std::size_t t = 1; t <= max_steps; ++t) {
        kernels::walk_step(state.amplitudes(), next, positions);
        std::copy(next.begin(), next.end(), state.amplitudes().begin());
        const double g = position_distribution(state).max();
        scan.gammas.push_back(g);
        if (t == 1 || g < scan.best_gamma) {
            scan.best_gamma = g;
            scan.best_steps = t;
        }
    }
    return scan;
}

double walk_basis_fidelity(const WalkState& state, const WalkState& w0) {
    return std::norm(w0.inner_product(state));
}

double walk_basis_fidelity(const WalkState& state, const WalkParams& params) {
    require(state.positions() == params.positions, "walk_basis_fidelity: dimension mismatch");
    return walk_basis_fidelity(state, evolve(0, 0, params));
}

namespace {

double pair_overlap(const WalkState& w0, unsigned test_outcome, std::size_t position) {
    const Eigen::MatrixXcd test = walk_test_projector(w0, test_outcome);
    const auto d = static_cast<Eigen::Index>(w0.dimension());
    Eigen::MatrixXcd pos = Eigen::MatrixXcd::Zero(d, d);
    const auto p = static_cast<Eigen::Index>(w0.positions());
    const auto y = static_cast<Eigen::Index>(position);
    pos(y, y) = 1.0;
    pos(p + y, p + y) = 1.0;
    // ||A||_op^2 is the top eigenvalue of A^dagger A.
    const Eigen::MatrixXcd a = test * pos;
    const Eigen::MatrixXcd gram = a.adjoint() * a;
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

}  // namespace

double povm_pair_overlap(const WalkParams& params, unsigned test_outcome, std::size_t position) {
    params.validate();
    require(test_outcome <= 1, "povm_pair_overlap: test outcome must be 0 or 1");
    require(position < params.positions, "povm_pair_overlap: position out of range");
    return pair_overlap(evolve(0, 0, params), test_outcome, position);
}

double uncertainty_overlap(const WalkParams& params) {
    params.validate();
    const WalkState w0 = evolve(0, 0, params);
    double best = 0.0;
    for (unsigned x = 0; x <= 1; ++x) {
        for (std::size_t y = 0; y < params.positions; ++y) {
            best = std::max(best, pair_overlap(w0, x, y));
        }
    }
    return best;
}

double min_entropy_of_distribution(std::span<const double> probs) {
    require(!probs.empty(), "min_entropy: empty distribution");
    double total = 0.0;
    double largest = 0.0;
    for (double p : probs) {
        require(p >= 0.0, "min_entropy: negative probability");
        total += p;
        largest = std::max(largest, p);
    }
    require(std::abs(total - 1.0) <= kNormTolerance, "min_entropy: probabilities do not sum to 1");
    return -std::log2(largest);
}

}  // namespace qwqrng
