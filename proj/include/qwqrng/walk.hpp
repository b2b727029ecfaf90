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

// Discrete-time Hadamard walk on a P-cycle.
//
// The walker lives in C^2 (coin) x C^P (position). Amplitudes are stored
// flat with index i = c*P + x, so |0,0> is index 0.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qwqrng/kernels.hpp"

namespace qwqrng {

struct WalkParams {
    std::size_t positions = 2;  // P >= 2
    std::size_t steps = 0;      // T >= 0

    /// Throws InvalidArgument when positions < 2.
    void validate() const;
    std::size_t dimension() const { return 2 * positions; }
};

class WalkState {
public:
    /// Basis state |coin, position>.
    static WalkState basis(unsigned coin, std::size_t position, std::size_t positions);

    /// Takes ownership of raw amplitudes (length 2P). No normalization check.
    static WalkState from_amplitudes(std::vector<std::complex<double>> amplitudes);

    std::size_t positions() const { return amplitudes_.size() / 2; }
    std::size_t dimension() const { return amplitudes_.size(); }

    std::complex<double> amplitude(unsigned coin, std::size_t position) const {
        return amplitudes_[coin * positions() + position];
    }
    std::span<const std::complex<double>> amplitudes() const { return amplitudes_; }
    std::span<std::complex<double>> amplitudes() { return amplitudes_; }

    double norm_squared() const;

    /// <this|other>
    std::complex<double> inner_product(const WalkState& other) const;

private:
    explicit WalkState(std::vector<std::complex<double>> amplitudes)
        : amplitudes_(std::move(amplitudes)) {}

    std::vector<std::complex<double>> amplitudes_;
};

class PositionDistribution {
public:
    /// Validates length >= 1, entries in [0,1], sum 1 within 1e-10.
    explicit PositionDistribution(std::vector<double> probs);

    std::span<const double> probs() const { return probs_; }
    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t z) const { return probs_[z]; }
    double max() const;

private:
    std::vector<double> probs_;
};

/// W = S (H x I_P) applied once.
WalkState walk_step(const WalkState& state, kernels::Isa isa = kernels::best_isa());

/// W^dagger = (H x I_P) S^dagger applied once.
WalkState walk_step_adjoint(const WalkState& state);

/// W^T |coin, position>.
WalkState evolve(unsigned coin, std::size_t position, const WalkParams& params,
                 kernels::Isa isa = kernels::best_isa());

/// Pr[z] = |amp(0,z)|^2 + |amp(1,z)|^2
PositionDistribution position_distribution(const WalkState& state);

/// Largest position probability of W^T|0,0>.
double gamma(const WalkParams& params);

struct GammaScan {
    std::size_t best_steps = 0;
    double best_gamma = 1.0;
    std::vector<double> gammas;  // gammas[T-1] for T = 1..T_max
};

/// Minimizes gamma over T in [1, max_steps], ties to the smallest T.
/// Advances a single state, one walk step per T.
GammaScan gamma_scan(std::size_t positions, std::size_t max_steps);

/// |<w_0|state>|^2 with w_0 = W^T|0,0>.
double walk_basis_fidelity(const WalkState& state, const WalkState& w0);
double walk_basis_fidelity(const WalkState& state, const WalkParams& params);

/// ||W_x Z_y||_op^2 for the test projector W_x (x = 0: |w_0><w_0|,
/// x = 1: I - |w_0><w_0|) and the position projector Z_y = I_C x |y><y|.
double povm_pair_overlap(const WalkParams& params, unsigned test_outcome, std::size_t position);

/// max over x, y of povm_pair_overlap.
double uncertainty_overlap(const WalkParams& params);

/// -log2 max_x p_x. Rejects empty or non-normalized input.
double min_entropy_of_distribution(std::span<const double> probs);

}  // namespace qwqrng
