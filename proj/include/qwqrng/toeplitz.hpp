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

// Privacy amplification with random Toeplitz matrices over GF(2).
//
// For input x of length k and output length l the matrix is
//     T[i][j] = seed[i - j + k - 1],  0 <= i < l, 0 <= j < k,
// so the seed holds k + l - 1 bits, and key[i] = XOR_j T[i][j] x[j].
// Equivalently key[i] is coefficient k-1+i of the GF(2) product seed(z) x(z),
// which is how it is computed.

#include <cstddef>
#include <cstdint>

#include "qwqrng/bits.hpp"
#include "qwqrng/kernels.hpp"

namespace qwqrng {

class ToeplitzSeed {
public:
    /// Wraps explicit seed bits; the length must equal input_bits + output_bits - 1.
    static ToeplitzSeed from_bits(BitVector bits, std::size_t input_bits, std::size_t output_bits);

    /// Seed bits drawn from a generator keyed by `seed`. Seeds of different
    /// lengths from the same key share a prefix.
    static ToeplitzSeed generate(std::size_t input_bits, std::size_t output_bits, std::uint64_t seed);

    const BitVector& bits() const { return bits_; }
    std::size_t input_bits() const { return input_bits_; }
    std::size_t output_bits() const { return output_bits_; }

private:
    ToeplitzSeed(BitVector bits, std::size_t input_bits, std::size_t output_bits)
        : bits_(std::move(bits)), input_bits_(input_bits), output_bits_(output_bits) {}

    BitVector bits_;
    std::size_t input_bits_;
    std::size_t output_bits_;
};

/// Rejects a seed whose dimensions do not match (|input|, ell).
BitVector toeplitz_extract(const BitVector& input, const ToeplitzSeed& seed, std::size_t ell,
                           kernels::Isa isa = kernels::best_isa());

struct KeyDiagnostics {
    double ones_fraction = 0.0;
    double monobit_z = 0.0;  // (ones - n/2) / sqrt(n/4)
    std::uint64_t runs = 0;
};

KeyDiagnostics key_diagnostics(const BitVector& key);

}  // namespace qwqrng
