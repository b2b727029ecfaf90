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

#include "qwqrng/toeplitz.hpp"

#include <cmath>
#include <string>

#include "qwqrng/errors.hpp"
#include "qwqrng/random.hpp"

namespace qwqrng {

namespace {

std::size_t seed_length(std::size_t input_bits, std::size_t output_bits) {
    if (output_bits == 0) {
        return input_bits == 0 ? 0 : input_bits - 1;
    }
    return input_bits + output_bits - 1;
}

}  // namespace

ToeplitzSeed ToeplitzSeed::from_bits(BitVector bits, std::size_t input_bits, std::size_t output_bits) {
    const std::size_t expected = seed_length(input_bits, output_bits);
    require(bits.size() == expected, "toeplitz: seed has " + std::to_string(bits.size()) +
                                         " bits, expected " + std::to_string(expected));
    return ToeplitzSeed(std::move(bits), input_bits, output_bits);
}

ToeplitzSeed ToeplitzSeed::generate(std::size_t input_bits, std::size_t output_bits, std::uint64_t seed) {
    const std::size_t length = seed_length(input_bits, output_bits);
    Rng rng(seed);
    std::vector<std::uint64_t> words((length + 63) / 64);
    for (auto& w : words) {
        w = rng();
    }
    return ToeplitzSeed(BitVector::from_words(std::move(words), length), input_bits, output_bits);
}

BitVector toeplitz_extract(const BitVector& input, const ToeplitzSeed& seed, std::size_t ell,
                           kernels::Isa isa) {
    require(seed.input_bits() == input.size() && seed.output_bits() == ell,
            "toeplitz: seed dimensions do not match input length and output length");
    const std::size_t k = input.size();
    if (ell == 0 || k == 0) {
        return BitVector(ell);
    }
    const auto product = kernels::gf2_poly_mul(seed.bits().words(), input.words(), isa);
    // Bits [k-1, k-1+ell) of the product.
    std::vector<std::uint64_t> out((ell + 63) / 64, 0);
    const std::size_t offset = k - 1;
    const std::size_t word_shift = offset / 64;
    const unsigned bit_shift = offset % 64;
    for (std::size_t w = 0; w < out.size(); ++w) {
        const std::size_t src = w + word_shift;
        std::uint64_t v = src < product.size() ? product[src] >> bit_shift : 0;
        if (bit_shift != 0 && src + 1 < product.size()) {
            v |= product[src + 1] << (64 - bit_shift);
        }
        out[w] = v;
    }
    return BitVector::from_words(std::move(out), ell);
}

KeyDiagnostics key_diagnostics(const BitVector& key) {
    require(!key.empty(), "key_diagnostics: empty key");
    const auto n = static_cast<double>(key.size());
    const auto ones = static_cast<double>(key.count_ones());
    KeyDiagnostics d;
    d.ones_fraction = ones / n;
    d.monobit_z = (2.0 * ones - n) / std::sqrt(n);
    d.runs = 1;
    for (std::size_t i = 1; i < key.size(); ++i) {
        if (key.get(i) != key.get(i - 1)) {
            ++d.runs;
        }
    }
    return d;
}

}  // namespace qwqrng
