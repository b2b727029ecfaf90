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

// Naive GF(2) references: the Toeplitz matrix materialized entry by entry,
// and a bit-by-bit polynomial product. Test-only.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qwqrng::oracle {

/// key[i] = XOR_j seed[i - j + k - 1] & input[j]
inline std::vector<std::uint8_t> dense_toeplitz(const std::vector<std::uint8_t>& input,
                                                const std::vector<std::uint8_t>& seed,
                                                std::size_t ell) {
    const std::size_t k = input.size();
    std::vector<std::vector<std::uint8_t>> matrix(ell, std::vector<std::uint8_t>(k));
    for (std::size_t i = 0; i < ell; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            matrix[i][j] = seed[i + k - 1 - j];
        }
    }
    std::vector<std::uint8_t> key(ell, 0);
    for (std::size_t i = 0; i < ell; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            key[i] ^= static_cast<std::uint8_t>(matrix[i][j] & input[j]);
        }
    }
    return key;
}

inline std::vector<std::uint64_t> bitwise_poly_mul(const std::vector<std::uint64_t>& a,
                                                   const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < 64 * a.size(); ++i) {
        if (((a[i / 64] >> (i % 64)) & 1U) == 0) continue;
        for (std::size_t j = 0; j < 64 * b.size(); ++j) {
            if (((b[j / 64] >> (j % 64)) & 1U) != 0) {
                r[(i + j) / 64] ^= std::uint64_t{1} << ((i + j) % 64);
            }
        }
    }
    return r;
}

}  // namespace qwqrng::oracle
