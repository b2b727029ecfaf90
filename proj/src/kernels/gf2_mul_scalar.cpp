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

#include <algorithm>

#include "qwqrng/kernels.hpp"

namespace qwqrng::kernels {

Clmul128 clmul64_scalar(std::uint64_t a, std::uint64_t b) {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    for (unsigned i = 0; i < 64; ++i) {
        const std::uint64_t mask = 0 - ((b >> i) & 1U);
        lo ^= (a << i) & mask;
        if (i != 0) {
            hi ^= (a >> (64 - i)) & mask;
        }
    }
    return {lo, hi};
}

void gf2_mul_basecase_scalar(const std::uint64_t* a, const std::uint64_t* b,
                             std::size_t n, std::uint64_t* r) {
    std::fill(r, r + 2 * n, std::uint64_t{0});
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Clmul128 p = clmul64_scalar(a[i], b[j]);
            r[i + j] ^= p.lo;
            r[i + j + 1] ^= p.hi;
        }
    }
}

}  // namespace qwqrng::kernels
