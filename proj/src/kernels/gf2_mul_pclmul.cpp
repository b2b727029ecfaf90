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

#include <immintrin.h>

#include <algorithm>

#include "qwqrng/kernels.hpp"

namespace qwqrng::kernels {

void gf2_mul_basecase_pclmul(const std::uint64_t* a, const std::uint64_t* b,
                             std::size_t n, std::uint64_t* r) {
    std::fill(r, r + 2 * n, std::uint64_t{0});
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) {
            continue;
        }
        const __m128i va = _mm_cvtsi64_si128(static_cast<long long>(a[i]));
        // Two partial products per iteration: b[j] in the low lane, b[j+1] in
        // the high lane of the same 128-bit load.
        __m128i carry = _mm_setzero_si128();
        std::size_t j = 0;
        for (; j + 2 <= n; j += 2) {
            const __m128i vb = _mm_loadu_si128(reinterpret_cast<const __m128i*>(b + j));
            const __m128i p0 = _mm_clmulepi64_si128(va, vb, 0x00);
            const __m128i p1 = _mm_clmulepi64_si128(va, vb, 0x10);
            // p0 covers words j, j+1; p1 covers words j+1, j+2.
            const __m128i lo = _mm_xor_si128(p0, _mm_slli_si128(p1, 8));
            const __m128i acc = _mm_xor_si128(lo, carry);
            carry = _mm_srli_si128(p1, 8);
            auto* dst = reinterpret_cast<__m128i*>(r + i + j);
            _mm_storeu_si128(dst, _mm_xor_si128(_mm_loadu_si128(dst), acc));
        }
        std::uint64_t pending = static_cast<std::uint64_t>(_mm_cvtsi128_si64(carry));
        for (; j < n; ++j) {
            const __m128i p = _mm_clmulepi64_si128(
                va, _mm_cvtsi64_si128(static_cast<long long>(b[j])), 0x00);
            r[i + j] ^= static_cast<std::uint64_t>(_mm_cvtsi128_si64(p)) ^ pending;
            pending = static_cast<std::uint64_t>(_mm_extract_epi64(p, 1));
        }
        r[i + j] ^= pending;
    }
}

}  // namespace qwqrng::kernels
