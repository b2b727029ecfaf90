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

#include <numbers>

#include "qwqrng/kernels.hpp"

namespace qwqrng::kernels {

// One __m256d carries two complex<double> (re, im, re, im). The x = 0 and
// x = P-1 columns wrap around the cycle and go through the scalar tail.
void walk_step_avx2(const std::complex<double>* in, std::complex<double>* out,
                    std::size_t positions) {
    const double s = 1.0 / std::numbers::sqrt2;
    const std::size_t p = positions;
    const auto* heads = reinterpret_cast<const double*>(in);
    const auto* tails = reinterpret_cast<const double*>(in + p);
    auto* out_heads = reinterpret_cast<double*>(out);
    auto* out_tails = reinterpret_cast<double*>(out + p);
    const __m256d scale = _mm256_set1_pd(s);

    auto scalar_column = [&](std::size_t x) {
        const std::complex<double> a = in[x];
        const std::complex<double> b = in[p + x];
        out[x + 1 == p ? 0 : x + 1] = (a + b) * s;
        out[p + (x == 0 ? p - 1 : x - 1)] = (a - b) * s;
    };

    scalar_column(0);
    std::size_t x = 1;
    for (; x + 2 <= p - 1; x += 2) {
        const __m256d a = _mm256_loadu_pd(heads + 2 * x);
        const __m256d b = _mm256_loadu_pd(tails + 2 * x);
        const __m256d sum = _mm256_mul_pd(_mm256_add_pd(a, b), scale);
        const __m256d diff = _mm256_mul_pd(_mm256_sub_pd(a, b), scale);
        _mm256_storeu_pd(out_heads + 2 * (x + 1), sum);
        _mm256_storeu_pd(out_tails + 2 * (x - 1), diff);
    }
    for (; x < p; ++x) {
        scalar_column(x);
    }
}

}  // namespace qwqrng::kernels
