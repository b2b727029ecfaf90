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
#include <stdexcept>

#include "qwqrng/kernels.hpp"

namespace qwqrng::kernels {

namespace {

constexpr std::size_t kKaratsubaCutoff = 32;

std::size_t scratch_words(std::size_t n) {
    // Each level needs 6 * ceil(n/2) words for the two operand sums and the
    // middle product, then recurses on ceil(n/2).
    std::size_t total = 0;
    while (n > kKaratsubaCutoff) {
        const std::size_t l = n - n / 2;
        total += 6 * l;
        n = l;
    }
    return total + 1;
}

// r[0, 2n) = a[0, n) * b[0, n)
void karatsuba(const std::uint64_t* a, const std::uint64_t* b, std::size_t n,
               std::uint64_t* r, std::uint64_t* scratch, Isa isa) {
    if (n <= kKaratsubaCutoff) {
        gf2_mul_basecase(a, b, n, r, isa);
        return;
    }
    const std::size_t h = n / 2;
    const std::size_t l = n - h;  // l >= h
    std::uint64_t* sum_a = scratch;
    std::uint64_t* sum_b = sum_a + l;
    std::uint64_t* mid = sum_b + l;  // 2l words
    std::uint64_t* rest = mid + 2 * l;

    for (std::size_t i = 0; i < l; ++i) {
        sum_a[i] = a[h + i] ^ (i < h ? a[i] : 0);
        sum_b[i] = b[h + i] ^ (i < h ? b[i] : 0);
    }
    karatsuba(a, b, h, r, rest, isa);                    // low:  r[0, 2h)
    karatsuba(a + h, b + h, l, r + 2 * h, rest, isa);    // high: r[2h, 2h + 2l)
    karatsuba(sum_a, sum_b, l, mid, rest, isa);

    for (std::size_t i = 0; i < 2 * h; ++i) {
        mid[i] ^= r[i];
    }
    for (std::size_t i = 0; i < 2 * l; ++i) {
        mid[i] ^= r[2 * h + i];
    }
    for (std::size_t i = 0; i < 2 * l; ++i) {
        r[h + i] ^= mid[i];
    }
}

}  // namespace

std::vector<std::uint64_t> gf2_poly_mul(std::span<const std::uint64_t> a,
                                        std::span<const std::uint64_t> b,
                                        Isa isa) {
    if (a.empty() || b.empty()) {
        return std::vector<std::uint64_t>(a.size() + b.size(), 0);
    }
    const std::size_t n = std::max(a.size(), b.size());
    std::vector<std::uint64_t> pa(a.begin(), a.end());
    std::vector<std::uint64_t> pb(b.begin(), b.end());
    pa.resize(n, 0);
    pb.resize(n, 0);
    std::vector<std::uint64_t> product(2 * n, 0);
    std::vector<std::uint64_t> scratch(scratch_words(n), 0);
    karatsuba(pa.data(), pb.data(), n, product.data(), scratch.data(), isa);
    product.resize(a.size() + b.size());
    return product;
}

}  // namespace qwqrng::kernels
