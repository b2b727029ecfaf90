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

// Data-parallel inner loops. Every kernel has a portable scalar reference
// implementation; x86 builds add AVX2 / PCLMULQDQ variants that are picked at
// runtime from CPUID. Variants must agree bit-for-bit with the scalar path.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qwqrng::kernels {

enum class Isa {
    scalar,
    x86_simd,  // AVX2 for floating point, PCLMULQDQ for GF(2)
};

std::string_view isa_name(Isa isa);

/// Best variant supported by both the build and the running CPU.
/// Setting QWQRNG_ISA=scalar in the environment pins the scalar path.
Isa best_isa();

/// All variants usable on this machine, scalar first.
std::vector<Isa> available_isas();

// ---------------------------------------------------------------------------
// Hadamard walk step on a cycle.
//
// `in` and `out` hold 2*positions amplitudes laid out as index c*P + x.
// out = S (H x I) in, where S moves coin 0 one position up and coin 1 one
// position down, modulo P. The spans must not overlap.

void walk_step(std::span<const std::complex<double>> in,
               std::span<std::complex<double>> out,
               std::size_t positions,
               Isa isa = best_isa());

void walk_step_scalar(const std::complex<double>* in, std::complex<double>* out,
                      std::size_t positions);
#if defined(QWQRNG_HAVE_X86_KERNELS)
void walk_step_avx2(const std::complex<double>* in, std::complex<double>* out,
                    std::size_t positions);
#endif

// ---------------------------------------------------------------------------
// Carry-less (GF(2)[z]) multiplication.
//
// Words are little-endian polynomials: bit j of word i is the coefficient of
// z^(64*i + j).

struct Clmul128 {
    std::uint64_t lo;
    std::uint64_t hi;
};

Clmul128 clmul64_scalar(std::uint64_t a, std::uint64_t b);

/// Schoolbook product: r[0, 2n) = a[0, n) * b[0, n). r is overwritten.
void gf2_mul_basecase(const std::uint64_t* a, const std::uint64_t* b, std::size_t n,
                      std::uint64_t* r, Isa isa = best_isa());

void gf2_mul_basecase_scalar(const std::uint64_t* a, const std::uint64_t* b,
                             std::size_t n, std::uint64_t* r);
#if defined(QWQRNG_HAVE_X86_KERNELS)
void gf2_mul_basecase_pclmul(const std::uint64_t* a, const std::uint64_t* b,
                             std::size_t n, std::uint64_t* r);
#endif

/// Full product of two polynomials of arbitrary word lengths (Karatsuba over
/// the selected basecase). Result has a.size() + b.size() words.
std::vector<std::uint64_t> gf2_poly_mul(std::span<const std::uint64_t> a,
                                        std::span<const std::uint64_t> b,
                                        Isa isa = best_isa());

}  // namespace qwqrng::kernels
