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

#include "qwqrng/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qwqrng::kernels {

namespace {

bool cpu_has_x86_simd() {
#if defined(QWQRNG_HAVE_X86_KERNELS) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("pclmul");
#else
    return false;
#endif
}

Isa detect() {
    if (const char* forced = std::getenv("QWQRNG_ISA"); forced != nullptr) {
        if (std::string(forced) == "scalar") {
            return Isa::scalar;
        }
    }
    return cpu_has_x86_simd() ? Isa::x86_simd : Isa::scalar;
}

void require_available(Isa isa) {
    if (isa == Isa::x86_simd && !cpu_has_x86_simd()) {
        throw std::runtime_error("x86 SIMD kernels are not available on this machine");
    }
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return "scalar";
        case Isa::x86_simd:
            return "avx2+pclmul";
    }
    return "unknown";
}

Isa best_isa() {
    static const Isa chosen = detect();
    return chosen;
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out{Isa::scalar};
    if (cpu_has_x86_simd()) {
        out.push_back(Isa::x86_simd);
    }
    return out;
}

void walk_step(std::span<const std::complex<double>> in,
               std::span<std::complex<double>> out,
               std::size_t positions,
               Isa isa) {
    if (positions < 2 || in.size() != 2 * positions || out.size() != 2 * positions) {
        throw std::invalid_argument("walk_step: buffers must hold 2*P amplitudes with P >= 2");
    }
    require_available(isa);
#if defined(QWQRNG_HAVE_X86_KERNELS)
    if (isa == Isa::x86_simd) {
        walk_step_avx2(in.data(), out.data(), positions);
        return;
    }
#endif
    walk_step_scalar(in.data(), out.data(), positions);
}

void gf2_mul_basecase(const std::uint64_t* a, const std::uint64_t* b, std::size_t n,
                      std::uint64_t* r, Isa isa) {
    require_available(isa);
#if defined(QWQRNG_HAVE_X86_KERNELS)
    if (isa == Isa::x86_simd) {
        gf2_mul_basecase_pclmul(a, b, n, r);
        return;
    }
#endif
    gf2_mul_basecase_scalar(a, b, n, r);
}

}  // namespace qwqrng::kernels
