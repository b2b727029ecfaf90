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

#include <numbers>

#include "qwqrng/kernels.hpp"

namespace qwqrng::kernels {

void walk_step_scalar(const std::complex<double>* in, std::complex<double>* out,
                      std::size_t positions) {
    const double s = 1.0 / std::numbers::sqrt2;
    const std::size_t p = positions;
    const std::complex<double>* heads = in;
    const std::complex<double>* tails = in + p;
    std::complex<double>* out_heads = out;
    std::complex<double>* out_tails = out + p;
    for (std::size_t x = 0; x < p; ++x) {
        const std::complex<double> a = heads[x];
        const std::complex<double> b = tails[x];
        out_heads[x + 1 == p ? 0 : x + 1] = (a + b) * s;
        out_tails[x == 0 ? p - 1 : x - 1] = (a - b) * s;
    }
}

}  // namespace qwqrng::kernels
