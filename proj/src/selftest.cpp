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

#include "qwqrng/selftest.hpp"

#include <cmath>
#include <sstream>

#include "qwqrng/kernels.hpp"
#include "qwqrng/random.hpp"
#include "qwqrng/rate.hpp"
#include "qwqrng/sampling.hpp"
#include "qwqrng/toeplitz.hpp"
#include "qwqrng/walk.hpp"

namespace qwqrng {

namespace {

template <typename Fn>
SelftestCheck run_check(std::string name, Fn&& body) {
    SelftestCheck check{std::move(name), false, {}};
    try {
        std::ostringstream detail;
        check.passed = body(detail);
        check.detail = detail.str();
    } catch (const std::exception& e) {
        check.passed = false;
        check.detail = std::string("exception: ") + e.what();
    }
    return check;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

std::vector<SelftestCheck> run_selftest(const SelftestHooks& hooks) {
    const auto entropy = hooks.entropy ? hooks.entropy
                                       : std::function<double(unsigned, double)>(entropy_d);
    std::vector<SelftestCheck> checks;

    checks.push_back(run_check("walk-unitarity", [](std::ostream& out) {
        for (std::size_t p : {2, 5, 11, 51}) {
            const double norm = evolve(0, 0, {p, 5000}).norm_squared();
            if (!close(norm, 1.0, 1e-10)) {
                out << "P=" << p << " norm^2=" << norm;
                return false;
            }
        }
        return true;
    }));

    checks.push_back(run_check("walk-gamma-anchors", [](std::ostream& out) {
        const double g0 = gamma({7, 0});
        const double g1 = gamma({7, 1});
        out << "gamma(T=0)=" << g0 << " gamma(T=1)=" << g1;
        return close(g0, 1.0, 1e-12) && close(g1, 0.5, 1e-12);
    }));

    checks.push_back(run_check("kernel-equivalence", [](std::ostream& out) {
        Rng rng(7);
        std::normal_distribution<double> normal;
        for (kernels::Isa isa : kernels::available_isas()) {
            for (std::size_t p : {2, 3, 5, 8, 51}) {
                std::vector<std::complex<double>> in(2 * p);
                for (auto& a : in) {
                    a = {normal(rng), normal(rng)};
                }
                std::vector<std::complex<double>> ref(2 * p);
                std::vector<std::complex<double>> got(2 * p);
                kernels::walk_step(in, ref, p, kernels::Isa::scalar);
                kernels::walk_step(in, got, p, isa);
                if (ref != got) {
                    out << "walk_step mismatch for " << kernels::isa_name(isa) << " P=" << p;
                    return false;
                }
            }
            std::vector<std::uint64_t> a(40);
            std::vector<std::uint64_t> b(40);
            for (std::size_t i = 0; i < a.size(); ++i) {
                a[i] = rng();
                b[i] = rng();
            }
            if (kernels::gf2_poly_mul(a, b, isa) != kernels::gf2_poly_mul(a, b, kernels::Isa::scalar)) {
                out << "gf2 product mismatch for " << kernels::isa_name(isa);
                return false;
            }
        }
        return true;
    }));

    checks.push_back(run_check("entropy-identities", [&](std::ostream& out) {
        const double binary_max = entropy(2, 0.5);
        const double quaternary_max = entropy(4, 0.75);
        const double at_zero = entropy(10, 0.0);
        const double quarter = entropy(2, 0.25);
        out << "h2(0.5)=" << binary_max << " h4(0.75)=" << quaternary_max << " h10(0)=" << at_zero
            << " h2(0.25)=" << quarter;
        return close(binary_max, 1.0, 1e-12) && close(quaternary_max, 1.0, 1e-12) &&
               close(at_zero, 0.0, 1e-12) && close(quarter, 0.8112781244591328, 1e-12);
    }));

    checks.push_back(run_check("sampling-bound-consistency", [](std::ostream& out) {
        for (std::uint64_t n : {100ULL, 10'000ULL, 1'000'000ULL, 10'000'000'000ULL}) {
            for (double eps : {1e-3, 1e-6, 1e-12, 1e-36}) {
                const std::uint64_t m = isqrt(n);
                const double err = classical_sampling_error(n, m, sampling_delta(n, m, eps));
                const double rel = std::abs(err - eps * eps) / (eps * eps);
                if (rel > 1e-9) {
                    out << "N=" << n << " eps=" << eps << " relative residual " << rel;
                    return false;
                }
            }
        }
        return true;
    }));

    checks.push_back(run_check("toeplitz-linearity", [](std::ostream& out) {
        Rng rng(11);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t k = 1 + rng() % 700;
            const std::size_t ell = 1 + rng() % 300;
            BitVector a(k);
            BitVector b(k);
            for (std::size_t i = 0; i < k; ++i) {
                a.set(i, (rng() & 1U) != 0);
                b.set(i, (rng() & 1U) != 0);
            }
            const ToeplitzSeed seed = ToeplitzSeed::generate(k, ell, rng());
            const BitVector lhs = toeplitz_extract(a ^ b, seed, ell);
            const BitVector rhs = toeplitz_extract(a, seed, ell) ^ toeplitz_extract(b, seed, ell);
            if (!(lhs == rhs)) {
                out << "linearity broken for k=" << k << " ell=" << ell;
                return false;
            }
        }
        return true;
    }));

    checks.push_back(run_check("key-length-trivial-walk", [](std::ostream& out) {
        const RateInputs in{SamplingParams::make(1'000'000, 1000, 1e-6), 5, 1.0, 0.0};
        const RateReport r = key_length(in);
        out << "raw_ell=" << r.raw_ell;
        return r.ell == 0 && r.raw_ell < 0.0;
    }));

    return checks;
}

}  // namespace qwqrng
