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

#include <gmp.h>
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle/theorem_oracle.hpp"
#include "qwqrng/errors.hpp"
#include "qwqrng/random.hpp"
#include "qwqrng/sampling.hpp"

namespace {

using namespace qwqrng;

double gmp_log2_binomial(unsigned long n, unsigned long k) {
    mpz_t c;
    mpz_init(c);
    mpz_bin_uiui(c, n, k);
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, c);
    mpz_clear(c);
    return std::log2(mantissa) + static_cast<double>(exponent);
}

TEST(RelativeWeight, Examples) {
    EXPECT_EQ(relative_weight(Word{{0, 0, 0, 0}, 2}), 0.0);
    EXPECT_EQ(relative_weight(Word{{1, 2, 0, 3}, 4}), 0.75);
    EXPECT_EQ(relative_weight(Word{{3, 1, 2}, 4}), 1.0);
    EXPECT_THROW(relative_weight(Word{{}, 2}), InvalidArgument);
}

TEST(Word, ValidateRejectsOutOfAlphabet) {
    EXPECT_THROW((Word{{0, 2}, 2}).validate(), InvalidArgument);
    EXPECT_NO_THROW((Word{{0, 1}, 2}).validate());
}

TEST(Entropy, Examples) {
    EXPECT_NEAR(entropy_d(2, 0.5), 1.0, 1e-15);
    EXPECT_EQ(entropy_d(7, 0.0), 0.0);
    EXPECT_NEAR(entropy_d(4, 0.75), 1.0, 1e-15);
    EXPECT_NEAR(entropy_d(5, 1.0), std::log(4.0) / std::log(5.0), 1e-15);
    EXPECT_THROW(entropy_d(2, -0.1), InvalidArgument);
    EXPECT_THROW(entropy_d(2, 1.1), InvalidArgument);
    EXPECT_THROW(entropy_d(1, 0.5), InvalidArgument);
}

TEST(Entropy, ExtendedClamps) {
    EXPECT_EQ(extended_entropy_d(10, -0.3), 0.0);
    EXPECT_EQ(extended_entropy_d(10, 0.95), 1.0);
    EXPECT_NEAR(extended_entropy_d(2, 0.25), 0.8112781244591328, 1e-15);
    EXPECT_EQ(extended_entropy_d(2, 7.0), 1.0);
}

TEST(Entropy, ConcaveWithMaximumAtOneMinusInverseD) {
    for (unsigned d : {2u, 3u, 4u, 10u, 102u}) {
        const double peak = 1.0 - 1.0 / d;
        EXPECT_NEAR(entropy_d(d, peak), 1.0, 1e-12);
        const int steps = 400;
        for (int i = 1; i < steps; ++i) {
            const double x = static_cast<double>(i) / steps;
            const double h = 1.0 / steps;
            const double second = entropy_d(d, x + h) - 2 * entropy_d(d, x) + entropy_d(d, x - h);
            EXPECT_LE(second, 1e-12) << "d=" << d << " x=" << x;
            EXPECT_LE(entropy_d(d, x), 1.0 + 1e-12);
        }
    }
}

TEST(Entropy, ExtendedIsMonotoneThenFlat) {
    for (unsigned d : {2u, 4u, 102u}) {
        double prev = -1.0;
        for (int i = -50; i <= 250; ++i) {
            const double x = i / 200.0;
            const double v = extended_entropy_d(d, x);
            EXPECT_GE(v, prev - 1e-15);
            if (x > 1.0 - 1.0 / d) EXPECT_EQ(v, 1.0);
            prev = v;
        }
    }
}

TEST(SamplingDelta, Examples) {
    EXPECT_NEAR(sampling_delta(1'000'000, 1000, 1e-6), 0.16829802418574345, 1e-12);
    EXPECT_NEAR(sampling_delta(10'000'000'000ULL, 100'000, 1e-36), 0.04080187175969101, 1e-12);
    // eps -> 1 limit: ln(2/eps^2) -> ln 2.
    EXPECT_NEAR(sampling_delta(100, 50, 1.0 - 1e-12), 0.11891258336872042, 1e-9);
}

TEST(SamplingDelta, RejectsBadParameters) {
    EXPECT_THROW(sampling_delta(100, 51, 0.1), InvalidArgument);
    EXPECT_THROW(sampling_delta(100, 0, 0.1), InvalidArgument);
    EXPECT_THROW(sampling_delta(100, 10, 0.0), InvalidArgument);
    EXPECT_THROW(sampling_delta(100, 10, 1.0), InvalidArgument);
}

TEST(SamplingDelta, DecreasesInMAndN) {
    for (double eps : {1e-6, 1e-36}) {
        double prev = 1e9;
        for (std::uint64_t m = 10; m <= 5000; m += 10) {
            const double d = sampling_delta(10'000, m, eps);
            EXPECT_LT(d, prev);
            prev = d;
        }
        prev = 1e9;
        for (double n = 1e3; n <= 1e15; n *= 3) {
            const auto nn = static_cast<std::uint64_t>(n);
            const double d = sampling_delta(nn, static_cast<std::uint64_t>(std::sqrt(n)), eps);
            EXPECT_LT(d, prev);
            prev = d;
        }
        EXPECT_LT(prev, 0.01);
    }
}

TEST(ClassicalSamplingError, Examples) {
    EXPECT_EQ(classical_sampling_error(200, 100, 0.0), 2.0);
    // 2 exp(-0.01 * 100 * 200 / 202)
    EXPECT_NEAR(classical_sampling_error(200, 100, 0.1), 0.7430798061437461, 1e-14);
    EXPECT_THROW(classical_sampling_error(200, 101, 0.1), InvalidArgument);
    EXPECT_THROW(classical_sampling_error(200, 10, -0.1), InvalidArgument);
}

TEST(ClassicalSamplingError, InvertsSamplingDelta) {
    for (std::uint64_t n : {10ULL, 200ULL, 12345ULL, 1'000'000ULL, 10'000'000'000ULL, 1'000'000'000'000ULL}) {
        for (std::uint64_t m : {std::uint64_t{1}, n / 100 + 1, n / 2}) {
            for (double eps : {0.5, 1e-3, 1e-12, 1e-36, 1e-100}) {
                const double err = classical_sampling_error(n, m, sampling_delta(n, m, eps));
                EXPECT_NEAR(err / (eps * eps), 1.0, 1e-9) << n << " " << m << " " << eps;
            }
        }
    }
}

TEST(GoodSet, Examples) {
    const Word constant{{3, 3, 3, 3, 3, 3}, 4};
    const std::vector<std::size_t> t{0, 4};
    EXPECT_TRUE(good_set_member(constant, t, 0.0));
    const Word q{{1, 1, 0, 0}, 2};
    const std::vector<std::size_t> first_two{0, 1};
    EXPECT_FALSE(good_set_member(q, first_two, 0.5));
    EXPECT_TRUE(good_set_member(q, first_two, 1.0));
}

TEST(GoodSet, RejectsInvalidSubsets) {
    const Word q{{1, 0, 1}, 2};
    EXPECT_THROW(good_set_member(q, std::vector<std::size_t>{}, 0.1), InvalidArgument);
    EXPECT_THROW(good_set_member(q, std::vector<std::size_t>{0, 1, 2}, 0.1), InvalidArgument);
    EXPECT_THROW(good_set_member(q, std::vector<std::size_t>{0, 3}, 0.1), InvalidArgument);
    EXPECT_THROW(good_set_member(q, std::vector<std::size_t>{1, 1}, 0.1), InvalidArgument);
}

TEST(GoodSet, MatchesRecount) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + rng() % 30;
        Word w{std::vector<std::uint32_t>(n), 3};
        for (auto& s : w.symbols) s = static_cast<std::uint32_t>(rng() % 3);
        const std::size_t m = 1 + rng() % (n - 1);
        const auto t64 = sample_subset(n, m, rng);
        const std::vector<std::size_t> t(t64.begin(), t64.end());
        const double delta = (rng() % 100) / 100.0;
        std::vector<std::uint32_t> inside, outside;
        for (std::size_t i = 0; i < n; ++i) {
            (std::find(t.begin(), t.end(), i) != t.end() ? inside : outside).push_back(w.symbols[i]);
        }
        const double diff = std::abs(relative_weight(inside) - relative_weight(outside));
        EXPECT_EQ(good_set_member(w, t, delta), diff <= delta);
    }
}

TEST(Log2Binomial, Examples) {
    EXPECT_NEAR(log2_binomial(4, 2), std::log2(6.0), 1e-12);
    EXPECT_EQ(log2_binomial(10, 0), 0.0);
    EXPECT_EQ(log2_binomial(10, 10), 0.0);
    EXPECT_THROW(log2_binomial(3, 4), InvalidArgument);
}

TEST(Log2Binomial, MatchesBigIntegerOracle) {
    const double exact = gmp_log2_binomial(1'000'000, 1000);
    EXPECT_NEAR(exact, 11401.449698737800, 1e-8);
    EXPECT_NEAR(log2_binomial(1'000'000, 1000) / exact, 1.0, 1e-6);
    for (unsigned long n : {10UL, 57UL, 1000UL, 9999UL}) {
        for (unsigned long k : {1UL, n / 3, n / 2}) {
            EXPECT_NEAR(log2_binomial(n, k), gmp_log2_binomial(n, k), 1e-9 * (1 + gmp_log2_binomial(n, k)));
        }
    }
}

TEST(Log2Binomial, LargeNToTenSignificantDigits) {
    // mpmath, 40 digits: log2 C(1e10, 1e5)
    EXPECT_NEAR(log2_binomial(10'000'000'000ULL, 100'000) / 1805223.1996203619, 1.0, 1e-10);
    const long double sum = oracle::log2_choose_by_sum(10'000'000'000ULL, 100'000);
    EXPECT_NEAR(static_cast<double>(sum) / 1805223.1996203619, 1.0, 1e-10);
}

TEST(SampleSubset, SortedDistinctAndSized) {
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        const auto s = sample_subset(1000, 37, rng);
        ASSERT_EQ(s.size(), 37u);
        EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
        EXPECT_EQ(std::adjacent_find(s.begin(), s.end()), s.end());
        EXPECT_LT(s.back(), 1000u);
    }
}

TEST(MonteCarloSampling, TrivialCases) {
    EXPECT_EQ(monte_carlo_sampling_check(100, 10, 4, 1.0, 500, 1, WordGenerator::uniform), 0.0);
    EXPECT_EQ(monte_carlo_sampling_check(100, 10, 4, 0.0, 500, 1, WordGenerator::constant), 0.0);
}

TEST(MonteCarloSampling, Deterministic) {
    const double a = monte_carlo_sampling_check(200, 20, 2, 0.1, 2000, 9, WordGenerator::blocks);
    const double b = monte_carlo_sampling_check(200, 20, 2, 0.1, 2000, 9, WordGenerator::blocks);
    EXPECT_EQ(a, b);
}

TEST(MonteCarloSampling, StaysUnderBoundForEveryGenerator) {
    for (auto gen : {WordGenerator::uniform, WordGenerator::constant, WordGenerator::half_heavy,
                     WordGenerator::blocks}) {
        for (auto [n, m, delta] : {std::tuple{200ULL, 100ULL, 0.1}, std::tuple{400ULL, 20ULL, 0.3},
                                   std::tuple{1000ULL, 200ULL, 0.12}}) {
            const std::uint64_t trials = 20'000;
            const double rate = monte_carlo_sampling_check(n, m, 4, delta, trials, 77, gen);
            const double bound = std::min(1.0, classical_sampling_error(n, m, delta));
            const double sigma = std::sqrt(bound * (1.0 - bound) / trials);
            EXPECT_LE(rate, bound + 3 * sigma) << "gen=" << static_cast<int>(gen) << " N=" << n;
        }
    }
}

TEST(HammingBall, ExhaustiveCountsRespectEntropyBound) {
    // Binary: count all words by weight.
    for (unsigned n = 1; n <= 14; ++n) {
        std::vector<double> by_weight(n + 1, 0.0);
        for (std::uint32_t w = 0; w < (1u << n); ++w) by_weight[std::popcount(w)] += 1;
        double cumulative = 0.0;
        for (unsigned k = 0; k <= n; ++k) {
            cumulative += by_weight[k];
            const double beta = static_cast<double>(k) / n;
            EXPECT_LE(cumulative, std::pow(2.0, n * extended_entropy_d(2, beta)) * (1 + 1e-12))
                << "n=" << n << " k=" << k;
        }
    }
}

}  // namespace
