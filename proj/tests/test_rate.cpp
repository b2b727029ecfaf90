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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "oracle/theorem_oracle.hpp"
#include "qwqrng/errors.hpp"
#include "qwqrng/rate.hpp"
#include "qwqrng/walk.hpp"

namespace {

using namespace qwqrng;

double term_sum(const RateReport& r) {
    return r.min_entropy_term - r.entropy_penalty - r.epsilon_term - r.subset_term;
}

class RateTest : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        for (std::size_t p : {5, 11, 51}) gamma_star_[p] = gamma_scan(p, 5000).best_gamma;
    }
    static double gamma_star(std::size_t p) { return gamma_star_.at(p); }
    static inline std::map<std::size_t, double> gamma_star_;
};

TEST_F(RateTest, TrivialWalkGivesNothing) {
    for (double wq : {0.0, 0.1, 0.5}) {
        const RateReport r = key_length({SamplingParams::make(1'000'000, 1000, 1e-6), 7, 1.0, wq});
        EXPECT_EQ(r.ell, 0u);
        EXPECT_EQ(r.min_entropy_term, 0.0);
        EXPECT_LT(r.raw_ell, 0.0);
    }
}

TEST_F(RateTest, SaturatedPenaltyForcesAbort) {
    // w + delta >= 1 - 1/(2P): penalty is n log2(2P), which the min-entropy term cannot beat.
    const auto s = SamplingParams::make(10'000, 100, 1e-3);
    const RateReport r = key_length({s, 5, 0.2, 0.95});
    EXPECT_NEAR(r.entropy_penalty, static_cast<double>(s.remaining()) * std::log2(10.0), 1e-6);
    EXPECT_EQ(r.ell, 0u);
}

TEST_F(RateTest, PositiveRateRegimeMatchesOracle) {
    const double g = gamma_star(51);
    const RateReport r = key_length({SamplingParams::make(1'000'000, 1000, 1e-6), 51, g, 0.05});
    const long double expect = oracle::oracle_raw_ell(1'000'000, 1000, 1e-6L, 51, g, 0.05L);
    EXPECT_GT(r.ell, 100'000u);
    EXPECT_NEAR(r.raw_ell, static_cast<double>(expect), 1.0);
    EXPECT_NEAR(term_sum(r), r.raw_ell, 1e-6);
    EXPECT_NEAR(r.failure_probability, 0.01, 1e-15);
    EXPECT_NEAR(r.security_distance, 5e-6 + 0.04, 1e-15);
}

TEST_F(RateTest, MonotoneInWeightDeltaAndGamma) {
    const auto s = SamplingParams::make(1'000'000, 1000, 1e-6);
    double prev = 1e300;
    for (int i = 0; i <= 100; ++i) {
        const RateReport r = key_length({s, 11, 0.15, i / 100.0});
        EXPECT_LE(r.raw_ell, prev + 1e-6);
        prev = r.raw_ell;
    }
    prev = 1e300;
    for (double eps : {1e-3, 1e-6, 1e-12, 1e-24, 1e-36}) {  // larger delta as eps shrinks
        const RateReport r = key_length({SamplingParams::make(1'000'000, 1000, eps), 11, 0.15, 0.05});
        EXPECT_LE(r.raw_ell, prev);
        prev = r.raw_ell;
    }
    prev = -1e300;
    for (double g = 1.0; g > 0.01; g *= 0.9) {
        const RateReport r = key_length({s, 11, g, 0.05});
        EXPECT_GE(r.raw_ell, prev);
        prev = r.raw_ell;
    }
}

TEST_F(RateTest, ClampingPreservesRawValue) {
    const RateReport r = key_length({SamplingParams::make(100, 10, 1e-6), 5, 0.3, 0.2});
    EXPECT_EQ(r.ell, 0u);
    EXPECT_LT(r.raw_ell, 0.0);
    EXPECT_NEAR(term_sum(r), r.raw_ell, 1e-6);
    EXPECT_TRUE(r.aborted());
}

TEST_F(RateTest, EtaClampedAtZero) {
    const RateReport r = key_length({SamplingParams::make(100, 10, 1e-6), 5, 0.3, 0.9});
    EXPECT_EQ(r.eta_q, 0.0);
}

TEST_F(RateTest, RejectsBadInputs) {
    const auto s = SamplingParams::make(100, 10, 1e-3);
    EXPECT_THROW(key_length({s, 5, 0.0, 0.1}), InvalidArgument);
    EXPECT_THROW(key_length({s, 5, 1.2, 0.1}), InvalidArgument);
    EXPECT_THROW(key_length({s, 5, 0.5, -0.1}), InvalidArgument);
    EXPECT_THROW(key_length({s, 1, 0.5, 0.1}), InvalidArgument);
}

TEST(SampleRule, ParsesAndEvaluates) {
    EXPECT_EQ(SampleRule::parse("sqrt")(1'000'000), 1000u);
    EXPECT_EQ(SampleRule::parse("sqrt")(999'999), 999u);
    EXPECT_EQ(SampleRule::parse("fixed:42")(1'000'000), 42u);
    EXPECT_EQ(SampleRule::parse("fixed:42").to_string(), "fixed:42");
    EXPECT_THROW(SampleRule::parse("fixed:"), InvalidArgument);
    EXPECT_THROW(SampleRule::parse("fixed:0"), InvalidArgument);
    EXPECT_THROW(SampleRule::parse("half"), InvalidArgument);
    EXPECT_EQ(isqrt(1'000'000'000'000ULL), 1'000'000u);
    EXPECT_EQ(isqrt(1'000'000'000'000ULL - 1), 999'999u);
}

TEST(ExpectedTestWeight, ExactAndCompat) {
    EXPECT_NEAR(expected_test_weight(0.15, 5, false), 0.135, 1e-15);
    EXPECT_EQ(expected_test_weight(0.15, 5, true), 0.15);
}

TEST_F(RateTest, CurveIsZeroWhenNoiseSaturates) {
    const auto grid = log_grid(1e4, 1e12, 17);
    for (const auto& pt : rate_curve(5, 0.99, 1e-36, grid, SampleRule::square_root(), gamma_star(5))) {
        EXPECT_EQ(pt.ell, 0u);
        EXPECT_EQ(pt.rate, 0.0);
    }
}

TEST_F(RateTest, CurvesOrderedByPAndNonDecreasingInN) {
    const auto grid = log_grid(1e4, 1e12, 33);
    for (double q : {0.15, 0.20}) {
        const auto c5 = rate_curve(5, q, 1e-36, grid, SampleRule::square_root(), gamma_star(5));
        const auto c11 = rate_curve(11, q, 1e-36, grid, SampleRule::square_root(), gamma_star(11));
        const auto c51 = rate_curve(51, q, 1e-36, grid, SampleRule::square_root(), gamma_star(51));
        for (std::size_t i = 0; i < grid.size(); ++i) {
            EXPECT_GE(c51[i].rate, c11[i].rate);
            EXPECT_GE(c11[i].rate, c5[i].rate);
            EXPECT_EQ(c51[i].sample, isqrt(grid[i]));
            if (i > 0) {
                EXPECT_GE(c5[i].rate, c5[i - 1].rate);
                EXPECT_GE(c11[i].rate, c11[i - 1].rate);
                EXPECT_GE(c51[i].rate, c51[i - 1].rate);
            }
        }
        EXPECT_GT(c5.back().rate, 0.0);
    }
}

TEST_F(RateTest, CurveRejectsUnsortedGrid) {
    const std::vector<std::uint64_t> grid{1000, 100};
    EXPECT_THROW(rate_curve(5, 0.1, 1e-6, grid, SampleRule::square_root(), 0.3), InvalidArgument);
}

TEST(AsymptoticRate, Examples) {
    EXPECT_NEAR(asymptotic_rate(5, 0.0, 0.25), 2.0, 1e-15);
    // Q >= 1 - 1/(2P): penalty saturates at log2(2P).
    EXPECT_NEAR(asymptotic_rate(5, 0.95, 1e-10), std::max(0.0, 0.05 * std::log2(1e10) - std::log2(10.0)), 1e-12);
    EXPECT_EQ(asymptotic_rate(5, 0.95, 0.25), 0.0);
}

TEST_F(RateTest, CurveApproachesAsymptoteFromBelow) {
    const double g = gamma_star(51);
    const double limit = asymptotic_rate(51, 0.15, g);
    EXPECT_NEAR(limit, 2.1169981571766, 1e-9);
    std::vector<std::uint64_t> grid = log_grid(1e8, 1e14, 7);
    const auto curve = rate_curve(51, 0.15, 1e-36, grid, SampleRule::square_root(), g);
    double prev_gap = 1.0;
    for (const auto& pt : curve) {
        const double gap = (limit - pt.rate) / limit;
        EXPECT_GT(gap, 0.0);
        EXPECT_LT(gap, prev_gap);
        prev_gap = gap;
        if (pt.total == 1'000'000'000'000ULL) {
            EXPECT_NEAR(gap, 0.0821, 1e-3);  // end of the default grid
        }
    }
    EXPECT_LT(prev_gap, 0.05);  // N = 1e14
}

TEST(LogGrid, EndpointsAndMonotone) {
    const auto g = log_grid(1e4, 1e12, 33);
    EXPECT_EQ(g.front(), 10'000u);
    EXPECT_EQ(g.back(), 1'000'000'000'000u);
    EXPECT_EQ(g.size(), 33u);
    EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
    EXPECT_THROW(log_grid(0.5, 10, 3), InvalidArgument);
}

}  // namespace
