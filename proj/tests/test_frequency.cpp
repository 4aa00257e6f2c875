// Copyright 2026 The qmetro Authors
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

#include "qmetro/estimate.hpp"

using namespace qmetro;

TEST(Frequency, EquivalentToPhaseWithScaledPrior) {
    // tau is the dimensionless t delta, so theta = omega t has prior width tau and
    // V_omega / delta^2 = V_theta(tau) / tau^2.
    for (int N : {1, 4, 9}) {
        for (double tau : {0.3, 1.0, 2.5}) {
            const double delta = 0.7;
            const auto f = frequency_round(delta, tau, sine_coefficients(N), qft_povm(N));
            const auto ph =
                bayes_round(BayesState::make(Prior::gaussian(0.0, tau), sine_coefficients(N), qft_povm(N)));
            EXPECT_NEAR(f.v_over_delta2 / (ph.mean_posterior_variance / (tau * tau)), 1.0, 1e-10);
            EXPECT_NEAR(f.v_over_delta2, f.variance / (delta * delta), 1e-15);
        }
    }
}

TEST(Frequency, ModelMatchesFullRound) {
    const FrequencyModel m(sine_coefficients(6), qft_povm(6));
    for (double tau : {0.1, 0.8, 3.0}) {
        EXPECT_NEAR(m.v_over_delta2(tau), frequency_round(1.0, tau, sine_coefficients(6), qft_povm(6)).v_over_delta2,
                    1e-12);
    }
}

TEST(Frequency, ClassicalRoundMatchesGenericEngine) {
    const int N = 7;
    const double tau = 0.9;
    const FrequencyModel m(product_probe(N), classical_parallel_povm(N, 0.0));
    EXPECT_NEAR(classical_frequency_round(N, tau) / m.v_over_delta2(tau), 1.0, 1e-10);
}

TEST(Frequency, GoldenSectionFindsKnownMinimum) {
    const auto r = optimize_tau([](double t) { return (t - 1.7) * (t - 1.7) + 0.25; });
    EXPECT_NEAR(r.tau, 1.7, 1e-5);
    EXPECT_NEAR(r.v_over_delta2, 0.25, 1e-10);
    EXPECT_FALSE(r.boundary);
    const auto edge = optimize_tau([](double t) { return -t; });
    EXPECT_TRUE(edge.boundary);
}

TEST(Frequency, OptimumIsLocalMinimum) {
    for (int N : {2, 8, 20}) {
        const auto probe = sine_coefficients(N);
        const auto povm = qft_povm(N);
        const FrequencyModel m(probe, povm);
        const auto opt = optimize_tau(probe, povm);
        EXPECT_FALSE(opt.boundary);
        EXPECT_LE(opt.v_over_delta2, m.v_over_delta2(opt.tau * 1.01) + 1e-14);
        EXPECT_LE(opt.v_over_delta2, m.v_over_delta2(opt.tau * 0.99) + 1e-14);
        EXPECT_LT(opt.v_over_delta2, 1.0);
    }
}

TEST(Frequency, QuantumBeatsClassicalAtOptimum) {
    for (int N : {4, 16}) {
        EXPECT_LT(optimize_tau(sine_coefficients(N), qft_povm(N)).v_over_delta2, optimize_tau_classical(N).v_over_delta2);
    }
}
