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
#include <numbers>

#include "qmetro/estimate.hpp"

using namespace qmetro;

TEST(Local, GhzParityReachesHeisenberg) {
    for (int N = 1; N <= 8; ++N) {
        const double theta = std::numbers::pi / (4.0 * N);
        const double fi =
            fisher_information([N](double t) { return simulated_parity_distribution(N, t); }, theta, 1e-4 / N);
        EXPECT_NEAR(fi / (N * N), 1.0, 1e-6) << N;
    }
}

TEST(Local, SimulationMatchesAnalyticParity) {
    for (int N : {1, 3, 6}) {
        for (double theta : {0.0, 0.2, 1.1}) {
            const auto sim = simulated_parity_distribution(N, theta);
            const auto ana = parity_strategy(N, theta);
            EXPECT_NEAR(sim[0], ana.p_plus, 1e-12);
            EXPECT_NEAR(sim[1], ana.p_minus, 1e-12);
        }
    }
}

TEST(Local, QfiOfStandardProbes) {
    for (int N = 1; N <= 10; ++N) {
        EXPECT_NEAR(qfi_pure(ghz_coefficients(N)), N * N, 1e-12);
        EXPECT_NEAR(qfi_pure(product_probe(N)), N, 1e-12);
        EXPECT_NEAR(qfi_pure(unary_eigenstate(N / 2, N)), 0.0, 1e-14);
    }
    EXPECT_NEAR(qfi_register(ghz_state(4)), 16.0, 1e-12);
    EXPECT_NEAR(qfi_register(StateVector::plus(5)), 5.0, 1e-12);
}

TEST(Local, FisherRejectsBadInput) {
    EXPECT_THROW(fisher_information([](double) { return std::vector<double>{0.5, 0.5}; }, 0.0, 0.0),
                 std::invalid_argument);
}

TEST(NoisyLocal, BayesEqualsDephasedFisherForm) {
    for (int N : {1, 4}) {
        for (double sigma : {0.3, 0.8}) {
            const auto c = noisy_local_equivalence_check(sigma, sine_coefficients(N), qft_povm(N));
            EXPECT_LT(c.residual, 1e-8) << N << " " << sigma;
        }
    }
}

TEST(NoisyLocal, FisherTermFromFiniteDifferences) {
    // Dephased probabilities p_m(theta0) = Tr(E_m Gamma(theta0)) differentiated numerically.
    const int N = 4;
    const double sigma = 0.5;
    const auto probe = sine_coefficients(N);
    const auto povm = qft_povm(N);
    auto probs = [&](double t0) {
        const auto m = gamma_eta(Prior::gaussian(t0, sigma), probe, Integration::Quadrature);
        std::vector<double> p;
        for (int k = 0; k < povm.size(); ++k) {
            p.push_back(std::max(0.0, povm.trace_with(k, m.gamma).real()));
        }
        return p;
    };
    const double fi = fisher_information(probs, 0.0, 1e-4);
    const auto c = noisy_local_equivalence_check(sigma, probe, povm);
    const double s2 = sigma * sigma;
    EXPECT_NEAR(c.local, s2 - s2 * s2 * fi, 1e-7);
}

TEST(NoisyLocal, ZeroWidthIsTrivial) {
    const auto c = noisy_local_equivalence_check(0.0, sine_coefficients(2), qft_povm(2));
    EXPECT_EQ(c.residual, 0.0);
}
