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

TEST(Holevo, FromMeanResultant) {
    EXPECT_NEAR(holevo_variance(cplx(0.5, 0.0)).value, 3.0, 1e-15);
    EXPECT_TRUE(holevo_variance(cplx(0.0, 0.0)).infinite);
}

TEST(Holevo, SamplesAndWeights) {
    EXPECT_NEAR(holevo_variance(std::vector<double>{0.3, 0.3}).value, 0.0, 1e-15);
    const auto h = holevo_variance({0.0, std::numbers::pi / 2.0}, {0.5, 0.5});
    EXPECT_NEAR(h.value, 1.0, 1e-14);
    EXPECT_TRUE(holevo_variance(std::vector<double>{0.0, std::numbers::pi}).infinite);
    EXPECT_THROW(holevo_variance(std::vector<double>{0.0, 1.0}, {1.0}), std::invalid_argument);
}

TEST(Holevo, WrappedGaussianPrior) {
    for (double sigma : {0.1, 0.5, 1.0, 2.0}) {
        EXPECT_NEAR(holevo_variance(Prior::wrapped_gaussian(0.4, sigma)).value, std::expm1(sigma * sigma), 1e-9);
    }
    EXPECT_TRUE(holevo_variance(Prior::flat()).infinite);
}

TEST(Holevo, QuadratureMatchesClosedForm) {
    for (int N : {1, 3, 8}) {
        const Prior prior = Prior::wrapped_gaussian(0.0, 0.6);
        const auto a = holevo_bayes_round(prior, sine_coefficients(N), qft_povm(N), Integration::Quadrature, 1e-10);
        const auto b = holevo_bayes_round(prior, sine_coefficients(N), qft_povm(N), Integration::ClosedForm);
        EXPECT_NEAR(a.mean_variance / b.mean_variance, 1.0, 1e-8);
    }
}

TEST(Holevo, PosteriorOracleOnGrid) {
    // Posterior mean resultant per outcome by brute-force grid summation.
    const int N = 3;
    const Prior prior = Prior::wrapped_gaussian(0.0, 0.8);
    const auto probe = sine_coefficients(N);
    const auto povm = qft_povm(N);
    const auto r = holevo_bayes_round(prior, probe, povm);
    const int grid = 4000;
    std::vector<cplx> resultant(static_cast<std::size_t>(povm.size()));
    std::vector<double> mass(static_cast<std::size_t>(povm.size()));
    for (int g = 0; g < grid; ++g) {
        const double t = -std::numbers::pi + 2.0 * std::numbers::pi * (g + 0.5) / grid;
        const auto p = outcome_distribution(probe, povm, t);
        for (std::size_t m = 0; m < p.size(); ++m) {
            const double w = prior.density(t) * p[m];
            mass[m] += w;
            resultant[m] += w * std::polar(1.0, t);
        }
    }
    double mean = 0.0;
    double total = 0.0;
    for (std::size_t m = 0; m < mass.size(); ++m) {
        total += mass[m];
        if (mass[m] > 1e-12 * grid) {
            mean += mass[m] * holevo_variance(resultant[m] / mass[m]).value;
        }
    }
    EXPECT_NEAR(r.mean_variance, mean / total, 1e-8);
}

TEST(Holevo, PosteriorNarrowerThanPrior) {
    const Prior prior = Prior::wrapped_gaussian(0.0, 1.0);
    for (int N : {2, 6}) {
        EXPECT_LT(holevo_bayes_round(prior, sine_coefficients(N), qft_povm(N)).mean_variance,
                  holevo_variance(prior).value);
    }
}
