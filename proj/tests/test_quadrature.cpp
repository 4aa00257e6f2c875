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

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "qmetro/prior.hpp"
#include "qmetro/quadrature.hpp"

using namespace qmetro;

namespace {

double boost_gk(const std::function<double(double)> &f, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 12, 1e-13);
}

}  // namespace

TEST(Quadrature, MatchesBoostOracle) {
    const std::vector<std::function<double(double)>> fs = {
        [](double x) { return std::exp(-x * x) * std::cos(3.0 * x); },
        [](double x) { return 1.0 / (1.0 + 100.0 * x * x); },
        [](double x) { return std::sin(40.0 * x) * x * x; },
    };
    for (const auto &f : fs) {
        EXPECT_NEAR(integrate(f, -2.0, 1.5, 1e-12), boost_gk(f, -2.0, 1.5), 1e-10);
    }
}

TEST(Quadrature, InteriorKink) {
    const double exact = 2.0 / 3.0 * (std::pow(2.0, 1.5) + std::pow(1.5, 1.5));
    EXPECT_NEAR(integrate([](double x) { return std::sqrt(std::abs(x)); }, -2.0, 1.5, 1e-12), exact, 1e-11);
}

TEST(Quadrature, VectorIntegrandSharesIntervals) {
    const auto r = integrate_adaptive(
        [](double x) {
            Eigen::VectorXd v(3);
            v << 1.0, x, std::exp(x);
            return v;
        },
        0.0, 1.0, 1e-12);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value[0], 1.0, 1e-14);
    EXPECT_NEAR(r.value[1], 0.5, 1e-14);
    EXPECT_NEAR(r.value[2], std::exp(1.0) - 1.0, 1e-13);
    EXPECT_GT(r.evaluations, 0);
}

TEST(Quadrature, ReportsNonConvergence) {
    const auto r = integrate_adaptive(
        [](double x) { return Eigen::VectorXd::Constant(1, std::sin(1.0 / x)); }, 1e-9, 1.0, 1e-14, 0.0, 5);
    EXPECT_FALSE(r.converged);
    EXPECT_THROW(integrate([](double x) { return std::sin(1.0 / x); }, 1e-9, 1.0, 1e-15, 0.0), std::runtime_error);
}

TEST(Prior, DensitiesNormalize) {
    for (const auto &p : {Prior::gaussian(0.3, 0.4), Prior::wrapped_gaussian(0.0, 1.5), Prior::wrapped_gaussian(1.0, 4.0),
                          Prior::flat()}) {
        const auto [a, b] = p.support();
        EXPECT_NEAR(integrate([&](double t) { return p.density(t); }, a, b, 1e-12), 1.0, 1e-10);
    }
}

TEST(Prior, CharacteristicFunction) {
    const auto g = Prior::gaussian(0.2, 0.7);
    for (int k = 0; k <= 3; ++k) {
        const cplx ref = std::polar(std::exp(-0.5 * k * k * 0.49), 0.2 * k);
        EXPECT_NEAR(std::abs(g.characteristic(k) - ref), 0.0, 1e-14);
    }
    const auto w = Prior::wrapped_gaussian(0.0, 0.9);
    const auto [a, b] = w.support();
    const double c2 = integrate([&](double t) { return w.density(t) * std::cos(2.0 * t); }, a, b, 1e-12);
    EXPECT_NEAR(w.characteristic(2).real(), c2, 1e-10);
    EXPECT_NEAR(std::abs(Prior::flat().characteristic(1)), 0.0, 1e-15);
}

TEST(Prior, FisherInformation) {
    EXPECT_DOUBLE_EQ(prior_fisher_information(Prior::gaussian(0.0, 0.5)), 4.0);
    EXPECT_EQ(prior_fisher_information(Prior::flat()), 0.0);
    // Narrow wrapped Gaussian behaves like the unwrapped one.
    EXPECT_NEAR(prior_fisher_information(Prior::wrapped_gaussian(0.0, 0.3)), 1.0 / 0.09, 1e-6);
    EXPECT_LT(prior_fisher_information(Prior::wrapped_gaussian(0.0, 2.0)), 0.25);
}

TEST(Prior, RejectsBadWidth) {
    EXPECT_THROW(Prior::gaussian(0.0, 0.0), std::invalid_argument);
    EXPECT_THROW(Prior::wrapped_gaussian(0.0, -1.0), std::invalid_argument);
}
