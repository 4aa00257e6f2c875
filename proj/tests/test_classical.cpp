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

TEST(Classical, ClosedFormMatchesGenericEngine) {
    for (int N : {1, 2, 5, 12, 30}) {
        for (double sigma : {0.1, 0.5, 1.0}) {
            const auto st =
                BayesState::make(Prior::gaussian(0.0, sigma), product_probe(N), classical_parallel_povm(N, 0.0));
            const double generic = bayes_round(st).mean_posterior_variance;
            EXPECT_NEAR(classical_parallel_variance(N, sigma) / generic, 1.0, 1e-10) << N << " " << sigma;
        }
    }
}

TEST(Classical, InvariantUnderPriorMean) {
    for (double t0 : {0.4, -1.2}) {
        const auto st =
            BayesState::make(Prior::gaussian(t0, 0.5), product_probe(6), classical_parallel_povm(6, t0));
        EXPECT_NEAR(bayes_round(st).mean_posterior_variance, classical_parallel_variance(6, 0.5), 1e-12);
    }
}

TEST(Classical, TermsAreConsistent) {
    const auto t = classical_parallel_terms(20, 0.3);
    ASSERT_EQ(t.probabilities.size(), 21u);
    double total = 0.0;
    for (double p : t.probabilities) {
        total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-13);
    EXPECT_NEAR(t.variance, classical_parallel_variance(20, 0.3), 1e-15);
}

TEST(Classical, VanTreesOrdering) {
    for (int N : {1, 10, 90, 200}) {
        for (double sigma : {0.1, 0.5}) {
            EXPECT_GE(classical_parallel_variance(N, sigma), van_trees_bound(N, sigma));
            EXPECT_GE(classical_relative_deviation(N, sigma), 0.0);
        }
    }
    EXPECT_DOUBLE_EQ(van_trees_bound(4, 0.5), 1.0 / 8.0);
    EXPECT_DOUBLE_EQ(van_trees_bound_generic(4.0, 4.0), 1.0 / 8.0);
}

TEST(Classical, LargeNStaysFinite) {
    const double v = classical_parallel_variance(kClassicalMaxN, 0.1);
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_GT(v, van_trees_bound(kClassicalMaxN, 0.1));
    EXPECT_THROW(classical_parallel_variance(kClassicalMaxN + 1, 0.1), std::invalid_argument);
    EXPECT_THROW(classical_parallel_variance(4, 2.0), std::invalid_argument);
}
