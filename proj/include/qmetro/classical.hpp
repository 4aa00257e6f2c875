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

#pragma once

#include <vector>

namespace qmetro {

inline constexpr int kClassicalMaxN = 256;

struct ClassicalParallel {
    /// Tr(E_m Gamma) and gamma_m for m = number of "-" outcomes.
    std::vector<double> probabilities;
    std::vector<double> gammas;
    double variance = 0.0;
};

/// Average posterior variance of the optimal parallel product strategy under
/// a Gaussian prior. 1 <= N <= 256, 0 < sigma <= 1.5.
double classical_parallel_variance(int N, double sigma);

/// Same closed form without the sigma <= 1.5 guard (sigma <= 50), used for
/// interrogation-time scans.
ClassicalParallel classical_parallel_terms(int N, double sigma);

/// sigma^2 / (1 + N sigma^2).
double van_trees_bound(int N, double sigma);

/// 1 / (prior Fisher information + Fisher information of the strategy).
double van_trees_bound_generic(double prior_fisher, double fisher);

/// (V - bound) / bound for the parallel classical strategy.
double classical_relative_deviation(int N, double sigma);

}  // namespace qmetro
