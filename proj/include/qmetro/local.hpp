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

#include <functional>
#include <vector>

#include "qmetro/bayes.hpp"

namespace qmetro {

using DistributionFn = std::function<std::vector<double>(double)>;

/// Sum over outcomes of (dp/dtheta)^2 / p by central differences; outcomes
/// with p <= 1e-14 are skipped. Throws on probabilities below -1e-12.
double fisher_information(const DistributionFn &probs, double theta, double step);

/// 4 Var(n) over |psi_n|^2.
double qfi_pure(const SubspaceState &probe);

/// 4 Var(H) with H the number of qubits in |1>, on a full register.
double qfi_register(const StateVector &state);

struct ParityOutcome {
    double p_plus = 0.0;
    double p_minus = 0.0;
    /// Variance of the single-shot estimator after reparametrization: 1/N^2.
    double variance = 0.0;
};

/// GHZ probe, X-parity readout: p(+|theta) = cos^2(N theta / 2).
ParityOutcome parity_strategy(int N, double theta);

/// Same distribution from the state-vector simulator: GHZ, Rz(theta) on
/// every qubit, H on every qubit, parity of the readout.
std::vector<double> simulated_parity_distribution(int N, double theta);

struct NoisyLocalCheck {
    double bayes = 0.0;
    double local = 0.0;
    double residual = 0.0;
};

/// Compares the Bayesian average variance with sigma^2 - sigma^4 F, F the
/// Fisher information of the dephased probe at theta0.
NoisyLocalCheck noisy_local_equivalence_check(double sigma, const SubspaceState &probe, const Povm &povm,
                                              double theta0 = 0.0);

}  // namespace qmetro
