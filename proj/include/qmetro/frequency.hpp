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

#include "qmetro/povm.hpp"
#include "qmetro/probes.hpp"

namespace qmetro {

struct FrequencyRound {
    /// Average posterior variance in units of Delta^2.
    double v_over_delta2 = 0.0;
    double variance = 0.0;
};

/// Outcome traces against Toeplitz-weighted probe matrices,
/// Tr(E_m (psi psi^dagger o K)) = sum_d S_m(d) K(d), with S_m precomputed.
class FrequencyModel {
public:
    FrequencyModel(const SubspaceState &probe, const Povm &povm);
    /// Average posterior variance in units of Delta^2 at interrogation tau.
    double v_over_delta2(double tau) const;
    int N() const { return N_; }

private:
    int N_ = 0;
    /// s_[m][d] for d = 0..N; negative d follows by conjugation.
    std::vector<Eigen::VectorXcd> s_;
};

/// Gaussian frequency prior of width Delta centred at 0, interrogation
/// tau = t Delta.
FrequencyRound frequency_round(double delta, double tau, const SubspaceState &probe, const Povm &povm);

/// Parallel product strategy in units of Delta^2.
double classical_frequency_round(int N, double tau);

struct TauOptimum {
    double tau = 0.0;
    double v_over_delta2 = 0.0;
    /// Best grid point sat at an end of the window.
    bool boundary = false;
    int evaluations = 0;
};

/// Log grid on [lo, hi] followed by golden-section refinement to tol around
/// the best grid point.
TauOptimum optimize_tau(const std::function<double(double)> &objective, double lo = 1e-3, double hi = 20.0,
                        int grid = 60, double tol = 1e-6);

TauOptimum optimize_tau(const SubspaceState &probe, const Povm &povm);
TauOptimum optimize_tau_classical(int N);

}  // namespace qmetro
