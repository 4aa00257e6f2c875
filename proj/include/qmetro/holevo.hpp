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

#include "qmetro/bayes.hpp"

namespace qmetro {

struct HolevoVariance {
    double value = 0.0;
    /// |E[e^{i theta}]| below 1e-14.
    bool infinite = false;
};

/// |m|^-2 - 1 for the mean resultant m = E[e^{i theta}].
HolevoVariance holevo_variance(cplx mean_resultant);

/// Weighted samples on the circle; equal weights when `weights` is empty.
HolevoVariance holevo_variance(const std::vector<double> &angles, const std::vector<double> &weights = {});

/// Prior density integrated over its support.
HolevoVariance holevo_variance(const Prior &prior);

struct HolevoRound {
    std::vector<double> probabilities;
    std::vector<HolevoVariance> variances;
    double mean_variance = 0.0;
    bool infinite = false;
};

/// Average posterior Holevo variance. The prior's Fourier coefficients come
/// from adaptive quadrature on the circle (ClosedForm uses them exactly).
/// Throws std::runtime_error when the quadrature misses tol.
HolevoRound holevo_bayes_round(const Prior &prior, const SubspaceState &probe, const Povm &povm,
                               Integration method = Integration::Quadrature, double tol = 1e-8);

}  // namespace qmetro
