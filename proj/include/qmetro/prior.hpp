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

#include <utility>

#include "qmetro/state.hpp"

namespace qmetro {

enum class PriorKind { Gaussian, WrappedGaussian, Flat };

/// Prior over the phase. Gaussian lives on the real line; the wrapped
/// Gaussian and the flat prior live on [theta0 - pi, theta0 + pi].
struct Prior {
    PriorKind kind = PriorKind::Gaussian;
    double theta0 = 0.0;
    double sigma = 1.0;
    /// Wrapped Gaussian: image range and numerical normalization.
    int images = 0;
    double norm = 1.0;

    static Prior gaussian(double theta0, double sigma);
    static Prior wrapped_gaussian(double theta0, double sigma);
    static Prior flat(double theta0 = 0.0);

    double density(double theta) const;
    /// Integration window: theta0 +- 10 sigma, or one period.
    std::pair<double, double> support() const;
    /// Closed-form E[e^{ik theta}] (wrapped sum taken to infinity).
    cplx characteristic(int k) const;
};

/// I(p) = integral of p'^2 / p. 1/sigma^2 for the Gaussian, 0 for the flat prior.
double prior_fisher_information(const Prior &prior);

}  // namespace qmetro
