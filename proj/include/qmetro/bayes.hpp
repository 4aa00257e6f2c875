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

#include "qmetro/povm.hpp"
#include "qmetro/prior.hpp"
#include "qmetro/probes.hpp"

namespace qmetro {

enum class Integration { Auto, ClosedForm, Quadrature };

/// Prior averages over the encoded probe rho(theta)_{nm} = psi_n psi_m^* e^{i(n-m) theta}:
/// gamma = E[rho], eta = E[theta rho], and the moments about theta0.
struct PriorMoments {
    Eigen::MatrixXcd gamma;
    Eigen::MatrixXcd eta;
    Eigen::MatrixXcd eta_centered;
    Eigen::MatrixXcd zeta_centered;
    /// E[(theta - theta0)^2].
    double prior_variance = 0.0;
};

/// Closed form for the Gaussian prior (Auto), adaptive quadrature otherwise.
PriorMoments gamma_eta(const Prior &prior, const SubspaceState &probe, Integration method = Integration::Auto);

struct BayesState {
    Prior prior;
    SubspaceState probe;
    Povm povm;
    PriorMoments moments;

    static BayesState make(const Prior &prior, const SubspaceState &probe, const Povm &povm,
                           Integration method = Integration::Auto);
};

struct EstimationResult {
    std::vector<double> probabilities;
    /// Posterior means; nan for outcomes below the pruning threshold.
    std::vector<double> estimates;
    std::vector<double> posterior_variances;
    double mean_posterior_variance = 0.0;
    double prior_variance = 0.0;
    /// Set when a Gaussian prior is wider than 1, where the MSE loses meaning on a circle.
    bool wide_prior_warning = false;
};

inline constexpr double kOutcomePruning = 1e-14;

/// Posterior-mean estimator and MSE: mean = theta0 + Tr(E eta_c)/p,
/// average variance = prior variance - sum gamma_m^2 / p_m.
EstimationResult bayes_round(const BayesState &state);

/// Independent route: integrates p(theta) p(m|theta) theta^j pointwise.
EstimationResult bayes_round_direct(const Prior &prior, const SubspaceState &probe, const Povm &povm,
                                    double rel_tol = 1e-11);

/// p(m|theta) = Tr(E_m rho(theta)).
std::vector<double> outcome_distribution(const SubspaceState &probe, const Povm &povm, double theta);

/// Minimal MSE over all strategies for a Gaussian prior, divided by sigma^2
/// (posterior collapsed onto the comb theta0 + 2 pi k).
double mse_limit(double sigma);
std::vector<double> mse_limit_curve(const std::vector<double> &sigmas);

}  // namespace qmetro
