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

#include "qmetro/bayes.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qmetro/quadrature.hpp"

namespace qmetro {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

/// E[(theta - theta0)^j e^{i d theta}] for j = 0, 1, 2 and d = 0..N.
struct Kernels {
    Eigen::VectorXcd k0, k1, k2;
};

Kernels gaussian_kernels(const Prior &prior, int N) {
    Kernels k{Eigen::VectorXcd(N + 1), Eigen::VectorXcd(N + 1), Eigen::VectorXcd(N + 1)};
    const double s2 = prior.sigma * prior.sigma;
    for (int d = 0; d <= N; ++d) {
        const cplx base = std::polar(std::exp(-0.5 * d * d * s2), d * prior.theta0);
        k.k0[d] = base;
        k.k1[d] = base * cplx(0.0, d * s2);
        k.k2[d] = base * (s2 - d * d * s2 * s2);
    }
    return k;
}

Kernels quadrature_kernels(const Prior &prior, int N) {
    const auto [a, b] = prior.support();
    const auto r = integrate_adaptive(
        [&](double theta) {
            Eigen::VectorXd v(6 * (N + 1));
            const double p = prior.density(theta);
            const double x = theta - prior.theta0;
            for (int d = 0; d <= N; ++d) {
                const double c = std::cos(d * theta) * p;
                const double s = std::sin(d * theta) * p;
                v.segment(6 * d, 6) << c, s, x * c, x * s, x * x * c, x * x * s;
            }
            return v;
        },
        a, b, 1e-12, 1e-16, 20000);
    if (!r.converged) {
        throw std::runtime_error("prior moment quadrature did not converge");
    }
    Kernels k{Eigen::VectorXcd(N + 1), Eigen::VectorXcd(N + 1), Eigen::VectorXcd(N + 1)};
    for (int d = 0; d <= N; ++d) {
        k.k0[d] = cplx(r.value[6 * d], r.value[6 * d + 1]);
        k.k1[d] = cplx(r.value[6 * d + 2], r.value[6 * d + 3]);
        k.k2[d] = cplx(r.value[6 * d + 4], r.value[6 * d + 5]);
    }
    return k;
}

Eigen::MatrixXcd assemble(const Eigen::VectorXcd &psi, const Eigen::VectorXcd &kernel) {
    const Eigen::Index n = psi.size();
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const cplx k = i >= j ? kernel[i - j] : std::conj(kernel[j - i]);
            m(i, j) = psi[i] * std::conj(psi[j]) * k;
        }
    }
    return m;
}

void check_probe(const SubspaceState &probe) {
    if (probe.N < 1 || probe.coeffs.size() != probe.N + 1) {
        throw std::invalid_argument("probe must have N + 1 coefficients, N >= 1");
    }
    if (std::abs(probe.coeffs.squaredNorm() - 1.0) > 1e-10) {
        throw std::invalid_argument("probe is not normalized");
    }
}

void check_povm(const SubspaceState &probe, const Povm &povm) {
    if (povm.dim != probe.N + 1) {
        throw std::invalid_argument("POVM dimension does not match the probe");
    }
}

}  // namespace

PriorMoments gamma_eta(const Prior &prior, const SubspaceState &probe, Integration method) {
    check_probe(probe);
    if (method == Integration::ClosedForm && prior.kind != PriorKind::Gaussian) {
        throw std::invalid_argument("closed-form moments exist for the Gaussian prior only");
    }
    const bool closed = method == Integration::ClosedForm ||
                        (method == Integration::Auto && prior.kind == PriorKind::Gaussian);
    const Kernels k = closed ? gaussian_kernels(prior, probe.N) : quadrature_kernels(prior, probe.N);
    PriorMoments m;
    m.gamma = assemble(probe.coeffs, k.k0);
    m.eta_centered = assemble(probe.coeffs, k.k1);
    m.zeta_centered = assemble(probe.coeffs, k.k2);
    m.eta = m.eta_centered + prior.theta0 * m.gamma;
    m.prior_variance = k.k2[0].real();
    return m;
}

BayesState BayesState::make(const Prior &prior, const SubspaceState &probe, const Povm &povm, Integration method) {
    check_probe(probe);
    check_povm(probe, povm);
    return {prior, probe, povm, gamma_eta(prior, probe, method)};
}

EstimationResult bayes_round(const BayesState &state) {
    EstimationResult r;
    r.prior_variance = state.moments.prior_variance;
    r.wide_prior_warning = state.prior.kind == PriorKind::Gaussian && state.prior.sigma > 1.0;
    double explained = 0.0;
    for (int m = 0; m < state.povm.size(); ++m) {
        const double p = state.povm.trace_with(m, state.moments.gamma).real();
        r.probabilities.push_back(p);
        if (p < kOutcomePruning) {
            r.estimates.push_back(kNan);
            r.posterior_variances.push_back(kNan);
            continue;
        }
        const double g = state.povm.trace_with(m, state.moments.eta_centered).real();
        const double z = state.povm.trace_with(m, state.moments.zeta_centered).real();
        r.estimates.push_back(state.prior.theta0 + g / p);
        r.posterior_variances.push_back(std::max(0.0, z / p - (g / p) * (g / p)));
        explained += g * g / p;
    }
    r.mean_posterior_variance = std::max(0.0, r.prior_variance - explained);
    return r;
}

std::vector<double> outcome_distribution(const SubspaceState &probe, const Povm &povm, double theta) {
    check_povm(probe, povm);
    Eigen::VectorXcd phi(probe.N + 1);
    for (int n = 0; n <= probe.N; ++n) {
        phi[n] = probe.coeffs[n] * std::polar(1.0, n * theta);
    }
    std::vector<double> p;
    for (int m = 0; m < povm.size(); ++m) {
        p.push_back((povm.factors[static_cast<std::size_t>(m)].adjoint() * phi).squaredNorm());
    }
    return p;
}

EstimationResult bayes_round_direct(const Prior &prior, const SubspaceState &probe, const Povm &povm,
                                    double rel_tol) {
    check_probe(probe);
    check_povm(probe, povm);
    const int M = povm.size();
    const auto [a, b] = prior.support();
    const auto q = integrate_adaptive(
        [&](double theta) {
            Eigen::VectorXd v(3 * M + 1);
            const double w = prior.density(theta);
            const double x = theta - prior.theta0;
            const auto p = outcome_distribution(probe, povm, theta);
            for (int m = 0; m < M; ++m) {
                const double wp = w * p[static_cast<std::size_t>(m)];
                v.segment(3 * m, 3) << wp, x * wp, x * x * wp;
            }
            v[3 * M] = x * x * w;
            return v;
        },
        a, b, rel_tol, 1e-17, 20000);
    if (!q.converged) {
        throw std::runtime_error("posterior quadrature did not converge");
    }
    EstimationResult r;
    r.prior_variance = q.value[3 * M];
    r.wide_prior_warning = prior.kind == PriorKind::Gaussian && prior.sigma > 1.0;
    double explained = 0.0;
    for (int m = 0; m < M; ++m) {
        const double p = q.value[3 * m];
        const double g = q.value[3 * m + 1];
        const double z = q.value[3 * m + 2];
        r.probabilities.push_back(p);
        if (p < kOutcomePruning) {
            r.estimates.push_back(kNan);
            r.posterior_variances.push_back(kNan);
            continue;
        }
        r.estimates.push_back(prior.theta0 + g / p);
        r.posterior_variances.push_back(std::max(0.0, z / p - (g / p) * (g / p)));
        explained += g * g / p;
    }
    r.mean_posterior_variance = std::max(0.0, r.prior_variance - explained);
    return r;
}

double mse_limit(double sigma) {
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("MSE limit needs sigma > 0");
    }
    // Terms beyond e^{-(2 pi k)^2 / 2 sigma^2} < e^{-745} underflow.
    const int kmax = static_cast<int>(std::ceil(sigma * std::sqrt(2.0 * 745.0) / (2.0 * std::numbers::pi))) + 1;
    double z = 1.0;
    double s = 0.0;
    for (int k = 1; k <= kmax; ++k) {
        const double x = 2.0 * std::numbers::pi * k;
        const double w = std::exp(-x * x / (2.0 * sigma * sigma));
        z += 2.0 * w;
        s += 2.0 * w * x * x;
    }
    return s / z / (sigma * sigma);
}

std::vector<double> mse_limit_curve(const std::vector<double> &sigmas) {
    std::vector<double> out;
    out.reserve(sigmas.size());
    for (double s : sigmas) {
        out.push_back(mse_limit(s));
    }
    return out;
}

}  // namespace qmetro
