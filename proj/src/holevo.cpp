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

#include "qmetro/holevo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qmetro/quadrature.hpp"

namespace qmetro {

HolevoVariance holevo_variance(cplx mean_resultant) {
    const double r = std::abs(mean_resultant);
    if (r < 1e-14) {
        return {std::numeric_limits<double>::infinity(), true};
    }
    return {std::max(0.0, 1.0 / (r * r) - 1.0), false};
}

HolevoVariance holevo_variance(const std::vector<double> &angles, const std::vector<double> &weights) {
    if (angles.empty() || (!weights.empty() && weights.size() != angles.size())) {
        throw std::invalid_argument("need samples and matching weights");
    }
    cplx m = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        const double w = weights.empty() ? 1.0 : weights[i];
        m += w * std::polar(1.0, angles[i]);
        total += w;
    }
    if (!(total > 0.0)) {
        throw std::invalid_argument("sample weights must have a positive sum");
    }
    return holevo_variance(m / total);
}

HolevoVariance holevo_variance(const Prior &prior) {
    const auto [a, b] = prior.support();
    const auto r = integrate_adaptive(
        [&](double t) {
            const double p = prior.density(t);
            return Eigen::Vector2d(p * std::cos(t), p * std::sin(t));
        },
        a, b, 1e-12, 1e-16);
    if (!r.converged) {
        throw std::runtime_error("prior quadrature did not converge");
    }
    return holevo_variance(cplx(r.value[0], r.value[1]));
}

HolevoRound holevo_bayes_round(const Prior &prior, const SubspaceState &probe, const Povm &povm,
                               Integration method, double tol) {
    const int N = probe.N;
    if (povm.dim != N + 1) {
        throw std::invalid_argument("POVM dimension does not match the probe");
    }
    // c[k + N] = E[e^{ik theta}] for k = -N..N+1.
    std::vector<cplx> c(static_cast<std::size_t>(2 * N + 2));
    if (method == Integration::ClosedForm) {
        for (int k = -N; k <= N + 1; ++k) {
            c[static_cast<std::size_t>(k + N)] = prior.characteristic(k);
        }
    } else {
        const auto [a, b] = prior.support();
        const auto r = integrate_adaptive(
            [&](double t) {
                Eigen::VectorXd v(2 * (2 * N + 2));
                const double p = prior.density(t);
                for (int k = -N; k <= N + 1; ++k) {
                    const std::size_t i = static_cast<std::size_t>(k + N);
                    v[static_cast<Eigen::Index>(2 * i)] = p * std::cos(k * t);
                    v[static_cast<Eigen::Index>(2 * i + 1)] = p * std::sin(k * t);
                }
                return v;
            },
            a, b, tol, 1e-16, 20000);
        if (!r.converged) {
            throw std::runtime_error("Holevo quadrature did not reach the requested tolerance");
        }
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = cplx(r.value[static_cast<Eigen::Index>(2 * i)], r.value[static_cast<Eigen::Index>(2 * i + 1)]);
        }
    }
    Eigen::MatrixXcd g0(N + 1, N + 1);
    Eigen::MatrixXcd g1(N + 1, N + 1);
    for (int n = 0; n <= N; ++n) {
        for (int m = 0; m <= N; ++m) {
            const cplx w = probe.coeffs[n] * std::conj(probe.coeffs[m]);
            g0(n, m) = w * c[static_cast<std::size_t>(n - m + N)];
            g1(n, m) = w * c[static_cast<std::size_t>(n - m + 1 + N)];
        }
    }
    HolevoRound out;
    for (int m = 0; m < povm.size(); ++m) {
        const double p = povm.trace_with(m, g0).real();
        out.probabilities.push_back(p);
        if (p < kOutcomePruning) {
            out.variances.push_back({0.0, false});
            continue;
        }
        const HolevoVariance v = holevo_variance(povm.trace_with(m, g1) / p);
        out.variances.push_back(v);
        if (v.infinite) {
            out.infinite = true;
        } else {
            out.mean_variance += p * v.value;
        }
    }
    if (out.infinite) {
        out.mean_variance = std::numeric_limits<double>::infinity();
    }
    return out;
}

}  // namespace qmetro
