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

#include "qmetro/local.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qmetro/circuit.hpp"

namespace qmetro {

double fisher_information(const DistributionFn &probs, double theta, double step) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("finite-difference step must be positive");
    }
    const auto p0 = probs(theta);
    const auto pp = probs(theta + step);
    const auto pm = probs(theta - step);
    if (pp.size() != p0.size() || pm.size() != p0.size()) {
        throw std::invalid_argument("distribution changed size between evaluations");
    }
    double fi = 0.0;
    for (std::size_t m = 0; m < p0.size(); ++m) {
        for (double v : {p0[m], pp[m], pm[m]}) {
            if (v < -1e-12) {
                throw std::invalid_argument("negative outcome probability");
            }
        }
        if (p0[m] <= 1e-14) {
            continue;
        }
        const double d = (pp[m] - pm[m]) / (2.0 * step);
        fi += d * d / p0[m];
    }
    return fi;
}

double qfi_pure(const SubspaceState &probe) {
    double m1 = 0.0;
    double m2 = 0.0;
    double norm = 0.0;
    for (int n = 0; n <= probe.N; ++n) {
        const double w = std::norm(probe.coeffs[n]);
        norm += w;
        m1 += n * w;
        m2 += static_cast<double>(n) * n * w;
    }
    if (std::abs(norm - 1.0) > 1e-10) {
        throw std::invalid_argument("probe is not normalized");
    }
    return 4.0 * (m2 - m1 * m1);
}

double qfi_register(const StateVector &state) {
    double m1 = 0.0;
    double m2 = 0.0;
    for (Eigen::Index i = 0; i < state.amps.size(); ++i) {
        const double w = std::norm(state.amps[i]);
        const int n = std::popcount(static_cast<std::uint64_t>(i));
        m1 += n * w;
        m2 += static_cast<double>(n) * n * w;
    }
    return 4.0 * (m2 - m1 * m1);
}

ParityOutcome parity_strategy(int N, double theta) {
    if (N < 1) {
        throw std::invalid_argument("parity strategy needs N >= 1");
    }
    const double c = std::cos(0.5 * N * theta);
    return {c * c, 1.0 - c * c, 1.0 / (static_cast<double>(N) * N)};
}

std::vector<double> simulated_parity_distribution(int N, double theta) {
    StateVector s = ghz_state(N);
    for (int q = 0; q < N; ++q) {
        apply_gate_inplace(s.amps, N, gates::rz(q, theta));
    }
    for (int q = 0; q < N; ++q) {
        apply_gate_inplace(s.amps, N, gates::h(q));
    }
    std::vector<double> p(2, 0.0);
    for (Eigen::Index i = 0; i < s.amps.size(); ++i) {
        p[static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(i)) & 1)] += std::norm(s.amps[i]);
    }
    return p;
}

NoisyLocalCheck noisy_local_equivalence_check(double sigma, const SubspaceState &probe, const Povm &povm,
                                              double theta0) {
    if (sigma < 0.0) {
        throw std::invalid_argument("sigma must be nonnegative");
    }
    if (sigma == 0.0) {
        return {};
    }
    const BayesState st = BayesState::make(Prior::gaussian(theta0, sigma), probe, povm);
    NoisyLocalCheck c;
    c.bayes = bayes_round(st).mean_posterior_variance;

    // Dephased probe at theta0 is gamma; its derivative is i[H, gamma], H = diag(n).
    const Eigen::MatrixXcd &g = st.moments.gamma;
    Eigen::VectorXcd h(probe.N + 1);
    for (int n = 0; n <= probe.N; ++n) {
        h[n] = static_cast<double>(n);
    }
    const Eigen::MatrixXcd dr = cplx(0.0, 1.0) * (h.asDiagonal() * g - g * h.asDiagonal());
    double fi = 0.0;
    for (int m = 0; m < povm.size(); ++m) {
        const double p = povm.trace_with(m, g).real();
        if (p < kOutcomePruning) {
            continue;
        }
        const double d = povm.trace_with(m, dr).real();
        fi += d * d / p;
    }
    const double s2 = sigma * sigma;
    c.local = s2 - s2 * s2 * fi;
    c.residual = std::abs(c.bayes - c.local);
    return c;
}

}  // namespace qmetro
