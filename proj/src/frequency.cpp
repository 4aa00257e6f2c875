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

#include "qmetro/frequency.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qmetro/bayes.hpp"
#include "qmetro/classical.hpp"

namespace qmetro {

FrequencyModel::FrequencyModel(const SubspaceState &probe, const Povm &povm) : N_(probe.N) {
    if (povm.dim != probe.N + 1) {
        throw std::invalid_argument("POVM dimension does not match the probe");
    }
    for (int m = 0; m < povm.size(); ++m) {
        const auto &v = povm.factors[static_cast<std::size_t>(m)];
        Eigen::VectorXcd s = Eigen::VectorXcd::Zero(N_ + 1);
        for (Eigen::Index c = 0; c < v.cols(); ++c) {
            const Eigen::VectorXcd a = v.col(c).conjugate().cwiseProduct(probe.coeffs);
            for (int d = 0; d <= N_; ++d) {
                s[d] += (a.tail(N_ + 1 - d).array() * a.head(N_ + 1 - d).conjugate().array()).sum();
            }
        }
        s_.push_back(std::move(s));
    }
}

double FrequencyModel::v_over_delta2(double tau) const {
    if (!(tau > 0.0)) {
        throw std::invalid_argument("frequency round needs tau > 0");
    }
    std::vector<double> k(static_cast<std::size_t>(N_ + 1));
    for (int d = 0; d <= N_; ++d) {
        k[static_cast<std::size_t>(d)] = std::exp(-0.5 * d * d * tau * tau);
    }
    double explained = 0.0;
    for (const auto &s : s_) {
        // Gamma kernel k(d), eta kernel i tau d k(d), both Hermitian in d.
        double p = s[0].real();
        double g = 0.0;
        for (int d = 1; d <= N_; ++d) {
            p += 2.0 * k[static_cast<std::size_t>(d)] * s[d].real();
            g -= 2.0 * tau * d * k[static_cast<std::size_t>(d)] * s[d].imag();
        }
        if (p < kOutcomePruning) {
            continue;
        }
        explained += g * g / p;
    }
    return std::max(0.0, 1.0 - explained);
}

FrequencyRound frequency_round(double delta, double tau, const SubspaceState &probe, const Povm &povm) {
    if (!(delta > 0.0)) {
        throw std::invalid_argument("frequency round needs delta > 0");
    }
    FrequencyRound r;
    r.v_over_delta2 = FrequencyModel(probe, povm).v_over_delta2(tau);
    r.variance = r.v_over_delta2 * delta * delta;
    return r;
}

double classical_frequency_round(int N, double tau) {
    if (!(tau > 0.0)) {
        throw std::invalid_argument("frequency round needs tau > 0");
    }
    return classical_parallel_terms(N, tau).variance / (tau * tau);
}

TauOptimum optimize_tau(const std::function<double(double)> &objective, double lo, double hi, int grid, double tol) {
    if (!(lo > 0.0) || !(hi > lo) || grid < 3) {
        throw std::invalid_argument("tau window must satisfy 0 < lo < hi with at least 3 grid points");
    }
    TauOptimum best;
    std::vector<double> taus(static_cast<std::size_t>(grid));
    std::vector<double> vals(static_cast<std::size_t>(grid));
    std::size_t arg = 0;
    for (int i = 0; i < grid; ++i) {
        taus[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, static_cast<double>(i) / (grid - 1));
        vals[static_cast<std::size_t>(i)] = objective(taus[static_cast<std::size_t>(i)]);
        if (vals[static_cast<std::size_t>(i)] < vals[arg]) {
            arg = static_cast<std::size_t>(i);
        }
    }
    best.evaluations = grid;
    best.tau = taus[arg];
    best.v_over_delta2 = vals[arg];
    best.boundary = arg == 0 || arg + 1 == taus.size();
    if (best.boundary) {
        return best;
    }

    // Golden section on the bracket around the best grid point.
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = taus[arg - 1];
    double b = taus[arg + 1];
    double x1 = b - ratio * (b - a);
    double x2 = a + ratio * (b - a);
    double f1 = objective(x1);
    double f2 = objective(x2);
    best.evaluations += 2;
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - ratio * (b - a);
            f1 = objective(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + ratio * (b - a);
            f2 = objective(x2);
        }
        ++best.evaluations;
    }
    const double x = f1 < f2 ? x1 : x2;
    const double f = std::min(f1, f2);
    if (f < best.v_over_delta2) {
        best.tau = x;
        best.v_over_delta2 = f;
    }
    return best;
}

TauOptimum optimize_tau(const SubspaceState &probe, const Povm &povm) {
    const FrequencyModel model(probe, povm);
    return optimize_tau([&](double tau) { return model.v_over_delta2(tau); });
}

TauOptimum optimize_tau_classical(int N) {
    return optimize_tau([&](double tau) { return classical_frequency_round(N, tau); });
}

}  // namespace qmetro
