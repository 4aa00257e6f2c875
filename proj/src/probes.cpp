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

#include "qmetro/probes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmetro {

SubspaceState SubspaceState::from_coeffs(const Eigen::VectorXcd &coeffs) {
    if (coeffs.size() < 2) {
        throw std::invalid_argument("subspace state needs N >= 1");
    }
    if (std::abs(coeffs.squaredNorm() - 1.0) > 1e-12) {
        throw std::invalid_argument("subspace state is not normalized");
    }
    return {static_cast<int>(coeffs.size()) - 1, coeffs};
}

SubspaceState sine_coefficients(int N) {
    if (N < 1) {
        throw std::invalid_argument("sine state needs N >= 1");
    }
    Eigen::VectorXcd c(N + 1);
    const double pref = std::sqrt(2.0 / (N + 2));
    for (int n = 0; n <= N; ++n) {
        c[n] = pref * std::sin((n + 1) * std::numbers::pi / (N + 2));
    }
    c /= c.norm();
    return {N, c};
}

SubspaceState ghz_coefficients(int N) {
    if (N < 1) {
        throw std::invalid_argument("GHZ state needs N >= 1");
    }
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(N + 1);
    c[0] = c[N] = std::numbers::sqrt2 / 2.0;
    return {N, c};
}

SubspaceState unary_eigenstate(int n, int N) {
    if (N < 1 || n < 0 || n > N) {
        throw std::invalid_argument("unary eigenstate index out of range");
    }
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(N + 1);
    c[n] = 1.0;
    return {N, c};
}

SubspaceState product_probe(int N) {
    if (N < 1) {
        throw std::invalid_argument("product probe needs N >= 1");
    }
    Eigen::VectorXcd c(N + 1);
    double log_binom = 0.0;
    for (int n = 0; n <= N; ++n) {
        if (n > 0) {
            log_binom += std::log(static_cast<double>(N - n + 1) / n);
        }
        c[n] = std::exp(0.5 * (log_binom - N * std::numbers::ln2));
    }
    return {N, c};
}

AngleSchedule angles_from_amplitudes(const SubspaceState &psi) {
    const int N = psi.N;
    std::vector<double> a(static_cast<std::size_t>(N + 1));
    for (int n = 0; n <= N; ++n) {
        const cplx c = psi.coeffs[n];
        if (std::abs(c.imag()) > 1e-12 || c.real() < -1e-12) {
            throw std::invalid_argument("angle inversion needs real nonnegative amplitudes");
        }
        a[static_cast<std::size_t>(n)] = std::max(0.0, c.real());
    }
    if (std::abs(psi.coeffs.squaredNorm() - 1.0) > 1e-12) {
        throw std::invalid_argument("angle inversion needs a normalized state");
    }
    AngleSchedule s{N, std::vector<double>(static_cast<std::size_t>(N), 0.0)};
    double used = 0.0;
    for (int k = 1; k <= N; ++k) {
        const double rest = 1.0 - used;
        if (rest <= 1e-14) {
            break;
        }
        const double arg = std::clamp(a[static_cast<std::size_t>(k - 1)] / std::sqrt(rest), -1.0, 1.0);
        s.phis[static_cast<std::size_t>(k - 1)] = 2.0 * std::acos(arg);
        used += a[static_cast<std::size_t>(k - 1)] * a[static_cast<std::size_t>(k - 1)];
    }
    return s;
}

SubspaceState amplitudes_from_angles(const AngleSchedule &schedule) {
    const int N = schedule.N;
    if (N < 1 || static_cast<int>(schedule.phis.size()) != N) {
        throw std::invalid_argument("angle schedule length must equal N >= 1");
    }
    Eigen::VectorXcd c(N + 1);
    double prod = 1.0;
    for (int n = 0; n < N; ++n) {
        const double phi = schedule.phis[static_cast<std::size_t>(n)];
        c[n] = std::cos(phi / 2.0) * prod;
        prod *= std::sin(phi / 2.0);
    }
    c[N] = prod;
    return {N, c};
}

Circuit build_prep_circuit(const AngleSchedule &schedule) {
    const int N = schedule.N;
    if (N < 1 || static_cast<int>(schedule.phis.size()) != N) {
        throw std::invalid_argument("angle schedule length must equal N >= 1");
    }
    Circuit c(N);
    c.add(gates::ry(0, -schedule.phis[0]));
    for (int k = 1; k < N; ++k) {
        c.add(gates::controlled(gates::ry(k, -schedule.phis[static_cast<std::size_t>(k)]), k - 1));
    }
    return c;
}

std::uint64_t unary_index(int n, int N) {
    if (N < 1 || N > 63 || n < 0 || n > N) {
        throw std::invalid_argument("unary index out of range");
    }
    return ((std::uint64_t{1} << n) - 1) << (N - n);
}

StateVector unary_basis_state(int n, int N) {
    if (N > kMaxQubits) {
        throw std::invalid_argument("register exceeds the simulator cap");
    }
    return StateVector::basis(N, unary_index(n, N));
}

StateVector ghz_state(int N) { return embed_unary(ghz_coefficients(N)); }

StateVector embed_unary(const SubspaceState &psi) {
    StateVector s = StateVector::zero(psi.N);
    s.amps[0] = 0.0;
    for (int n = 0; n <= psi.N; ++n) {
        s.amps[static_cast<Eigen::Index>(unary_index(n, psi.N))] = psi.coeffs[n];
    }
    return s;
}

SubspaceState restrict_to_unary(const StateVector &state, double tol) {
    const int N = state.n_qubits;
    Eigen::VectorXcd c(N + 1);
    for (int n = 0; n <= N; ++n) {
        c[n] = state.amps[static_cast<Eigen::Index>(unary_index(n, N))];
    }
    const double leak = 1.0 - c.squaredNorm();
    if (leak > tol) {
        throw std::invalid_argument("state has weight outside the unary subspace");
    }
    c /= c.norm();
    return {N, c};
}

}  // namespace qmetro
