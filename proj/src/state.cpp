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

#include "qmetro/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qmetro {

namespace {

void check_size(int n) {
    if (n < 0 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count " + std::to_string(n) + " outside [0, 24]");
    }
}

void check_qubit(const StateVector &s, int q) {
    if (q < 0 || q >= s.n_qubits) {
        throw std::out_of_range("qubit index " + std::to_string(q) + " out of range");
    }
    if (!s.valid) {
        throw std::invalid_argument("operation on a zero-probability branch");
    }
}

}  // namespace

StateVector StateVector::zero(int n) { return basis(n, 0); }

StateVector StateVector::basis(int n, std::uint64_t index) {
    check_size(n);
    StateVector s;
    s.n_qubits = n;
    s.amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(s.dim()));
    if (index >= s.dim()) {
        throw std::out_of_range("basis index out of range");
    }
    s.amps[static_cast<Eigen::Index>(index)] = 1.0;
    return s;
}

StateVector StateVector::plus(int n) {
    check_size(n);
    StateVector s;
    s.n_qubits = n;
    const double a = 1.0 / std::sqrt(static_cast<double>(s.dim()));
    s.amps = Eigen::VectorXcd::Constant(static_cast<Eigen::Index>(s.dim()), a);
    return s;
}

StateVector StateVector::from_amplitudes(int n, const Eigen::VectorXcd &amps) {
    check_size(n);
    StateVector s;
    s.n_qubits = n;
    if (static_cast<std::uint64_t>(amps.size()) != s.dim()) {
        throw std::invalid_argument("amplitude count does not match 2^n");
    }
    const double nrm = amps.norm();
    if (nrm < 1e-300) {
        throw std::invalid_argument("cannot normalize a zero vector");
    }
    s.amps = amps / nrm;
    return s;
}

StateVector StateVector::invalid(int n) {
    StateVector s;
    s.n_qubits = n;
    s.valid = false;
    return s;
}

BranchResult measure_branch(const StateVector &state, int qubit, int outcome) {
    check_qubit(state, qubit);
    const std::uint64_t bit = qubit_bit(state.n_qubits, qubit);
    const std::uint64_t want = outcome ? bit : 0;
    BranchResult r;
    r.state = state;
    double p = 0.0;
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        if ((i & bit) == want) {
            p += std::norm(state.amps[k]);
        } else {
            r.state.amps[k] = 0.0;
        }
    }
    r.probability = p;
    if (p < kZeroBranchProbability) {
        r.state = StateVector::invalid(state.n_qubits);
        r.probability = 0.0;
        return r;
    }
    r.state.amps /= std::sqrt(p);
    return r;
}

BranchResult project_out(const StateVector &state, int qubit, int outcome) {
    check_qubit(state, qubit);
    const int n = state.n_qubits;
    const int shift = n - 1 - qubit;
    const std::uint64_t low_mask = (std::uint64_t{1} << shift) - 1;
    BranchResult r;
    r.state.n_qubits = n - 1;
    r.state.amps.resize(static_cast<Eigen::Index>(std::uint64_t{1} << (n - 1)));
    double p = 0.0;
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << (n - 1)); ++j) {
        const std::uint64_t hi = (j & ~low_mask) << 1;
        const std::uint64_t i = hi | (static_cast<std::uint64_t>(outcome & 1) << shift) | (j & low_mask);
        const cplx a = state.amps[static_cast<Eigen::Index>(i)];
        r.state.amps[static_cast<Eigen::Index>(j)] = a;
        p += std::norm(a);
    }
    r.probability = p;
    if (p < kZeroBranchProbability) {
        r.state = StateVector::invalid(n - 1);
        r.probability = 0.0;
        return r;
    }
    r.state.amps /= std::sqrt(p);
    return r;
}

double fidelity_up_to_global_phase(const StateVector &a, const StateVector &b) {
    if (a.n_qubits != b.n_qubits) {
        throw std::invalid_argument("fidelity between registers of different size");
    }
    if (!a.valid || !b.valid) {
        return 0.0;
    }
    return std::abs(a.amps.dot(b.amps));
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    check_size(a.n_qubits + b.n_qubits);
    StateVector s;
    s.n_qubits = a.n_qubits + b.n_qubits;
    s.amps.resize(static_cast<Eigen::Index>(s.dim()));
    const auto nb = b.amps.size();
    for (Eigen::Index i = 0; i < a.amps.size(); ++i) {
        s.amps.segment(i * nb, nb) = a.amps[i] * b.amps;
    }
    return s;
}

StateVector permute_qubits(const StateVector &state, const std::vector<int> &perm) {
    const int n = state.n_qubits;
    if (static_cast<int>(perm.size()) != n) {
        throw std::invalid_argument("permutation size mismatch");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
            throw std::invalid_argument("not a permutation");
        }
        seen[static_cast<std::size_t>(p)] = true;
    }
    StateVector out;
    out.n_qubits = n;
    out.amps.resize(state.amps.size());
    for (std::uint64_t j = 0; j < state.dim(); ++j) {
        std::uint64_t i = 0;
        for (int q = 0; q < n; ++q) {
            if (j & qubit_bit(n, q)) {
                i |= qubit_bit(n, perm[static_cast<std::size_t>(q)]);
            }
        }
        out.amps[static_cast<Eigen::Index>(j)] = state.amps[static_cast<Eigen::Index>(i)];
    }
    return out;
}

double probability_one(const StateVector &state, int qubit) {
    check_qubit(state, qubit);
    const std::uint64_t bit = qubit_bit(state.n_qubits, qubit);
    double p = 0.0;
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if (i & bit) {
            p += std::norm(state.amps[static_cast<Eigen::Index>(i)]);
        }
    }
    return p;
}

}  // namespace qmetro
