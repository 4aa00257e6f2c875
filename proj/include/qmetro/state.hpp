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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace qmetro {

using cplx = std::complex<double>;

/// Largest register the dense simulator accepts.
inline constexpr int kMaxQubits = 24;

/// Branches below this probability are reported as zero-probability branches.
inline constexpr double kZeroBranchProbability = 1e-24;

/// Dense pure state over n qubits.
///
/// Qubit 0 is the leftmost tensor factor, i.e. the most significant bit of
/// the basis index. A state with `valid == false` marks a zero-probability
/// measurement branch and carries no amplitudes.
struct StateVector {
    int n_qubits = 0;
    Eigen::VectorXcd amps;
    bool valid = true;

    static StateVector zero(int n);
    static StateVector basis(int n, std::uint64_t index);
    static StateVector plus(int n);
    /// Copies and normalizes; throws if the norm vanishes or sizes mismatch.
    static StateVector from_amplitudes(int n, const Eigen::VectorXcd &amps);
    static StateVector invalid(int n);

    std::uint64_t dim() const { return std::uint64_t{1} << n_qubits; }
    double norm() const { return amps.norm(); }
};

/// Bit of basis index corresponding to qubit q in an n-qubit register.
inline std::uint64_t qubit_bit(int n, int q) { return std::uint64_t{1} << (n - 1 - q); }

struct BranchResult {
    StateVector state;
    double probability = 0.0;
    bool zero_branch() const { return !state.valid; }
};

/// Projects qubit onto |outcome> and renormalizes; the register keeps all qubits.
BranchResult measure_branch(const StateVector &state, int qubit, int outcome);

/// Projects qubit onto |outcome> and removes it from the register.
BranchResult project_out(const StateVector &state, int qubit, int outcome);

/// |<a|b>|.
double fidelity_up_to_global_phase(const StateVector &a, const StateVector &b);

/// a (x) b with a's qubits first.
StateVector tensor(const StateVector &a, const StateVector &b);

/// Reorders qubits: qubit perm[i] of the input becomes qubit i of the output.
StateVector permute_qubits(const StateVector &state, const std::vector<int> &perm);

/// Probability that qubit reads 1.
double probability_one(const StateVector &state, int qubit);

}  // namespace qmetro
