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

#include "qmetro/circuit.hpp"

namespace qmetro {

/// Probe restricted to the unary subspace: coefficients psi_0..psi_N over
/// |n>_un = |1>^n |0>^(N-n).
struct SubspaceState {
    int N = 0;
    Eigen::VectorXcd coeffs;

    /// Validates the length (N+1) and normalization (1e-12).
    static SubspaceState from_coeffs(const Eigen::VectorXcd &coeffs);
    int dim() const { return N + 1; }
};

/// Rotation angles phi_1..phi_N of the controlled-rotation cascade, in [0, pi].
struct AngleSchedule {
    int N = 0;
    std::vector<double> phis;
};

SubspaceState sine_coefficients(int N);

/// GHZ state written in the unary basis: psi_0 = psi_N = 1/sqrt(2).
SubspaceState ghz_coefficients(int N);

SubspaceState unary_eigenstate(int n, int N);

/// |+>^N on the symmetric subspace: psi_n = sqrt(C(N,n) / 2^N) over Dicke
/// states of weight n. The encoding acts on Dicke and unary states alike.
SubspaceState product_probe(int N);

AngleSchedule angles_from_amplitudes(const SubspaceState &psi);

SubspaceState amplitudes_from_angles(const AngleSchedule &schedule);

/// N-qubit cascade: a rotation on qubit 0, then for k >= 2 a rotation on
/// qubit k-1 controlled by qubit k-2. Each rotation is Ry(-phi_k), which maps
/// |0> to cos(phi_k/2)|0> + sin(phi_k/2)|1>.
Circuit build_prep_circuit(const AngleSchedule &schedule);

/// Basis index of |n>_un in an N-qubit register.
std::uint64_t unary_index(int n, int N);

StateVector unary_basis_state(int n, int N);
StateVector ghz_state(int N);

/// Embeds a subspace state into the N-qubit register.
StateVector embed_unary(const SubspaceState &psi);

/// Inverse of embed_unary; throws if weight outside the unary subspace exceeds tol.
SubspaceState restrict_to_unary(const StateVector &state, double tol = 1e-10);

}  // namespace qmetro
