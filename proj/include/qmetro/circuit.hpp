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

#include <string>
#include <variant>
#include <vector>

#include "qmetro/state.hpp"

namespace qmetro {

enum class GateKind {
    X,
    Y,
    Z,
    H,
    Rx,
    Ry,
    Rz,
    PhaseDiag,
    CZ,
    CNOT,
    SWAP,
    Toffoli,
    MultiControlledX,
};

std::string gate_name(GateKind kind);

/// Control qubit; the gate fires when the qubit is |value>.
struct Control {
    int qubit = 0;
    bool value = true;
    bool operator==(const Control &) const = default;
};

/// Gate conventions:
///   Rx(a) = exp(-i a X / 2), Rz(a) = exp(-i a Z / 2),
///   Ry(a) = exp(+i a Y / 2) = [[cos a/2, sin a/2], [-sin a/2, cos a/2]],
///   PhaseDiag(a, b) = diag(e^{i a}, e^{i b}).
/// CZ and SWAP take two targets. CNOT, Toffoli and MultiControlledX act on
/// targets[0] with the listed controls. Single-qubit kinds may carry
/// additional controls.
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<int> targets;
    std::vector<Control> controls;
    double angle = 0.0;
    double angle2 = 0.0;
    bool operator==(const Gate &) const = default;
};

namespace gates {
Gate x(int q);
Gate y(int q);
Gate z(int q);
Gate h(int q);
Gate rx(int q, double angle);
Gate ry(int q, double angle);
Gate rz(int q, double angle);
Gate phase_diag(int q, double phase0, double phase1);
Gate cz(int a, int b);
Gate cnot(int control, int target);
Gate swap(int a, int b);
Gate toffoli(int c1, int c2, int target);
Gate mcx(std::vector<Control> controls, int target);
/// Adds one more control to a single-qubit gate.
Gate controlled(Gate g, int control, bool value = true);
}  // namespace gates

/// 2x2 matrix acting on the target of a single-target gate (X for the
/// controlled-NOT family, Z for CZ acting on its second target).
Eigen::Matrix2cd gate_matrix(const Gate &g);

/// Every qubit the gate touches, controls included.
std::vector<int> gate_qubits(const Gate &g);

Gate adjoint(const Gate &g);

/// Throws std::invalid_argument on out-of-range, repeated or overlapping indices.
void validate_gate(const Gate &g, int n_qubits);

StateVector apply_gate(const StateVector &state, const Gate &g);
void apply_gate_inplace(Eigen::VectorXcd &amps, int n_qubits, const Gate &g);

struct Measure {
    int qubit = 0;
};

/// Gate applied when the XOR of the listed earlier outcomes is 1. Outcome
/// indices count Measure instructions in program order.
struct ConditionalGate {
    Gate gate;
    std::vector<int> parity;
};

using Operation = std::variant<Gate, Measure, ConditionalGate>;

struct Instruction {
    Operation op;
    int block = 0;
};

class Circuit {
public:
    Circuit() = default;
    explicit Circuit(int n_qubits) : n_qubits_(n_qubits) {}

    int n_qubits() const { return n_qubits_; }
    const std::vector<Instruction> &instructions() const { return ops_; }
    int num_measurements() const { return n_measure_; }
    std::size_t size() const { return ops_.size(); }

    Circuit &add(const Gate &g, int block = 0);
    Circuit &measure(int qubit, int block = 0);
    Circuit &add_conditional(const Gate &g, std::vector<int> parity, int block = 0);
    /// Appends all instructions of other; a nonnegative block overrides their tags.
    Circuit &append(const Circuit &other, int block = -1);

private:
    int n_qubits_ = 0;
    int n_measure_ = 0;
    std::vector<Instruction> ops_;
};

struct RunResult {
    StateVector state;
    double probability = 0.0;
    bool zero_branch() const { return !state.valid; }
};

/// Runs the circuit, forcing the i-th Measure onto outcomes[i].
RunResult run_circuit(const Circuit &circuit, const StateVector &initial,
                      const std::vector<int> &outcomes = {});

/// Inverse of a measurement-free circuit.
Circuit inverse(const Circuit &circuit);

/// Dense unitary of a measurement-free circuit (column j = image of |j>).
Eigen::MatrixXcd circuit_unitary(const Circuit &circuit);

}  // namespace qmetro
