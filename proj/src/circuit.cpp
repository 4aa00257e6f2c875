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

#include "qmetro/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmetro {

std::string gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::H: return "H";
        case GateKind::Rx: return "Rx";
        case GateKind::Ry: return "Ry";
        case GateKind::Rz: return "Rz";
        case GateKind::PhaseDiag: return "PhaseDiag";
        case GateKind::CZ: return "CZ";
        case GateKind::CNOT: return "CNOT";
        case GateKind::SWAP: return "SWAP";
        case GateKind::Toffoli: return "Toffoli";
        case GateKind::MultiControlledX: return "MultiControlledX";
    }
    return "?";
}

namespace gates {

namespace {
Gate single(GateKind k, int q, double a = 0.0, double b = 0.0) {
    Gate g;
    g.kind = k;
    g.targets = {q};
    g.angle = a;
    g.angle2 = b;
    return g;
}
}  // namespace

Gate x(int q) { return single(GateKind::X, q); }
Gate y(int q) { return single(GateKind::Y, q); }
Gate z(int q) { return single(GateKind::Z, q); }
Gate h(int q) { return single(GateKind::H, q); }
Gate rx(int q, double angle) { return single(GateKind::Rx, q, angle); }
Gate ry(int q, double angle) { return single(GateKind::Ry, q, angle); }
Gate rz(int q, double angle) { return single(GateKind::Rz, q, angle); }
Gate phase_diag(int q, double phase0, double phase1) {
    return single(GateKind::PhaseDiag, q, phase0, phase1);
}

Gate cz(int a, int b) {
    Gate g;
    g.kind = GateKind::CZ;
    g.targets = {a, b};
    return g;
}

Gate cnot(int control, int target) {
    Gate g;
    g.kind = GateKind::CNOT;
    g.targets = {target};
    g.controls = {{control, true}};
    return g;
}

Gate swap(int a, int b) {
    Gate g;
    g.kind = GateKind::SWAP;
    g.targets = {a, b};
    return g;
}

Gate toffoli(int c1, int c2, int target) {
    Gate g;
    g.kind = GateKind::Toffoli;
    g.targets = {target};
    g.controls = {{c1, true}, {c2, true}};
    return g;
}

Gate mcx(std::vector<Control> controls, int target) {
    Gate g;
    g.kind = GateKind::MultiControlledX;
    g.targets = {target};
    g.controls = std::move(controls);
    return g;
}

Gate controlled(Gate g, int control, bool value) {
    g.controls.push_back({control, value});
    return g;
}

}  // namespace gates

Eigen::Matrix2cd gate_matrix(const Gate &g) {
    using std::cos;
    using std::sin;
    const cplx i(0.0, 1.0);
    const double c = cos(g.angle / 2.0);
    const double s = sin(g.angle / 2.0);
    Eigen::Matrix2cd m;
    switch (g.kind) {
        case GateKind::X:
        case GateKind::CNOT:
        case GateKind::Toffoli:
        case GateKind::MultiControlledX:
            m << 0, 1, 1, 0;
            break;
        case GateKind::Y:
            m << 0, -i, i, 0;
            break;
        case GateKind::Z:
        case GateKind::CZ:
            m << 1, 0, 0, -1;
            break;
        case GateKind::H: {
            const double r = std::numbers::sqrt2 / 2.0;
            m << r, r, r, -r;
            break;
        }
        case GateKind::Rx:
            m << c, -i * s, -i * s, c;
            break;
        case GateKind::Ry:
            m << c, s, -s, c;
            break;
        case GateKind::Rz:
            m << std::exp(-i * (g.angle / 2.0)), 0, 0, std::exp(i * (g.angle / 2.0));
            break;
        case GateKind::PhaseDiag:
            m << std::exp(i * g.angle), 0, 0, std::exp(i * g.angle2);
            break;
        case GateKind::SWAP:
            throw std::invalid_argument("SWAP has no single-qubit matrix");
    }
    return m;
}

std::vector<int> gate_qubits(const Gate &g) {
    std::vector<int> qs = g.targets;
    for (const auto &c : g.controls) {
        qs.push_back(c.qubit);
    }
    return qs;
}

Gate adjoint(const Gate &g) {
    Gate a = g;
    switch (g.kind) {
        case GateKind::Rx:
        case GateKind::Ry:
        case GateKind::Rz:
            a.angle = -g.angle;
            break;
        case GateKind::PhaseDiag:
            a.angle = -g.angle;
            a.angle2 = -g.angle2;
            break;
        default:
            break;
    }
    return a;
}

void validate_gate(const Gate &g, int n_qubits) {
    std::size_t want_targets = 1;
    if (g.kind == GateKind::CZ || g.kind == GateKind::SWAP) {
        want_targets = 2;
    }
    if (g.targets.size() != want_targets) {
        throw std::invalid_argument(gate_name(g.kind) + ": wrong number of targets");
    }
    if (g.kind == GateKind::CNOT && g.controls.size() != 1) {
        throw std::invalid_argument("CNOT needs exactly one control");
    }
    if (g.kind == GateKind::Toffoli && g.controls.size() != 2) {
        throw std::invalid_argument("Toffoli needs exactly two controls");
    }
    if (g.kind == GateKind::MultiControlledX && g.controls.empty()) {
        throw std::invalid_argument("MultiControlledX needs at least one control");
    }
    auto qs = gate_qubits(g);
    for (int q : qs) {
        if (q < 0 || q >= n_qubits) {
            throw std::out_of_range(gate_name(g.kind) + ": qubit index out of range");
        }
    }
    std::sort(qs.begin(), qs.end());
    if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
        throw std::invalid_argument(gate_name(g.kind) + ": repeated qubit (targets and controls must be disjoint)");
    }
}

void apply_gate_inplace(Eigen::VectorXcd &amps, int n, const Gate &g) {
    validate_gate(g, n);
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::uint64_t cmask = 0;
    std::uint64_t cval = 0;
    for (const auto &c : g.controls) {
        cmask |= qubit_bit(n, c.qubit);
        if (c.value) {
            cval |= qubit_bit(n, c.qubit);
        }
    }
    if (g.kind == GateKind::SWAP) {
        const std::uint64_t a = qubit_bit(n, g.targets[0]);
        const std::uint64_t b = qubit_bit(n, g.targets[1]);
        for (std::uint64_t i = 0; i < dim; ++i) {
            if ((i & a) && !(i & b) && (i & cmask) == cval) {
                std::swap(amps[static_cast<Eigen::Index>(i)], amps[static_cast<Eigen::Index>(i ^ a ^ b)]);
            }
        }
        return;
    }
    int target = g.targets[0];
    if (g.kind == GateKind::CZ) {
        cmask |= qubit_bit(n, g.targets[0]);
        cval |= qubit_bit(n, g.targets[0]);
        target = g.targets[1];
    }
    const Eigen::Matrix2cd m = gate_matrix(g);
    const std::uint64_t t = qubit_bit(n, target);
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & t) || (i & cmask) != cval) {
            continue;
        }
        const auto k0 = static_cast<Eigen::Index>(i);
        const auto k1 = static_cast<Eigen::Index>(i | t);
        const cplx a0 = amps[k0];
        const cplx a1 = amps[k1];
        amps[k0] = m(0, 0) * a0 + m(0, 1) * a1;
        amps[k1] = m(1, 0) * a0 + m(1, 1) * a1;
    }
}

StateVector apply_gate(const StateVector &state, const Gate &g) {
    if (!state.valid) {
        throw std::invalid_argument("gate applied to a zero-probability branch");
    }
    StateVector out = state;
    apply_gate_inplace(out.amps, out.n_qubits, g);
    return out;
}

Circuit &Circuit::add(const Gate &g, int block) {
    validate_gate(g, n_qubits_);
    ops_.push_back({g, block});
    return *this;
}

Circuit &Circuit::measure(int qubit, int block) {
    if (qubit < 0 || qubit >= n_qubits_) {
        throw std::out_of_range("measured qubit out of range");
    }
    ops_.push_back({Measure{qubit}, block});
    ++n_measure_;
    return *this;
}

Circuit &Circuit::add_conditional(const Gate &g, std::vector<int> parity, int block) {
    validate_gate(g, n_qubits_);
    for (int m : parity) {
        if (m < 0 || m >= n_measure_) {
            throw std::invalid_argument("classical control refers to a measurement not yet performed");
        }
    }
    ops_.push_back({ConditionalGate{g, std::move(parity)}, block});
    return *this;
}

Circuit &Circuit::append(const Circuit &other, int block) {
    if (other.n_qubits_ > n_qubits_) {
        throw std::invalid_argument("appended circuit is wider than the host");
    }
    const int offset = n_measure_;
    for (const auto &ins : other.ops_) {
        const int b = block >= 0 ? block : ins.block;
        if (const auto *g = std::get_if<Gate>(&ins.op)) {
            add(*g, b);
        } else if (const auto *m = std::get_if<Measure>(&ins.op)) {
            measure(m->qubit, b);
        } else {
            auto cg = std::get<ConditionalGate>(ins.op);
            for (int &p : cg.parity) {
                p += offset;
            }
            add_conditional(cg.gate, cg.parity, b);
        }
    }
    return *this;
}

RunResult run_circuit(const Circuit &circuit, const StateVector &initial, const std::vector<int> &outcomes) {
    if (initial.n_qubits != circuit.n_qubits()) {
        throw std::invalid_argument("initial state width does not match circuit");
    }
    if (static_cast<int>(outcomes.size()) != circuit.num_measurements()) {
        throw std::invalid_argument("outcome assignment length does not match measurement count");
    }
    RunResult r{initial, 1.0};
    int next = 0;
    for (const auto &ins : circuit.instructions()) {
        if (const auto *g = std::get_if<Gate>(&ins.op)) {
            apply_gate_inplace(r.state.amps, r.state.n_qubits, *g);
        } else if (const auto *m = std::get_if<Measure>(&ins.op)) {
            auto br = measure_branch(r.state, m->qubit, outcomes[static_cast<std::size_t>(next++)]);
            r.probability *= br.probability;
            r.state = std::move(br.state);
            if (!r.state.valid) {
                r.probability = 0.0;
                return r;
            }
        } else {
            const auto &cg = std::get<ConditionalGate>(ins.op);
            int parity = 0;
            for (int p : cg.parity) {
                parity ^= outcomes[static_cast<std::size_t>(p)] & 1;
            }
            if (parity) {
                apply_gate_inplace(r.state.amps, r.state.n_qubits, cg.gate);
            }
        }
    }
    return r;
}

Circuit inverse(const Circuit &circuit) {
    Circuit inv(circuit.n_qubits());
    const auto &ops = circuit.instructions();
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        const auto *g = std::get_if<Gate>(&it->op);
        if (!g) {
            throw std::invalid_argument("cannot invert a circuit containing measurements");
        }
        inv.add(adjoint(*g), it->block);
    }
    return inv;
}

Eigen::MatrixXcd circuit_unitary(const Circuit &circuit) {
    const int n = circuit.n_qubits();
    if (n > 12) {
        throw std::invalid_argument("dense unitary limited to 12 qubits");
    }
    const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
    Eigen::MatrixXcd u(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        auto r = run_circuit(circuit, StateVector::basis(n, static_cast<std::uint64_t>(j)));
        u.col(j) = r.state.amps;
    }
    return u;
}

}  // namespace qmetro
