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

#include "qmetro/compress.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

namespace qmetro {

int binary_width(int N) {
    if (N < 1) {
        throw std::invalid_argument("compressor needs N >= 1");
    }
    int lambda = 0;
    while ((std::uint64_t{1} << lambda) < static_cast<std::uint64_t>(N) + 1) {
        ++lambda;
    }
    return lambda;
}

CompressorLayout CompressorLayout::make(int N) {
    CompressorLayout l;
    l.N = N;
    l.lambda = binary_width(N);
    l.n_qubits = N + 2 * l.lambda - 1;
    l.unary.push_back(0);
    for (int j = 2; j <= N; ++j) {
        l.unary.push_back(2 * l.lambda + j - 2);
    }
    for (int i = l.lambda - 1; i >= 0; --i) {
        l.binary.push_back(N + 2 * i);
    }
    for (int i = 1; i < l.lambda; ++i) {
        l.carry.push_back(N + 2 * i - 1);
    }
    return l;
}

Circuit build_step(int k, const CompressorLayout &layout) {
    const int N = layout.N;
    const int lambda = layout.lambda;
    if (k < 1 || k > N) {
        throw std::invalid_argument("compressor step index out of range");
    }
    const int u = k - 1;
    auto b = [&](int i) { return k + 2 * i; };
    auto c = [&](int i) { return k + 2 * i - 1; };
    auto carry_in = [&](int i) { return i == 0 ? u : c(i); };

    Circuit step(layout.n_qubits);
    // Ripple-carry increment by u_k.
    for (int i = 0; i < lambda - 1; ++i) {
        step.add(gates::toffoli(carry_in(i), b(i), c(i + 1)), k);
        step.add(gates::cnot(carry_in(i), b(i)), k);
    }
    step.add(gates::cnot(carry_in(lambda - 1), b(lambda - 1)), k);

    // Carries: c_{i+1} = carry_in_i AND NOT b_i after the increment.
    for (int i = lambda - 2; i >= 0; --i) {
        step.add(gates::x(b(i)), k);
        step.add(gates::toffoli(carry_in(i), b(i), c(i + 1)), k);
        step.add(gates::x(b(i)), k);
    }

    // Erase u_k when the register reads k: X-conjugated Toffoli ladder on the carries.
    std::vector<int> flipped;
    for (int i = 0; i < lambda; ++i) {
        if (((k >> i) & 1) == 0) {
            flipped.push_back(b(i));
        }
    }
    for (int q : flipped) {
        step.add(gates::x(q), k);
    }
    if (lambda == 1) {
        step.add(gates::cnot(b(0), u), k);
    } else {
        std::vector<Gate> ladder;
        ladder.push_back(gates::toffoli(b(0), b(1), c(1)));
        for (int i = 2; i < lambda; ++i) {
            ladder.push_back(gates::toffoli(c(i - 1), b(i), c(i)));
        }
        for (const auto &g : ladder) {
            step.add(g, k);
        }
        step.add(gates::cnot(c(lambda - 1), u), k);
        for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) {
            step.add(*it, k);
        }
    }
    for (int q : flipped) {
        step.add(gates::x(q), k);
    }

    // Bring u_{k+1} up past the work block.
    if (k < N) {
        for (int p = k + 2 * lambda - 2; p >= k; --p) {
            step.add(gates::swap(p, p + 1), k);
        }
    }
    return step;
}

Compressor build_compressor(int N) {
    Compressor out{Circuit(0), CompressorLayout::make(N)};
    out.circuit = Circuit(out.layout.n_qubits);
    for (int k = 1; k <= N; ++k) {
        out.circuit.append(build_step(k, out.layout));
    }
    return out;
}

int classical_compress_oracle(const std::string &bits) {
    int n = 0;
    bool seen_zero = false;
    for (char ch : bits) {
        if (ch == '1') {
            if (seen_zero) {
                throw std::invalid_argument("malformed unary string: 1 after 0");
            }
            ++n;
        } else if (ch == '0') {
            seen_zero = true;
        } else {
            throw std::invalid_argument("unary string may contain only 0 and 1");
        }
    }
    return n;
}

StateVector compressor_input(const CompressorLayout &layout, const SubspaceState &psi) {
    if (psi.N != layout.N) {
        throw std::invalid_argument("probe size does not match the compressor");
    }
    StateVector s = StateVector::zero(layout.n_qubits);
    s.amps[0] = 0.0;
    for (int n = 0; n <= psi.N; ++n) {
        std::uint64_t idx = 0;
        for (int j = 0; j < n; ++j) {
            idx |= qubit_bit(layout.n_qubits, layout.unary[static_cast<std::size_t>(j)]);
        }
        s.amps[static_cast<Eigen::Index>(idx)] += psi.coeffs[n];
    }
    return s;
}

std::uint64_t compressed_index(const CompressorLayout &layout, int n) {
    std::uint64_t idx = 0;
    for (int i = 0; i < layout.lambda; ++i) {
        if ((n >> (layout.lambda - 1 - i)) & 1) {
            idx |= qubit_bit(layout.n_qubits, layout.binary[static_cast<std::size_t>(i)]);
        }
    }
    return idx;
}

RegisterExtract extract_binary_register(const CompressorLayout &layout, const StateVector &state) {
    if (state.n_qubits != layout.n_qubits) {
        throw std::invalid_argument("state does not match the compressor layout");
    }
    const int lambda = layout.lambda;
    Eigen::VectorXcd reg = Eigen::VectorXcd::Zero(Eigen::Index{1} << lambda);
    double kept = 0.0;
    for (int v = 0; v < (1 << lambda); ++v) {
        const cplx a = state.amps[static_cast<Eigen::Index>(compressed_index(layout, v))];
        reg[v] = a;
        kept += std::norm(a);
    }
    RegisterExtract out;
    out.leakage = std::max(0.0, state.amps.squaredNorm() - kept);
    for (int v = layout.N + 1; v < (1 << lambda); ++v) {
        out.out_of_range += std::norm(reg[v]);
    }
    if (kept < kZeroBranchProbability) {
        out.binary = StateVector::invalid(lambda);
    } else {
        out.binary = StateVector::from_amplitudes(lambda, reg);
    }
    return out;
}

Circuit build_qft(int lambda) {
    if (lambda < 1) {
        throw std::invalid_argument("QFT needs lambda >= 1");
    }
    Circuit c(lambda);
    for (int i = 0; i < lambda; ++i) {
        c.add(gates::h(i));
        for (int j = i + 1; j < lambda; ++j) {
            const double phase = 2.0 * std::numbers::pi / static_cast<double>(std::uint64_t{1} << (j - i + 1));
            c.add(gates::controlled(gates::phase_diag(i, 0.0, phase), j));
        }
    }
    for (int i = 0; i < lambda / 2; ++i) {
        c.add(gates::swap(i, lambda - 1 - i));
    }
    return c;
}

ResourceReport count_resources(const Circuit &circuit) {
    ResourceReport r;
    std::vector<long long> frontier(static_cast<std::size_t>(circuit.n_qubits()), 0);
    struct BlockStats {
        std::vector<long long> frontier;
        long long depth = 0;
        std::set<int> qubits;
    };
    std::map<int, BlockStats> blocks;
    for (const auto &ins : circuit.instructions()) {
        std::vector<int> qs;
        if (const auto *g = std::get_if<Gate>(&ins.op)) {
            qs = gate_qubits(*g);
            ++r.gate_count;
            r.toffoli_count += g->kind == GateKind::Toffoli;
        } else if (const auto *cg = std::get_if<ConditionalGate>(&ins.op)) {
            qs = gate_qubits(cg->gate);
            ++r.gate_count;
            r.toffoli_count += cg->gate.kind == GateKind::Toffoli;
        } else {
            qs = {std::get<Measure>(ins.op).qubit};
        }
        long long layer = 0;
        for (int q : qs) {
            layer = std::max(layer, frontier[static_cast<std::size_t>(q)]);
        }
        for (int q : qs) {
            frontier[static_cast<std::size_t>(q)] = layer + 1;
        }
        r.depth = std::max(r.depth, layer + 1);

        auto &bs = blocks[ins.block];
        if (bs.frontier.empty()) {
            bs.frontier.assign(static_cast<std::size_t>(circuit.n_qubits()), 0);
        }
        long long blayer = 0;
        for (int q : qs) {
            blayer = std::max(blayer, bs.frontier[static_cast<std::size_t>(q)]);
        }
        for (int q : qs) {
            bs.frontier[static_cast<std::size_t>(q)] = blayer + 1;
            bs.qubits.insert(q);
        }
        bs.depth = std::max(bs.depth, blayer + 1);
    }
    for (const auto &[id, bs] : blocks) {
        r.mbqc_qubit_estimate += bs.depth * static_cast<long long>(bs.qubits.size());
    }
    return r;
}

CompressionCheck verify_compressor(int N, int random_trials, std::uint64_t seed) {
    const Compressor comp = build_compressor(N);
    const auto &layout = comp.layout;
    if (layout.n_qubits > kMaxQubits) {
        throw std::invalid_argument("compressor register exceeds the simulator cap");
    }
    CompressionCheck c;
    c.N = N;
    c.lambda = layout.lambda;
    c.n_qubits = layout.n_qubits;
    c.resources = count_resources(comp.circuit);
    for (int k = 1; k <= N; ++k) {
        c.max_step_gates = std::max(c.max_step_gates, static_cast<long long>(build_step(k, layout).size()));
    }

    auto expected_index = [&](int n) {
        const std::string bits = std::string(static_cast<std::size_t>(n), '1') + std::string(static_cast<std::size_t>(N - n), '0');
        return static_cast<Eigen::Index>(compressed_index(layout, classical_compress_oracle(bits)));
    };

    c.basis_total = N + 1;
    for (int n = 0; n <= N; ++n) {
        const auto out = run_circuit(comp.circuit, compressor_input(layout, unary_eigenstate(n, N))).state;
        const double residual = 1.0 - std::norm(out.amps[expected_index(n)]);
        c.worst_basis_residual = std::max(c.worst_basis_residual, residual);
        c.basis_passed += residual <= 1e-12;
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    c.random_trials = random_trials;
    for (int t = 0; t < random_trials; ++t) {
        Eigen::VectorXcd psi(N + 1);
        for (int n = 0; n <= N; ++n) {
            const double re = gauss(rng);
            psi[n] = cplx(re, gauss(rng));
        }
        psi.normalize();
        const auto out = run_circuit(comp.circuit, compressor_input(layout, SubspaceState{N, psi})).state;
        cplx overlap = 0.0;
        for (int n = 0; n <= N; ++n) {
            overlap += std::conj(psi[n]) * out.amps[expected_index(n)];
        }
        c.min_random_fidelity = std::min(c.min_random_fidelity, std::norm(overlap));
    }
    c.passed = c.basis_passed == c.basis_total && c.min_random_fidelity >= 1.0 - 1e-10;
    return c;
}

}  // namespace qmetro
