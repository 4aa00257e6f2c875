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
#include <vector>

#include "qmetro/circuit.hpp"
#include "qmetro/probes.hpp"

namespace qmetro {

/// Register map of the unary-to-binary compressor.
///
/// Physical line: u_1, W, u_2, ..., u_N with the work block
/// W = b_0, c_1, b_1, c_2, ..., c_{lambda-1}, b_{lambda-1}. After each step
/// the next unary qubit is swapped up past W, so after step N the block sits
/// at positions N..N+2*lambda-2.
struct CompressorLayout {
    int N = 0;
    int lambda = 0;
    int n_qubits = 0;
    /// Input positions of u_1..u_N.
    std::vector<int> unary;
    /// Final positions of the binary register, most significant bit first.
    std::vector<int> binary;
    /// Final positions of the carry ancillas c_1..c_{lambda-1}.
    std::vector<int> carry;

    static CompressorLayout make(int N);
};

struct ResourceReport {
    long long gate_count = 0;
    long long toffoli_count = 0;
    long long depth = 0;
    long long mbqc_qubit_estimate = 0;
};

/// ceil(log2(N + 1)).
int binary_width(int N);

/// Block A_k of the compressor (1 <= k <= N), gates tagged with block k.
Circuit build_step(int k, const CompressorLayout &layout);

struct Compressor {
    Circuit circuit;
    CompressorLayout layout;
};

Compressor build_compressor(int N);

/// Popcount of a unary bitstring such as "1110000"; throws on malformed input.
int classical_compress_oracle(const std::string &bits);

/// Places a subspace state on the compressor's unary inputs, all else |0>.
StateVector compressor_input(const CompressorLayout &layout, const SubspaceState &psi);

/// Index of the basis state holding binary value n with all other qubits |0>.
std::uint64_t compressed_index(const CompressorLayout &layout, int n);

struct RegisterExtract {
    /// lambda-qubit state read off the binary register.
    StateVector binary;
    /// Weight found with any non-binary qubit in |1>.
    double leakage = 0.0;
    /// Weight on binary values above N.
    double out_of_range = 0.0;
};

RegisterExtract extract_binary_register(const CompressorLayout &layout, const StateVector &state);

/// Textbook QFT on lambda qubits: matrix entries e^{2 pi i j k / 2^lambda} / sqrt(2^lambda).
Circuit build_qft(int lambda);

struct CompressionCheck {
    int N = 0;
    int lambda = 0;
    int n_qubits = 0;
    /// Unary inputs whose output is the expected basis state with probability 1 - 1e-12.
    int basis_passed = 0;
    int basis_total = 0;
    /// Largest 1 - |<expected|out>|^2 over the unary inputs.
    double worst_basis_residual = 0.0;
    int random_trials = 0;
    /// Smallest |<expected|out>|^2 over the random superpositions.
    double min_random_fidelity = 1.0;
    ResourceReport resources;
    /// Largest gate count of a single step.
    long long max_step_gates = 0;
    bool passed = false;
};

/// Runs every unary basis input and `random_trials` seeded random
/// superpositions through the compressor and compares against the classical
/// popcount oracle.
CompressionCheck verify_compressor(int N, int random_trials = 20, std::uint64_t seed = 1);

/// Gate, Toffoli and depth counts; the MBQC estimate sums depth x width over blocks.
ResourceReport count_resources(const Circuit &circuit);

}  // namespace qmetro
