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

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qmetro/probes.hpp"
#include "qmetro/state.hpp"

namespace qmetro {

struct Graph {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges;

    explicit Graph(int n = 0) : n_vertices(n) {}
    /// Throws on self-loops, invalid vertices and duplicate edges.
    Graph &add_edge(int a, int b);
    std::vector<std::vector<int>> adjacency() const;
};

Graph linear_cluster(int n);

/// XOR of earlier measurement outcomes plus a constant bit.
struct Parity {
    bool constant = false;
    std::vector<int> terms;

    static Parity zero() { return {}; }
    static Parity one() { return {true, {}}; }
    static Parity of(std::vector<int> terms, bool constant = false);

    int evaluate(const std::vector<int> &outcomes) const;
    bool is_zero() const { return !constant && terms.empty(); }
    Parity operator^(const Parity &other) const;
    bool operator==(const Parity &) const = default;
};

/// Resolved angle = (-1)^sign * base + pi * offset.
struct AngleSpec {
    double base = 0.0;
    Parity sign;
    Parity offset;

    double resolve(const std::vector<int> &outcomes) const;
    bool operator==(const AngleSpec &) const = default;
};

struct PatternMeasurement {
    int vertex = 0;
    AngleSpec angle;
    bool operator==(const PatternMeasurement &) const = default;
};

enum class Byproduct { X, Z, H };

/// Gate applied to an output vertex after all measurements when its parity is 1.
struct Correction {
    int vertex = 0;
    Byproduct op = Byproduct::X;
    Parity parity;
    bool operator==(const Correction &) const = default;
};

/// Measuring a vertex at angle a applies Rz(a) and H, then reads |s>. On a
/// wire this teleports |psi> to X^s H Rz(a)|psi>.
/// Parity term i refers to the i-th entry of `measurements`.
struct MeasurementPattern {
    std::string name;
    Graph graph;
    std::vector<int> inputs;
    std::vector<int> outputs;
    std::vector<PatternMeasurement> measurements;
    std::vector<Correction> corrections;

    int num_measured() const { return static_cast<int>(measurements.size()); }
    /// Throws std::invalid_argument describing the first violated invariant.
    void validate() const;
};

/// |+> on every vertex (injected state on `inputs`), then CZ on every edge.
StateVector cluster_state(const Graph &graph, const std::vector<int> &inputs = {},
                          const std::optional<StateVector> &injected = std::nullopt);

struct PatternRun {
    StateVector output;
    double probability = 0.0;
    bool zero_branch() const { return !output.valid; }
};

/// Executes the pattern for one outcome assignment and applies corrections.
///
/// `input` holds r reference qubits followed by the pattern inputs (default:
/// |+> on each input, r = 0). The output register is the r reference qubits
/// followed by the outputs in pattern order. Vertices enter the register
/// only when first needed and leave once measured.
PatternRun run_pattern(const MeasurementPattern &pattern, const std::vector<int> &outcomes,
                       const std::optional<StateVector> &input = std::nullopt);

/// Same semantics as run_pattern, built on the full cluster state.
PatternRun run_pattern_full_cluster(const MeasurementPattern &pattern, const std::vector<int> &outcomes,
                                    const std::optional<StateVector> &input = std::nullopt);

/// Target for verification: an output state, or a unitary on inputs -> outputs.
using PatternTarget = std::variant<StateVector, Eigen::MatrixXcd>;

struct VerificationReport {
    long long branches = 0;
    long long zero_branches = 0;
    double min_fidelity = 1.0;
    double probability_sum = 0.0;
    std::vector<int> worst_branch;
    bool passed = false;
};

inline constexpr int kMaxVerifiedMeasurements = 16;

/// Enumerates every outcome branch. Unitary targets are checked on the Choi
/// state: each input is entangled with a reference qubit.
VerificationReport verify_pattern(const MeasurementPattern &pattern, const PatternTarget &target,
                                  double tolerance = 1e-10);

/// Angles (a1, a2, a3) with J(a3) J(a2) J(a1) = U up to global phase, J(a) = H Rz(a).
std::array<double, 3> j_angles_for_unitary(const Eigen::Matrix2cd &u);

/// Single-qubit gate teleportation on a 2-vertex wire. With `undo_hadamard`
/// the output is Rz(phi)|psi>, otherwise H Rz(phi)|psi>.
MeasurementPattern teleportation_pattern(double phi, bool undo_hadamard = false);

/// 4-vertex wire realizing Ry(phi) with adaptive angles pi/2, (-1)^{s1} phi,
/// (-1)^{s2+1} pi/2 and correction X^{s1+s3} Z^{s2} H.
MeasurementPattern yrotation_pattern(double phi);

/// 4-vertex CNOT: vertex 0 control (input and output), 1 target input, 3 target output.
MeasurementPattern cnot_pattern();

/// GHZ state on the even vertices of a (2N-1)-vertex wire.
MeasurementPattern ghz_pattern(int N);

/// Unary probe with real nonnegative amplitudes via the controlled-rotation cascade.
MeasurementPattern probe_pattern(const SubspaceState &psi);

MeasurementPattern sine_pattern(int N);

}  // namespace qmetro
