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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qmetro/mbqc.hpp"

using namespace qmetro;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::MatrixXcd single(const Gate &g) { return Eigen::MatrixXcd(gate_matrix(g)); }

std::vector<int> bits(int mask, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        out.push_back((mask >> i) & 1);
    }
    return out;
}

}  // namespace

TEST(Graph, RejectsBadEdges) {
    Graph g(3);
    g.add_edge(0, 1);
    EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 3), std::invalid_argument);
    EXPECT_THROW(g.add_edge(1, 0), std::invalid_argument);
    EXPECT_EQ(linear_cluster(4).edges.size(), 3u);
}

TEST(Parity, EvaluateAndCombine) {
    const auto p = Parity::of({0, 2, 2});
    EXPECT_EQ(p, Parity::of({0}));
    EXPECT_EQ(p.evaluate({1, 0, 1}), 1);
    const auto q = p ^ Parity::of({0}, true);
    EXPECT_EQ(q, Parity::one());
}

TEST(AngleSpec, Resolve) {
    const AngleSpec a{0.3, Parity::of({0}), Parity::of({1})};
    EXPECT_NEAR(a.resolve({0, 0}), 0.3, 1e-15);
    EXPECT_NEAR(a.resolve({1, 0}), -0.3, 1e-15);
    EXPECT_NEAR(a.resolve({1, 1}), kPi - 0.3, 1e-15);
}

TEST(Cluster, StabilizersHold) {
    // K_v = X_v prod Z_u over neighbours; check <K_v> = 1 on a 4-vertex wire.
    const Graph g = linear_cluster(4);
    const auto s = cluster_state(g);
    const auto adj = g.adjacency();
    for (int v = 0; v < 4; ++v) {
        auto t = apply_gate(s, gates::x(v));
        for (int u : adj[static_cast<std::size_t>(v)]) {
            t = apply_gate(t, gates::z(u));
        }
        EXPECT_NEAR(std::abs(s.amps.dot(t.amps) - cplx(1.0)), 0.0, 1e-13);
    }
}

TEST(Patterns, ValidateCatchesOrdering) {
    MeasurementPattern p = teleportation_pattern(0.2);
    EXPECT_NO_THROW(p.validate());
    p.measurements[0].angle.sign = Parity::of({0});
    EXPECT_THROW(p.validate(), std::invalid_argument);
    MeasurementPattern q = teleportation_pattern(0.2);
    q.corrections.push_back({0, Byproduct::X, Parity::one()});
    EXPECT_THROW(q.validate(), std::invalid_argument);
}

TEST(Patterns, TeleportationRealizesRz) {
    for (double phi : {0.0, 0.4, -2.2}) {
        EXPECT_TRUE(verify_pattern(teleportation_pattern(phi, true), single(gates::rz(0, phi))).passed);
        const Eigen::MatrixXcd hrz = single(gates::h(0)) * single(gates::rz(0, phi));
        EXPECT_TRUE(verify_pattern(teleportation_pattern(phi, false), hrz).passed);
        EXPECT_FALSE(verify_pattern(teleportation_pattern(phi, false), single(gates::rz(0, phi + 0.5))).passed);
    }
}

TEST(Patterns, YRotationRandomAngles) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int i = 0; i < 10; ++i) {
        const double phi = u(rng);
        const auto rep = verify_pattern(yrotation_pattern(phi), single(gates::ry(0, phi)));
        EXPECT_TRUE(rep.passed) << phi;
        EXPECT_EQ(rep.branches, 8);
        EXPECT_NEAR(rep.probability_sum, 1.0, 1e-10);
    }
}

TEST(Patterns, Cnot) {
    Circuit c(2);
    c.add(gates::cnot(0, 1));
    const auto rep = verify_pattern(cnot_pattern(), circuit_unitary(c));
    EXPECT_TRUE(rep.passed);
    EXPECT_GE(rep.min_fidelity, 1.0 - 1e-10);
}

TEST(Patterns, GhzWire) {
    for (int N = 1; N <= 4; ++N) {
        const auto p = ghz_pattern(N);
        EXPECT_EQ(p.graph.n_vertices, 2 * N - 1);
        EXPECT_TRUE(verify_pattern(p, ghz_state(N)).passed) << N;
    }
}

TEST(Patterns, SineSizes) {
    for (int N = 1; N <= 6; ++N) {
        const auto p = sine_pattern(N);
        EXPECT_EQ(p.graph.n_vertices, 5 * N - 2);
        EXPECT_EQ(p.num_measured(), 4 * N - 2);
        EXPECT_LE(p.graph.n_vertices, 3 * (4 * N - 2));
        EXPECT_NO_THROW(p.validate());
    }
}

TEST(Patterns, SineDeterministic) {
    for (int N = 1; N <= 3; ++N) {
        const auto rep = verify_pattern(sine_pattern(N), embed_unary(sine_coefficients(N)));
        EXPECT_TRUE(rep.passed) << N;
        EXPECT_EQ(rep.zero_branches, 0);
    }
}

TEST(Patterns, GenericProbe) {
    Eigen::VectorXcd c(4);
    c << 0.1, 0.7, 0.2, 0.5;
    const auto psi = SubspaceState::from_coeffs(c.normalized());
    EXPECT_TRUE(verify_pattern(probe_pattern(psi), embed_unary(psi)).passed);
    // Eigenstates exercise the degenerate branch of the unfolding step.
    EXPECT_TRUE(verify_pattern(probe_pattern(unary_eigenstate(2, 3)), embed_unary(unary_eigenstate(2, 3))).passed);
}

TEST(Patterns, JAnglesReproduceUnitary) {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    for (int t = 0; t < 20; ++t) {
        Eigen::Matrix2cd m;
        for (auto &x : m.reshaped()) {
            const double re = g(rng);
            x = cplx(re, g(rng));
        }
        const Eigen::Matrix2cd u = Eigen::HouseholderQR<Eigen::Matrix2cd>(m).householderQ();
        const auto a = j_angles_for_unitary(u);
        Eigen::Matrix2cd w = Eigen::Matrix2cd::Identity();
        for (double ang : a) {
            w = gate_matrix(gates::h(0)) * gate_matrix(gates::rz(0, ang)) * w;
        }
        const cplx phase = (u.adjoint() * w).trace() / 2.0;
        EXPECT_NEAR(std::abs(phase), 1.0, 1e-12);
    }
}

TEST(Runner, LazyMatchesFullCluster) {
    const auto p = sine_pattern(2);
    for (int mask : {0, 5, 17, 63}) {
        const auto a = run_pattern(p, bits(mask, p.num_measured()));
        const auto b = run_pattern_full_cluster(p, bits(mask, p.num_measured()));
        EXPECT_NEAR(a.probability, b.probability, 1e-13);
        EXPECT_NEAR(fidelity_up_to_global_phase(a.output, b.output), 1.0, 1e-12);
    }
}

TEST(Runner, WrongOutcomeCountThrows) {
    EXPECT_THROW(run_pattern(ghz_pattern(3), {0}), std::invalid_argument);
}

TEST(Runner, BranchProbabilitiesAreUniform) {
    const auto p = ghz_pattern(4);
    for (int mask = 0; mask < 8; ++mask) {
        EXPECT_NEAR(run_pattern(p, bits(mask, 3)).probability, 1.0 / 8.0, 1e-13);
    }
}

TEST(Verify, RejectsTooManyMeasurements) {
    EXPECT_THROW(verify_pattern(sine_pattern(5), embed_unary(sine_coefficients(5))), std::invalid_argument);
}
