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

#include "qmetro/circuit.hpp"

using namespace qmetro;

namespace {

constexpr double kPi = std::numbers::pi;

StateVector random_state(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Eigen::VectorXcd v(Eigen::Index{1} << n);
    for (auto &a : v) {
        const double re = g(rng);
        a = cplx(re, g(rng));
    }
    return StateVector::from_amplitudes(n, v.normalized());
}

// Kronecker-product oracle for a single-qubit gate on qubit q (big-endian).
Eigen::MatrixXcd lift(const Eigen::Matrix2cd &u, int q, int n) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (int k = 0; k < n; ++k) {
        const Eigen::MatrixXcd f = k == q ? Eigen::MatrixXcd(u) : Eigen::MatrixXcd::Identity(2, 2);
        Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                next.block(2 * i, 2 * j, 2, 2) = m(i, j) * f;
            }
        }
        m = next;
    }
    return m;
}

}  // namespace

TEST(StateVector, BasisIsBigEndian) {
    const auto s = StateVector::basis(3, 0b100);
    EXPECT_DOUBLE_EQ(probability_one(s, 0), 1.0);
    EXPECT_DOUBLE_EQ(probability_one(s, 2), 0.0);
    EXPECT_EQ(qubit_bit(3, 0), 4u);
}

TEST(StateVector, RejectsOversizedRegister) {
    EXPECT_THROW(StateVector::zero(kMaxQubits + 1), std::invalid_argument);
    EXPECT_THROW(StateVector::zero(-1), std::invalid_argument);
}

TEST(Gates, MatrixConventions) {
    const double a = 0.7;
    const cplx i(0.0, 1.0);
    const Eigen::Matrix2cd rz = gate_matrix(gates::rz(0, a));
    EXPECT_NEAR(std::abs(rz(0, 0) - std::exp(-i * a / 2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(rz(1, 1) - std::exp(i * a / 2.0)), 0.0, 1e-15);
    const Eigen::Matrix2cd ry = gate_matrix(gates::ry(0, a));
    EXPECT_NEAR(ry(0, 1).real(), std::sin(a / 2.0), 1e-15);
    EXPECT_NEAR(ry(1, 0).real(), -std::sin(a / 2.0), 1e-15);
    const Eigen::Matrix2cd rx = gate_matrix(gates::rx(0, a));
    EXPECT_NEAR(std::abs(rx(0, 1) - (-i * std::sin(a / 2.0))), 0.0, 1e-15);
    const Eigen::Matrix2cd pd = gate_matrix(gates::phase_diag(0, 0.3, -0.2));
    EXPECT_NEAR(std::abs(pd(0, 0) - std::exp(i * 0.3)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(pd(1, 1) - std::exp(-i * 0.2)), 0.0, 1e-15);
}

TEST(Gates, SingleQubitMatchesKroneckerOracle) {
    std::mt19937_64 rng(7);
    const int n = 4;
    for (const Gate &g : {gates::h(1), gates::rx(0, 0.3), gates::ry(3, -1.1), gates::rz(2, 2.0), gates::y(1)}) {
        const auto s = random_state(n, rng);
        const auto out = apply_gate(s, g);
        const Eigen::VectorXcd ref = lift(gate_matrix(g), g.targets[0], n) * s.amps;
        EXPECT_LT((out.amps - ref).norm(), 1e-13) << gate_name(g.kind);
    }
}

TEST(Gates, TwoQubitActions) {
    auto s = StateVector::basis(3, 0b110);
    EXPECT_EQ(apply_gate(s, gates::cnot(0, 2)).amps[0b111], cplx(1.0));
    EXPECT_EQ(apply_gate(s, gates::swap(1, 2)).amps[0b101], cplx(1.0));
    EXPECT_EQ(apply_gate(s, gates::cz(0, 1)).amps[0b110], cplx(-1.0));
    EXPECT_EQ(apply_gate(s, gates::toffoli(0, 1, 2)).amps[0b111], cplx(1.0));
    const Gate negctl = gates::mcx({{0, true}, {1, false}}, 2);
    EXPECT_EQ(apply_gate(s, negctl).amps[0b110], cplx(1.0));
    EXPECT_EQ(apply_gate(StateVector::basis(3, 0b100), negctl).amps[0b101], cplx(1.0));
}

TEST(Gates, ValidationRejectsBadIndices) {
    EXPECT_THROW(validate_gate(gates::cnot(1, 1), 3), std::invalid_argument);
    EXPECT_THROW(validate_gate(gates::h(3), 3), std::out_of_range);
    EXPECT_THROW(validate_gate(gates::toffoli(0, 0, 2), 3), std::invalid_argument);
    EXPECT_NO_THROW(validate_gate(gates::toffoli(0, 1, 2), 3));
}

TEST(Gates, AdjointInverts) {
    std::mt19937_64 rng(3);
    const auto s = random_state(3, rng);
    for (const Gate &g : {gates::rx(0, 0.4), gates::ry(1, 1.3), gates::rz(2, -0.8),
                          gates::phase_diag(0, 0.1, 0.9), gates::controlled(gates::ry(2, 0.5), 0)}) {
        const auto back = apply_gate(apply_gate(s, g), adjoint(g));
        EXPECT_LT((back.amps - s.amps).norm(), 1e-14);
    }
}

TEST(Measurement, BranchProbabilitiesSumToOne) {
    std::mt19937_64 rng(11);
    const auto s = random_state(4, rng);
    for (int q = 0; q < 4; ++q) {
        const auto b0 = measure_branch(s, q, 0);
        const auto b1 = measure_branch(s, q, 1);
        EXPECT_NEAR(b0.probability + b1.probability, 1.0, 1e-14);
        EXPECT_NEAR(b1.probability, probability_one(s, q), 1e-14);
        EXPECT_NEAR(b0.state.norm(), 1.0, 1e-14);
        const auto p = project_out(s, q, 1);
        EXPECT_EQ(p.state.n_qubits, 3);
        EXPECT_NEAR(p.probability, b1.probability, 1e-14);
    }
}

TEST(Measurement, ZeroBranchIsFlagged) {
    const auto b = measure_branch(StateVector::zero(2), 0, 1);
    EXPECT_TRUE(b.zero_branch());
    EXPECT_EQ(b.probability, 0.0);
}

TEST(StateOps, PermuteAndTensor) {
    const auto a = StateVector::basis(1, 1);
    const auto b = StateVector::basis(2, 0b01);
    const auto t = tensor(a, b);
    EXPECT_EQ(t.amps[0b101], cplx(1.0));
    const auto p = permute_qubits(t, {2, 0, 1});
    EXPECT_NEAR(std::abs(p.amps[0b110]), 1.0, 1e-15);
}

TEST(StateOps, FidelityIgnoresGlobalPhase) {
    std::mt19937_64 rng(5);
    auto s = random_state(3, rng);
    auto t = s;
    t.amps *= std::polar(1.0, 1.234);
    EXPECT_NEAR(fidelity_up_to_global_phase(s, t), 1.0, 1e-14);
}

TEST(Circuit, ConditionalGatesFollowOutcomes) {
    Circuit c(2);
    c.add(gates::h(0)).measure(0).add_conditional(gates::x(1), {0});
    for (int m = 0; m < 2; ++m) {
        const auto r = run_circuit(c, StateVector::zero(2), {m});
        EXPECT_NEAR(r.probability, 0.5, 1e-15);
        EXPECT_NEAR(std::abs(r.state.amps[m ? 0b11 : 0b00]), 1.0, 1e-15);
    }
}

TEST(Circuit, InverseAndUnitary) {
    Circuit c(3);
    c.add(gates::h(0)).add(gates::cnot(0, 1)).add(gates::ry(2, 0.3)).add(gates::controlled(gates::rz(1, kPi / 3), 2));
    const Eigen::MatrixXcd u = circuit_unitary(c);
    EXPECT_LT((u.adjoint() * u - Eigen::MatrixXcd::Identity(8, 8)).norm(), 1e-13);
    const Eigen::MatrixXcd v = circuit_unitary(inverse(c));
    EXPECT_LT((v * u - Eigen::MatrixXcd::Identity(8, 8)).norm(), 1e-13);
}

TEST(Circuit, MeasurementCounting) {
    Circuit c(2);
    c.measure(0).measure(1);
    EXPECT_EQ(c.num_measurements(), 2);
    EXPECT_THROW(c.add(gates::h(5)), std::out_of_range);
}
