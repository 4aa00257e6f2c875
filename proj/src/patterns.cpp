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

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qmetro/mbqc.hpp"

namespace qmetro {

namespace {

constexpr double kPi = std::numbers::pi;

/// Builds linear wires with a Pauli frame per wire; each J step measures the
/// current vertex and moves the logical qubit one vertex along.
class WireCompiler {
public:
    int add_wire() {
        wires_.push_back({new_vertex(), {}, {}});
        return static_cast<int>(wires_.size()) - 1;
    }

    void j(int w, double angle) {
        Wire &wire = wires_[static_cast<std::size_t>(w)];
        const int next = new_vertex();
        edges_.emplace_back(wire.vertex, next);
        const int m = static_cast<int>(measurements_.size());
        measurements_.push_back({wire.vertex, AngleSpec{angle, wire.x, Parity::zero()}});
        const Parity x = Parity::of({m}) ^ wire.z;
        wire.z = wire.x;
        wire.x = x;
        wire.vertex = next;
    }

    void cz(int w1, int w2) {
        Wire &a = wires_[static_cast<std::size_t>(w1)];
        Wire &b = wires_[static_cast<std::size_t>(w2)];
        edges_.emplace_back(a.vertex, b.vertex);
        a.z = a.z ^ b.x;
        b.z = b.z ^ a.x;
    }

    MeasurementPattern finish(std::string name) const {
        MeasurementPattern p;
        p.name = std::move(name);
        p.graph = Graph(n_vertices_);
        for (const auto &[a, b] : edges_) {
            p.graph.add_edge(a, b);
        }
        p.measurements = measurements_;
        for (const auto &w : wires_) {
            p.outputs.push_back(w.vertex);
        }
        for (const auto &w : wires_) {
            if (!w.x.is_zero()) {
                p.corrections.push_back({w.vertex, Byproduct::X, w.x});
            }
            if (!w.z.is_zero()) {
                p.corrections.push_back({w.vertex, Byproduct::Z, w.z});
            }
        }
        return p;
    }

private:
    struct Wire {
        int vertex;
        Parity x;
        Parity z;
    };

    int new_vertex() { return n_vertices_++; }

    int n_vertices_ = 0;
    std::vector<Wire> wires_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<PatternMeasurement> measurements_;
};

/// Unitary sending t to |0> and the unit vector along Z t - <t|Z|t> t to |1>.
Eigen::Matrix2cd unfold(const Eigen::Vector2cd &t) {
    const Eigen::Matrix2cd z = Eigen::Vector2cd(1.0, -1.0).asDiagonal();
    Eigen::Vector2cd perp = z * t - (t.adjoint() * z * t)(0, 0) * t;
    if (perp.norm() < 1e-12) {
        perp = Eigen::Vector2cd(-std::conj(t[1]), std::conj(t[0]));
    }
    perp.normalize();
    Eigen::Matrix2cd m;
    m.row(0) = t.adjoint();
    m.row(1) = perp.adjoint();
    return m;
}

}  // namespace

std::array<double, 3> j_angles_for_unitary(const Eigen::Matrix2cd &u) {
    const Eigen::Matrix2cd h = (Eigen::Matrix2cd() << 1.0, 1.0, 1.0, -1.0).finished() / std::numbers::sqrt2;
    Eigen::Matrix2cd v = h * u;
    const cplx det = v.determinant();
    if (std::abs(det) < 1e-12) {
        throw std::invalid_argument("J decomposition needs a unitary");
    }
    v /= std::sqrt(det);
    const cplx a = v(0, 0);
    const cplx b = v(0, 1);
    const double a2 = 2.0 * std::atan2(std::abs(b), std::abs(a));
    const double arg_a = std::abs(a) > 1e-14 ? std::arg(a) : 0.0;
    const double arg_b = std::abs(b) > 1e-14 ? std::arg(b) : -kPi / 2.0;
    const double sum = -2.0 * arg_a;
    const double diff = 2.0 * (arg_b + kPi / 2.0);
    return {(sum + diff) / 2.0, a2, (sum - diff) / 2.0};
}

MeasurementPattern teleportation_pattern(double phi, bool undo_hadamard) {
    MeasurementPattern p;
    p.name = "teleportation";
    p.graph = linear_cluster(2);
    p.inputs = {0};
    p.outputs = {1};
    p.measurements = {{0, AngleSpec{phi, {}, {}}}};
    p.corrections = {{1, Byproduct::X, Parity::of({0})}};
    if (undo_hadamard) {
        p.corrections.push_back({1, Byproduct::H, Parity::one()});
    }
    return p;
}

MeasurementPattern yrotation_pattern(double phi) {
    MeasurementPattern p;
    p.name = "yrotation";
    p.graph = linear_cluster(4);
    p.inputs = {0};
    p.outputs = {3};
    p.measurements = {
        {0, AngleSpec{kPi / 2.0, {}, {}}},
        {1, AngleSpec{phi, Parity::of({0}), {}}},
        {2, AngleSpec{kPi / 2.0, Parity::of({1}, true), {}}},
    };
    p.corrections = {
        {3, Byproduct::X, Parity::of({0, 2})},
        {3, Byproduct::Z, Parity::of({1})},
        {3, Byproduct::H, Parity::one()},
    };
    return p;
}

MeasurementPattern cnot_pattern() {
    MeasurementPattern p;
    p.name = "cnot";
    p.graph = Graph(4);
    p.graph.add_edge(0, 2).add_edge(1, 2).add_edge(2, 3);
    p.inputs = {0, 1};
    p.outputs = {0, 3};
    p.measurements = {{1, AngleSpec{}}, {2, AngleSpec{}}};
    p.corrections = {
        {3, Byproduct::X, Parity::of({1})},
        {3, Byproduct::Z, Parity::of({0})},
        {0, Byproduct::Z, Parity::of({0})},
    };
    return p;
}

MeasurementPattern ghz_pattern(int N) {
    if (N < 1) {
        throw std::invalid_argument("GHZ pattern needs N >= 1");
    }
    MeasurementPattern p;
    p.name = "ghz";
    p.graph = linear_cluster(2 * N - 1);
    for (int n = 0; n < N; ++n) {
        p.outputs.push_back(2 * n);
    }
    std::vector<int> seen;
    for (int n = 1; n < N; ++n) {
        p.measurements.push_back({2 * n - 1, AngleSpec{}});
        seen.push_back(n - 1);
        p.corrections.push_back({2 * n, Byproduct::X, Parity::of(seen)});
    }
    return p;
}

MeasurementPattern probe_pattern(const SubspaceState &psi) {
    const AngleSchedule schedule = angles_from_amplitudes(psi);
    WireCompiler wc;

    // H Rz(pi/2) H Rz(a) |+> = cos(phi/2)|0> + sin(phi/2)|1> for a = pi/2 - phi.
    const int first = wc.add_wire();
    wc.j(first, kPi / 2.0 - schedule.phis[0]);
    wc.j(first, kPi / 2.0);

    int prev = first;
    for (int k = 1; k < psi.N; ++k) {
        const double half = schedule.phis[static_cast<std::size_t>(k)] / 2.0;
        const int w = wc.add_wire();
        wc.j(w, half);
        wc.cz(prev, w);
        const Eigen::Vector2cd t(0.5 * (1.0 + std::polar(1.0, half)), 0.5 * (1.0 - std::polar(1.0, half)));
        const auto angles = j_angles_for_unitary(unfold(t / t.norm()));
        for (double a : angles) {
            wc.j(w, a);
        }
        prev = w;
    }
    return wc.finish("probe");
}

MeasurementPattern sine_pattern(int N) {
    MeasurementPattern p = probe_pattern(sine_coefficients(N));
    p.name = "sine";
    return p;
}

}  // namespace qmetro
