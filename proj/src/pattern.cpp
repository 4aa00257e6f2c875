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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

#include "qmetro/circuit.hpp"
#include "qmetro/mbqc.hpp"

namespace qmetro {

Graph &Graph::add_edge(int a, int b) {
    if (a == b) {
        throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
    }
    if (a < 0 || b < 0 || a >= n_vertices || b >= n_vertices) {
        throw std::invalid_argument("edge references a missing vertex");
    }
    const auto e = std::minmax(a, b);
    if (std::find(edges.begin(), edges.end(), std::pair<int, int>(e.first, e.second)) != edges.end()) {
        throw std::invalid_argument("duplicate edge");
    }
    edges.emplace_back(e.first, e.second);
    return *this;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_vertices));
    for (const auto &[a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    return adj;
}

Graph linear_cluster(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) {
        g.add_edge(v, v + 1);
    }
    return g;
}

Parity Parity::of(std::vector<int> terms, bool constant) {
    Parity p;
    p.constant = constant;
    std::sort(terms.begin(), terms.end());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) {
            ++j;
        }
        if ((j - i) % 2 == 1) {
            p.terms.push_back(terms[i]);
        }
        i = j;
    }
    return p;
}

int Parity::evaluate(const std::vector<int> &outcomes) const {
    int v = constant ? 1 : 0;
    for (int t : terms) {
        v ^= outcomes.at(static_cast<std::size_t>(t)) & 1;
    }
    return v;
}

Parity Parity::operator^(const Parity &other) const {
    std::vector<int> all = terms;
    all.insert(all.end(), other.terms.begin(), other.terms.end());
    return of(std::move(all), constant != other.constant);
}

double AngleSpec::resolve(const std::vector<int> &outcomes) const {
    const double s = sign.evaluate(outcomes) ? -1.0 : 1.0;
    return s * base + std::numbers::pi * offset.evaluate(outcomes);
}

void MeasurementPattern::validate() const {
    const int n = graph.n_vertices;
    std::vector<int> role(static_cast<std::size_t>(n), 0);
    auto check_vertex = [&](int v, const char *what) {
        if (v < 0 || v >= n) {
            throw std::invalid_argument(std::string(what) + " references a missing vertex");
        }
    };
    for (int v : inputs) {
        check_vertex(v, "input");
    }
    if (std::set<int>(inputs.begin(), inputs.end()).size() != inputs.size()) {
        throw std::invalid_argument("repeated input vertex");
    }
    for (int v : outputs) {
        check_vertex(v, "output");
        if (role[static_cast<std::size_t>(v)]++) {
            throw std::invalid_argument("repeated output vertex");
        }
    }
    const int m = num_measured();
    for (int i = 0; i < m; ++i) {
        const auto &pm = measurements[static_cast<std::size_t>(i)];
        check_vertex(pm.vertex, "measurement");
        if (role[static_cast<std::size_t>(pm.vertex)]++) {
            throw std::invalid_argument("vertex " + std::to_string(pm.vertex) + " measured twice or also an output");
        }
        for (const Parity *p : {&pm.angle.sign, &pm.angle.offset}) {
            for (int t : p->terms) {
                if (t < 0 || t >= i) {
                    throw std::invalid_argument("angle of measurement " + std::to_string(i) +
                                                " depends on a later outcome");
                }
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (role[static_cast<std::size_t>(v)] == 0) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " is neither measured nor an output");
        }
    }
    for (const auto &c : corrections) {
        check_vertex(c.vertex, "correction");
        if (std::find(outputs.begin(), outputs.end(), c.vertex) == outputs.end()) {
            throw std::invalid_argument("correction on a non-output vertex");
        }
        for (int t : c.parity.terms) {
            if (t < 0 || t >= m) {
                throw std::invalid_argument("correction depends on a missing outcome");
            }
        }
    }
}

namespace {

/// Rz(a) then H, so reading |s> leaves X^s H Rz(a) on the next vertex.
void rotate_to_measurement_basis(Eigen::VectorXcd &amps, int n, int q, double angle) {
    apply_gate_inplace(amps, n, gates::rz(q, angle));
    apply_gate_inplace(amps, n, gates::h(q));
}

Gate correction_gate(Byproduct op, int q) {
    switch (op) {
        case Byproduct::X: return gates::x(q);
        case Byproduct::Z: return gates::z(q);
        case Byproduct::H: return gates::h(q);
    }
    return gates::x(q);
}

StateVector default_input(const MeasurementPattern &p, const std::optional<StateVector> &input) {
    if (input) {
        if (input->n_qubits < static_cast<int>(p.inputs.size())) {
            throw std::invalid_argument("input register smaller than the pattern's input count");
        }
        return *input;
    }
    return StateVector::plus(static_cast<int>(p.inputs.size()));
}

/// Register holding reference qubits followed by the live vertices.
struct LiveRegister {
    StateVector reg;
    int refs = 0;
    std::vector<int> order;
    double probability = 1.0;
};

class LazyEngine {
public:
    explicit LazyEngine(const MeasurementPattern &p) : p_(p), adj_(p.graph.adjacency()) {
        p_.validate();
        measured_at_.assign(static_cast<std::size_t>(p.graph.n_vertices), -1);
        for (int i = 0; i < p.num_measured(); ++i) {
            measured_at_[static_cast<std::size_t>(p.measurements[static_cast<std::size_t>(i)].vertex)] = i;
        }
    }

    LiveRegister start(const StateVector &input) const {
        LiveRegister live;
        live.reg = input;
        live.refs = input.n_qubits - static_cast<int>(p_.inputs.size());
        live.order = p_.inputs;
        for (std::size_t i = 0; i < p_.inputs.size(); ++i) {
            for (std::size_t j = i + 1; j < p_.inputs.size(); ++j) {
                if (adjacent(p_.inputs[i], p_.inputs[j])) {
                    apply_gate_inplace(live.reg.amps, live.reg.n_qubits,
                                       gates::cz(live.refs + static_cast<int>(i), live.refs + static_cast<int>(j)));
                }
            }
        }
        return live;
    }

    /// Projects measurement i onto outcome s; false for a zero-probability branch.
    bool measure(LiveRegister &live, int i, const std::vector<int> &outcomes) const {
        const auto &pm = p_.measurements[static_cast<std::size_t>(i)];
        ensure_alive(live, pm.vertex);
        for (int w : adj_[static_cast<std::size_t>(pm.vertex)]) {
            if (measured_at_[static_cast<std::size_t>(w)] < 0 || measured_at_[static_cast<std::size_t>(w)] > i) {
                ensure_alive(live, w);
            }
        }
        const int q = position(live, pm.vertex);
        rotate_to_measurement_basis(live.reg.amps, live.reg.n_qubits, q, pm.angle.resolve(outcomes));
        auto br = project_out(live.reg, q, outcomes[static_cast<std::size_t>(i)]);
        live.probability *= br.probability;
        if (br.zero_branch()) {
            return false;
        }
        live.reg = std::move(br.state);
        live.order.erase(live.order.begin() + (q - live.refs));
        return true;
    }

    StateVector finish(LiveRegister &live, const std::vector<int> &outcomes) const {
        for (int v : p_.outputs) {
            ensure_alive(live, v);
        }
        for (const auto &c : p_.corrections) {
            if (c.parity.evaluate(outcomes)) {
                apply_gate_inplace(live.reg.amps, live.reg.n_qubits, correction_gate(c.op, position(live, c.vertex)));
            }
        }
        std::vector<int> perm;
        for (int r = 0; r < live.refs; ++r) {
            perm.push_back(r);
        }
        for (int v : p_.outputs) {
            perm.push_back(position(live, v));
        }
        return permute_qubits(live.reg, perm);
    }

    int num_measured() const { return p_.num_measured(); }

private:
    bool adjacent(int a, int b) const {
        const auto &n = adj_[static_cast<std::size_t>(a)];
        return std::find(n.begin(), n.end(), b) != n.end();
    }

    static int position(const LiveRegister &live, int v) {
        const auto it = std::find(live.order.begin(), live.order.end(), v);
        if (it == live.order.end()) {
            return -1;
        }
        return live.refs + static_cast<int>(it - live.order.begin());
    }

    void ensure_alive(LiveRegister &live, int v) const {
        if (position(live, v) >= 0) {
            return;
        }
        if (live.reg.n_qubits + 1 > kMaxQubits) {
            throw std::invalid_argument("live register exceeds the simulator cap");
        }
        live.reg = tensor(live.reg, StateVector::plus(1));
        live.order.push_back(v);
        const int q = live.reg.n_qubits - 1;
        for (int w : adj_[static_cast<std::size_t>(v)]) {
            const int pw = position(live, w);
            if (pw >= 0 && pw != q) {
                apply_gate_inplace(live.reg.amps, live.reg.n_qubits, gates::cz(pw, q));
            }
        }
    }

    const MeasurementPattern &p_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> measured_at_;
};

void check_outcomes(const MeasurementPattern &p, const std::vector<int> &outcomes) {
    if (static_cast<int>(outcomes.size()) != p.num_measured()) {
        throw std::invalid_argument("outcome assignment length does not match measured vertex count");
    }
}

}  // namespace

StateVector cluster_state(const Graph &graph, const std::vector<int> &inputs, const std::optional<StateVector> &injected) {
    const int n = graph.n_vertices;
    if (n > kMaxQubits) {
        throw std::invalid_argument("cluster exceeds the simulator cap");
    }
    StateVector s;
    if (inputs.empty()) {
        s = StateVector::plus(n);
    } else {
        const StateVector in = injected ? *injected : StateVector::plus(static_cast<int>(inputs.size()));
        if (in.n_qubits != static_cast<int>(inputs.size())) {
            throw std::invalid_argument("injected state does not match the input count");
        }
        s = tensor(in, StateVector::plus(n - in.n_qubits));
        std::vector<int> perm(static_cast<std::size_t>(n), -1);
        std::vector<bool> is_input(static_cast<std::size_t>(n), false);
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            perm[static_cast<std::size_t>(inputs[i])] = static_cast<int>(i);
            is_input[static_cast<std::size_t>(inputs[i])] = true;
        }
        int next = static_cast<int>(inputs.size());
        for (int v = 0; v < n; ++v) {
            if (!is_input[static_cast<std::size_t>(v)]) {
                perm[static_cast<std::size_t>(v)] = next++;
            }
        }
        s = permute_qubits(s, perm);
    }
    for (const auto &[a, b] : graph.edges) {
        apply_gate_inplace(s.amps, n, gates::cz(a, b));
    }
    return s;
}

PatternRun run_pattern(const MeasurementPattern &pattern, const std::vector<int> &outcomes,
                       const std::optional<StateVector> &input) {
    check_outcomes(pattern, outcomes);
    LazyEngine engine(pattern);
    LiveRegister live = engine.start(default_input(pattern, input));
    for (int i = 0; i < pattern.num_measured(); ++i) {
        if (!engine.measure(live, i, outcomes)) {
            return {StateVector::invalid(live.refs + static_cast<int>(pattern.outputs.size())), 0.0};
        }
    }
    return {engine.finish(live, outcomes), live.probability};
}

PatternRun run_pattern_full_cluster(const MeasurementPattern &pattern, const std::vector<int> &outcomes,
                                    const std::optional<StateVector> &input) {
    check_outcomes(pattern, outcomes);
    pattern.validate();
    const StateVector in = default_input(pattern, input);
    const int refs = in.n_qubits - static_cast<int>(pattern.inputs.size());
    const int n = pattern.graph.n_vertices;
    if (refs + n > kMaxQubits) {
        throw std::invalid_argument("full cluster exceeds the simulator cap");
    }
    // Register: references, then vertices 0..n-1.
    std::vector<int> inputs_shifted;
    for (int v : pattern.inputs) {
        inputs_shifted.push_back(v + refs);
    }
    std::vector<int> all_inputs;
    for (int r = 0; r < refs; ++r) {
        all_inputs.push_back(r);
    }
    all_inputs.insert(all_inputs.end(), inputs_shifted.begin(), inputs_shifted.end());
    Graph shifted(refs + n);
    for (const auto &[a, b] : pattern.graph.edges) {
        shifted.add_edge(a + refs, b + refs);
    }
    StateVector s = cluster_state(shifted, all_inputs, in);
    double prob = 1.0;
    for (int i = 0; i < pattern.num_measured(); ++i) {
        const auto &pm = pattern.measurements[static_cast<std::size_t>(i)];
        const int q = pm.vertex + refs;
        rotate_to_measurement_basis(s.amps, s.n_qubits, q, pm.angle.resolve(outcomes));
        auto br = measure_branch(s, q, outcomes[static_cast<std::size_t>(i)]);
        prob *= br.probability;
        if (br.zero_branch()) {
            return {StateVector::invalid(refs + static_cast<int>(pattern.outputs.size())), 0.0};
        }
        s = std::move(br.state);
    }
    for (const auto &c : pattern.corrections) {
        if (c.parity.evaluate(outcomes)) {
            apply_gate_inplace(s.amps, s.n_qubits, correction_gate(c.op, c.vertex + refs));
        }
    }
    std::vector<std::pair<int, int>> measured;
    for (int i = 0; i < pattern.num_measured(); ++i) {
        measured.emplace_back(pattern.measurements[static_cast<std::size_t>(i)].vertex + refs,
                              outcomes[static_cast<std::size_t>(i)]);
    }
    std::sort(measured.rbegin(), measured.rend());
    std::vector<int> remaining(static_cast<std::size_t>(refs + n));
    for (int q = 0; q < refs + n; ++q) {
        remaining[static_cast<std::size_t>(q)] = q;
    }
    for (const auto &[q, outcome] : measured) {
        s = project_out(s, q, outcome).state;
        remaining.erase(remaining.begin() + q);
    }
    std::vector<int> perm;
    for (int r = 0; r < refs; ++r) {
        perm.push_back(r);
    }
    for (int v : pattern.outputs) {
        perm.push_back(static_cast<int>(std::find(remaining.begin(), remaining.end(), v + refs) - remaining.begin()));
    }
    return {permute_qubits(s, perm), prob};
}

namespace {

StateVector choi_input(int k) {
    StateVector s = StateVector::zero(2 * k);
    s.amps[0] = 0.0;
    const double a = 1.0 / std::sqrt(static_cast<double>(std::uint64_t{1} << k));
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
        s.amps[static_cast<Eigen::Index>((x << k) | x)] = a;
    }
    return s;
}

void enumerate(const LazyEngine &engine, LiveRegister live, std::vector<int> &outcomes, int i,
               const StateVector &expected, double tolerance, VerificationReport &rep) {
    if (i == engine.num_measured()) {
        ++rep.branches;
        rep.probability_sum += live.probability;
        const StateVector out = engine.finish(live, outcomes);
        const double f = fidelity_up_to_global_phase(out, expected);
        if (f < rep.min_fidelity) {
            rep.min_fidelity = f;
            rep.worst_branch = outcomes;
        }
        (void)tolerance;
        return;
    }
    for (int s = 0; s < 2; ++s) {
        outcomes[static_cast<std::size_t>(i)] = s;
        LiveRegister next = live;
        if (!engine.measure(next, i, outcomes)) {
            rep.zero_branches += 1LL << (engine.num_measured() - i - 1);
            continue;
        }
        enumerate(engine, std::move(next), outcomes, i + 1, expected, tolerance, rep);
    }
}

}  // namespace

VerificationReport verify_pattern(const MeasurementPattern &pattern, const PatternTarget &target, double tolerance) {
    if (pattern.num_measured() > kMaxVerifiedMeasurements) {
        throw std::invalid_argument("branch enumeration cap exceeded (" + std::to_string(pattern.num_measured()) +
                                    " measured vertices)");
    }
    StateVector input;
    StateVector expected;
    const int k = static_cast<int>(pattern.inputs.size());
    if (const auto *state = std::get_if<StateVector>(&target)) {
        if (k != 0) {
            throw std::invalid_argument("state target given for a pattern with inputs");
        }
        input = StateVector::zero(0);
        expected = *state;
    } else {
        const auto &u = std::get<Eigen::MatrixXcd>(target);
        const auto dim = Eigen::Index{1} << k;
        if (static_cast<int>(pattern.outputs.size()) != k || u.rows() != dim || u.cols() != dim) {
            throw std::invalid_argument("unitary target does not match the pattern's inputs and outputs");
        }
        input = choi_input(k);
        expected = input;
        for (Eigen::Index r = 0; r < dim; ++r) {
            expected.amps.segment(r * dim, dim) = u * input.amps.segment(r * dim, dim);
        }
    }
    LazyEngine engine(pattern);
    VerificationReport rep;
    std::vector<int> outcomes(static_cast<std::size_t>(pattern.num_measured()), 0);
    enumerate(engine, engine.start(input), outcomes, 0, expected, tolerance, rep);
    rep.passed = rep.branches > 0 && rep.min_fidelity >= 1.0 - tolerance &&
                 std::abs(rep.probability_sum - 1.0) <= tolerance;
    return rep;
}

}  // namespace qmetro
