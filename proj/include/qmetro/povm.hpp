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

#include "qmetro/state.hpp"

namespace qmetro {

/// POVM on the (N+1)-dimensional unary subspace, stored as factors E_i = V_i V_i^dagger.
struct Povm {
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<Eigen::MatrixXcd> factors;

    /// Factorizes each PSD effect; throws on negative eigenvalues below -1e-10.
    static Povm from_effects(const std::vector<Eigen::MatrixXcd> &effects, std::vector<std::string> labels);

    int size() const { return static_cast<int>(factors.size()); }
    Eigen::MatrixXcd effect(int i) const;
    /// Tr(E_i M).
    cplx trace_with(int i, const Eigen::MatrixXcd &m) const;
    /// Operator norm of sum(E_i) - I.
    double completeness_error() const;
    double min_eigenvalue() const;
    /// Throws std::invalid_argument when completeness or positivity fails at tol.
    void validate(double tol = 1e-10) const;
};

/// Fourier basis |e_k> = sum_n e^{2 pi i n k/(N+1)} |n>/sqrt(N+1), k = 0..N,
/// plus the (zero on the subspace) completion effect.
Povm qft_povm(int N);

/// N = 1 optimal measurement: (|0> +- e^{i(theta0 + pi/2)}|1>)/sqrt(2).
Povm single_qubit_povm(double theta0);

/// X-parity of all qubits restricted to the unary subspace.
Povm parity_povm(int N);

/// Product measurement of every qubit in the single-qubit basis above, grouped
/// by the number m of "-" outcomes, on the symmetric (Dicke) subspace.
/// Use with product_probe(N). N <= 50.
Povm classical_parallel_povm(int N, double theta0);

}  // namespace qmetro
