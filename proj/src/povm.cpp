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

#include "qmetro/povm.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qmetro {

Povm Povm::from_effects(const std::vector<Eigen::MatrixXcd> &effects, std::vector<std::string> labels) {
    if (effects.empty() || effects.size() != labels.size()) {
        throw std::invalid_argument("POVM needs one label per effect");
    }
    Povm p;
    p.dim = static_cast<int>(effects[0].rows());
    p.labels = std::move(labels);
    for (const auto &e : effects) {
        if (e.rows() != p.dim || e.cols() != p.dim) {
            throw std::invalid_argument("POVM effects must share one square shape");
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (e + e.adjoint()));
        const auto &ev = es.eigenvalues();
        if (ev.minCoeff() < -1e-10) {
            throw std::invalid_argument("POVM effect is not positive semidefinite");
        }
        std::vector<Eigen::Index> keep;
        for (Eigen::Index i = 0; i < ev.size(); ++i) {
            if (ev[i] > 1e-14) {
                keep.push_back(i);
            }
        }
        Eigen::MatrixXcd v(p.dim, static_cast<Eigen::Index>(keep.size()));
        for (std::size_t j = 0; j < keep.size(); ++j) {
            v.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(keep[j]) * std::sqrt(ev[keep[j]]);
        }
        p.factors.push_back(std::move(v));
    }
    return p;
}

Eigen::MatrixXcd Povm::effect(int i) const {
    const auto &v = factors.at(static_cast<std::size_t>(i));
    return v * v.adjoint();
}

cplx Povm::trace_with(int i, const Eigen::MatrixXcd &m) const {
    const auto &v = factors.at(static_cast<std::size_t>(i));
    return (v.adjoint() * m * v).trace();
}

double Povm::completeness_error() const {
    Eigen::MatrixXcd s = -Eigen::MatrixXcd::Identity(dim, dim);
    for (int i = 0; i < size(); ++i) {
        s += effect(i);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

double Povm::min_eigenvalue() const {
    double m = 0.0;
    for (int i = 0; i < size(); ++i) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(effect(i), Eigen::EigenvaluesOnly);
        m = std::min(m, es.eigenvalues().minCoeff());
    }
    return m;
}

void Povm::validate(double tol) const {
    if (completeness_error() > tol) {
        throw std::invalid_argument("POVM effects do not sum to the identity");
    }
    if (min_eigenvalue() < -tol) {
        throw std::invalid_argument("POVM effect is not positive semidefinite");
    }
}

Povm qft_povm(int N) {
    if (N < 1) {
        throw std::invalid_argument("QFT POVM needs N >= 1");
    }
    Povm p;
    p.dim = N + 1;
    const double scale = 1.0 / std::sqrt(static_cast<double>(N + 1));
    for (int k = 0; k <= N; ++k) {
        Eigen::MatrixXcd v(N + 1, 1);
        for (int n = 0; n <= N; ++n) {
            v(n, 0) = std::polar(scale, 2.0 * std::numbers::pi * ((static_cast<long long>(n) * k) % (N + 1)) / (N + 1));
        }
        p.factors.push_back(std::move(v));
        p.labels.push_back("k" + std::to_string(k));
    }
    p.factors.emplace_back(N + 1, 0);
    p.labels.emplace_back("completion");
    return p;
}

Povm single_qubit_povm(double theta0) {
    Povm p;
    p.dim = 2;
    const cplx w = std::polar(1.0, theta0 + std::numbers::pi / 2.0);
    for (double s : {1.0, -1.0}) {
        Eigen::MatrixXcd v(2, 1);
        v << 1.0 / std::numbers::sqrt2, s * w / std::numbers::sqrt2;
        p.factors.push_back(std::move(v));
    }
    p.labels = {"+", "-"};
    return p;
}

Povm parity_povm(int N) {
    if (N < 1) {
        throw std::invalid_argument("parity POVM needs N >= 1");
    }
    Povm p;
    p.dim = N + 1;
    for (double s : {1.0, -1.0}) {
        Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(N + 1, N);
        v(0, 0) = 1.0 / std::numbers::sqrt2;
        v(N, 0) = s / std::numbers::sqrt2;
        for (int n = 1; n < N; ++n) {
            v(n, n) = 1.0 / std::numbers::sqrt2;
        }
        p.factors.push_back(std::move(v));
    }
    p.labels = {"even", "odd"};
    return p;
}

Povm classical_parallel_povm(int N, double theta0) {
    if (N < 1 || N > 50) {
        throw std::invalid_argument("classical parallel POVM needs 1 <= N <= 50");
    }
    std::vector<double> binom(static_cast<std::size_t>(N + 1), 1.0);
    for (int k = 1; k <= N; ++k) {
        binom[static_cast<std::size_t>(k)] = binom[static_cast<std::size_t>(k - 1)] * (N - k + 1) / k;
    }
    const cplx w = std::polar(1.0, theta0 + std::numbers::pi / 2.0);
    Povm p;
    p.dim = N + 1;
    for (int m = 0; m <= N; ++m) {
        // Coefficients of (1+x)^{N-m} (1-x)^m are exact integers in double for N <= 50.
        std::vector<double> c(static_cast<std::size_t>(N + 1), 0.0);
        c[0] = 1.0;
        for (int j = 0; j < N; ++j) {
            const double sgn = j < N - m ? 1.0 : -1.0;
            for (int n = j + 1; n >= 1; --n) {
                c[static_cast<std::size_t>(n)] += sgn * c[static_cast<std::size_t>(n - 1)];
            }
        }
        Eigen::MatrixXcd v(N + 1, 1);
        for (int n = 0; n <= N; ++n) {
            const double mag = std::sqrt(binom[static_cast<std::size_t>(m)] / binom[static_cast<std::size_t>(n)]) *
                               std::pow(2.0, -0.5 * N) * c[static_cast<std::size_t>(n)];
            v(n, 0) = mag * std::pow(w, n);
        }
        p.factors.push_back(std::move(v));
        p.labels.push_back("m" + std::to_string(m));
    }
    return p;
}

}  // namespace qmetro
