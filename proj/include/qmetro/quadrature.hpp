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

#include <functional>

#include <Eigen/Dense>

namespace qmetro {

struct QuadratureResult {
    Eigen::VectorXd value;
    /// Sum of per-interval Kronrod error estimates (max norm).
    double error = 0.0;
    int evaluations = 0;
    bool converged = false;
};

/// Globally adaptive 7/15-point Gauss-Kronrod on [a, b] for vector-valued
/// integrands. Stops once error <= max(abs_tol, rel_tol * |value|_max).
QuadratureResult integrate_adaptive(const std::function<Eigen::VectorXd(double)> &f, double a, double b,
                                    double rel_tol = 1e-9, double abs_tol = 1e-15, int max_intervals = 4000);

/// Scalar convenience wrapper; throws std::runtime_error on non-convergence.
double integrate(const std::function<double(double)> &f, double a, double b, double rel_tol = 1e-9,
                 double abs_tol = 1e-15);

}  // namespace qmetro
