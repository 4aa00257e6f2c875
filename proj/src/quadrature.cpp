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

#include "qmetro/quadrature.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <stdexcept>

namespace qmetro {

namespace {

// 15-point Kronrod nodes (nonnegative half) and weights; odd entries are the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780, 0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Interval {
    double a;
    double b;
    Eigen::VectorXd value;
    double error;
    bool operator<(const Interval &o) const { return error < o.error; }
};

Interval gk15(const std::function<Eigen::VectorXd(double)> &f, double a, double b, int &evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    Eigen::VectorXd fc = f(c);
    Eigen::VectorXd k = kKronrod[7] * fc;
    Eigen::VectorXd g = kGauss[3] * fc;
    evals += 15;
    for (int j = 0; j < 7; ++j) {
        const Eigen::VectorXd s = f(c - h * kNodes[static_cast<std::size_t>(j)]) + f(c + h * kNodes[static_cast<std::size_t>(j)]);
        k += kKronrod[static_cast<std::size_t>(j)] * s;
        if (j % 2 == 1) {
            g += kGauss[static_cast<std::size_t>(j / 2)] * s;
        }
    }
    k *= h;
    g *= h;
    return {a, b, k, (k - g).cwiseAbs().maxCoeff()};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<Eigen::VectorXd(double)> &f, double a, double b,
                                    double rel_tol, double abs_tol, int max_intervals) {
    if (!(b > a)) {
        throw std::invalid_argument("integration interval must satisfy b > a");
    }
    QuadratureResult r;
    std::priority_queue<Interval> heap;
    heap.push(gk15(f, a, b, r.evaluations));
    Eigen::VectorXd total = heap.top().value;
    double error = heap.top().error;
    while (static_cast<int>(heap.size()) < max_intervals) {
        if (error <= std::max(abs_tol, rel_tol * total.cwiseAbs().maxCoeff())) {
            r.converged = true;
            break;
        }
        Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Interval left = gk15(f, worst.a, mid, r.evaluations);
        Interval right = gk15(f, mid, worst.b, r.evaluations);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(std::move(left));
        heap.push(std::move(right));
    }
    // Re-sum to shed drift from the running updates.
    r.value = Eigen::VectorXd::Zero(total.size());
    r.error = 0.0;
    while (!heap.empty()) {
        r.value += heap.top().value;
        r.error += heap.top().error;
        heap.pop();
    }
    r.converged = r.converged || r.error <= std::max(abs_tol, rel_tol * r.value.cwiseAbs().maxCoeff());
    return r;
}

double integrate(const std::function<double(double)> &f, double a, double b, double rel_tol, double abs_tol) {
    const auto r = integrate_adaptive([&](double x) { return Eigen::VectorXd::Constant(1, f(x)); }, a, b, rel_tol,
                                      abs_tol);
    if (!r.converged) {
        throw std::runtime_error("quadrature did not converge");
    }
    return r.value[0];
}

}  // namespace qmetro
