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

#include "qmetro/classical.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/mpfr.hpp>

namespace qmetro {

namespace {

namespace mp = boost::multiprecision;

template <unsigned Digits>
using Real = mp::number<mp::mpfr_float_backend<Digits>, mp::et_off>;

// The alternating sums lose about N bits to cancellation, so the working
// precision has to grow with N.
template <class R>
ClassicalParallel parallel_terms(int N, double sigma_d) {
    const R sigma(sigma_d);
    const R s2 = sigma * sigma;

    std::vector<R> e(static_cast<std::size_t>(N + 1));
    for (int a = 0; a <= N; ++a) {
        e[static_cast<std::size_t>(a)] = exp(-R(a) * R(a) * s2 / 2);
    }

    // I_n = E[sin^n], J_n = E[theta sin^n] under N(0, sigma^2).
    std::vector<R> I(static_cast<std::size_t>(N + 1), R(0));
    std::vector<R> J(static_cast<std::size_t>(N + 1), R(0));
    std::vector<R> row{R(1)};
    for (int n = 0; n <= N; ++n) {
        if (n > 0) {
            std::vector<R> next(static_cast<std::size_t>(n + 1));
            next[0] = next[static_cast<std::size_t>(n)] = R(1);
            for (int l = 1; l < n; ++l) {
                next[static_cast<std::size_t>(l)] = row[static_cast<std::size_t>(l - 1)] + row[static_cast<std::size_t>(l)];
            }
            row.swap(next);
        }
        // row holds C(n, .).
        if (n % 2 == 0) {
            const int h = n / 2;
            R acc = row[static_cast<std::size_t>(h)];
            for (int l = 0; l < h; ++l) {
                const R t = 2 * row[static_cast<std::size_t>(l)] * e[static_cast<std::size_t>(n - 2 * l)];
                acc += ((h - l) % 2 == 0) ? t : R(-t);
            }
            I[static_cast<std::size_t>(n)] = ldexp(acc, -n);
        }
        if (n + 1 <= N && n % 2 == 0) {
            // J_{n+1} = (n+1) sigma^2 E[sin^n cos], row holds C(n, .).
            const int h = n / 2;
            R acc = row[static_cast<std::size_t>(h)] * e[1];
            for (int l = 0; l < h; ++l) {
                const R t = row[static_cast<std::size_t>(l)] *
                            (e[static_cast<std::size_t>(n - 2 * l - 1)] + e[static_cast<std::size_t>(n - 2 * l + 1)]);
                acc += ((h - l) % 2 == 0) ? t : R(-t);
            }
            J[static_cast<std::size_t>(n + 1)] = R(n + 1) * s2 * ldexp(acc, -n);
        }
    }

    // c holds the coefficients of (1+x)^{N-m} (1-x)^m; w = C(N,m) / 2^N.
    std::vector<R> c(row.begin(), row.end());
    if (N == 0) {
        c = {R(1)};
    }
    R w = ldexp(R(1), -N);
    ClassicalParallel out;
    R explained(0);
    for (int m = 0; m <= N; ++m) {
        if (m > 0) {
            std::vector<R> q(static_cast<std::size_t>(N), R(0));
            q[0] = c[0];
            for (int n = 1; n < N; ++n) {
                q[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n)] - q[static_cast<std::size_t>(n - 1)];
            }
            c[0] = q[0];
            for (int n = 1; n < N; ++n) {
                c[static_cast<std::size_t>(n)] = q[static_cast<std::size_t>(n)] - q[static_cast<std::size_t>(n - 1)];
            }
            c[static_cast<std::size_t>(N)] = -q[static_cast<std::size_t>(N - 1)];
            w = w * R(N - m + 1) / R(m);
        }
        R p(0);
        R g(0);
        for (int n = 0; n <= N; n += 2) {
            p += c[static_cast<std::size_t>(n)] * I[static_cast<std::size_t>(n)];
        }
        for (int n = 1; n <= N; n += 2) {
            g += c[static_cast<std::size_t>(n)] * J[static_cast<std::size_t>(n)];
        }
        p *= w;
        g *= w;
        out.probabilities.push_back(static_cast<double>(p));
        out.gammas.push_back(static_cast<double>(g));
        if (p > 0) {
            explained += g * g / p;
        }
    }
    out.variance = static_cast<double>(s2 - explained);
    return out;
}

}  // namespace

ClassicalParallel classical_parallel_terms(int N, double sigma) {
    if (N < 1 || N > kClassicalMaxN) {
        throw std::invalid_argument("classical parallel strategy needs 1 <= N <= 256");
    }
    if (!(sigma > 0.0) || sigma > 50.0) {
        throw std::invalid_argument("classical parallel strategy needs 0 < sigma <= 50");
    }
    if (N <= 64) {
        return parallel_terms<Real<80>>(N, sigma);
    }
    if (N <= 160) {
        return parallel_terms<Real<140>>(N, sigma);
    }
    return parallel_terms<Real<240>>(N, sigma);
}

double classical_parallel_variance(int N, double sigma) {
    if (!(sigma > 0.0) || sigma > 1.5) {
        throw std::invalid_argument("classical parallel variance needs 0 < sigma <= 1.5");
    }
    return classical_parallel_terms(N, sigma).variance;
}

double van_trees_bound(int N, double sigma) {
    if (N < 0 || !(sigma > 0.0)) {
        throw std::invalid_argument("van Trees bound needs N >= 0 and sigma > 0");
    }
    return sigma * sigma / (1.0 + N * sigma * sigma);
}

double van_trees_bound_generic(double prior_fisher, double fisher) {
    if (prior_fisher < 0.0 || fisher < 0.0 || prior_fisher + fisher <= 0.0) {
        throw std::invalid_argument("van Trees bound needs nonnegative information with a positive sum");
    }
    return 1.0 / (prior_fisher + fisher);
}

double classical_relative_deviation(int N, double sigma) {
    const double bound = van_trees_bound(N, sigma);
    return (classical_parallel_variance(N, sigma) - bound) / bound;
}

}  // namespace qmetro
