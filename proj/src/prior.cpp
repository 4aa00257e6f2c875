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

#include "qmetro/prior.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qmetro/quadrature.hpp"

namespace qmetro {

namespace {

constexpr double kPi = std::numbers::pi;

double gaussian_pdf(double x, double sigma) {
    return std::exp(-0.5 * x * x / (sigma * sigma)) / (std::sqrt(2.0 * kPi) * sigma);
}

double wrapped_sum(const Prior &p, double theta) {
    double s = 0.0;
    for (int q = -p.images; q <= p.images; ++q) {
        s += gaussian_pdf(theta - p.theta0 + 2.0 * kPi * q, p.sigma);
    }
    return s;
}

double wrapped_derivative(const Prior &p, double theta) {
    double s = 0.0;
    for (int q = -p.images; q <= p.images; ++q) {
        const double x = theta - p.theta0 + 2.0 * kPi * q;
        s -= x / (p.sigma * p.sigma) * gaussian_pdf(x, p.sigma);
    }
    return p.norm * s;
}

double wrap_to_window(double theta, double centre) {
    return theta - 2.0 * kPi * std::round((theta - centre) / (2.0 * kPi));
}

}  // namespace

Prior Prior::gaussian(double theta0, double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("Gaussian prior needs sigma > 0");
    }
    return {PriorKind::Gaussian, theta0, sigma};
}

Prior Prior::wrapped_gaussian(double theta0, double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("wrapped Gaussian prior needs sigma > 0");
    }
    Prior p{PriorKind::WrappedGaussian, theta0, sigma};
    p.images = static_cast<int>(std::floor((2.0 * kPi + 10.0 * sigma) / (2.0 * kPi)));
    p.norm = 1.0;
    const double total = integrate([&](double t) { return wrapped_sum(p, t); }, theta0 - kPi, theta0 + kPi, 1e-13);
    p.norm = 1.0 / total;
    return p;
}

Prior Prior::flat(double theta0) { return {PriorKind::Flat, theta0, kPi / std::sqrt(3.0)}; }

double Prior::density(double theta) const {
    switch (kind) {
        case PriorKind::Gaussian: return gaussian_pdf(theta - theta0, sigma);
        case PriorKind::WrappedGaussian: return norm * wrapped_sum(*this, wrap_to_window(theta, theta0));
        case PriorKind::Flat: return 1.0 / (2.0 * kPi);
    }
    return 0.0;
}

std::pair<double, double> Prior::support() const {
    if (kind == PriorKind::Gaussian) {
        return {theta0 - 10.0 * sigma, theta0 + 10.0 * sigma};
    }
    return {theta0 - kPi, theta0 + kPi};
}

cplx Prior::characteristic(int k) const {
    switch (kind) {
        case PriorKind::Gaussian:
        case PriorKind::WrappedGaussian:
            return std::polar(std::exp(-0.5 * k * k * sigma * sigma), k * theta0);
        case PriorKind::Flat: return k == 0 ? 1.0 : 0.0;
    }
    return 0.0;
}

double prior_fisher_information(const Prior &prior) {
    switch (prior.kind) {
        case PriorKind::Gaussian: return 1.0 / (prior.sigma * prior.sigma);
        case PriorKind::Flat: return 0.0;
        case PriorKind::WrappedGaussian: break;
    }
    const auto [a, b] = prior.support();
    return integrate(
        [&](double t) {
            const double p = prior.density(t);
            if (p < 1e-300) {
                return 0.0;
            }
            const double dp = wrapped_derivative(prior, t);
            return dp * dp / p;
        },
        a, b, 1e-10, 1e-14);
}

}  // namespace qmetro
