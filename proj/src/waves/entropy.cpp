// Copyright 2026 The QRW Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrw/waves/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "qrw/error.hpp"

namespace qrw::waves {
namespace {

void require_distribution(const std::vector<double> &p) {
    if (p.empty()) {
        throw ArgumentError("distribution is empty");
    }
    double total = 0.0;
    for (double v : p) {
        if (!std::isfinite(v) || v < 0.0) {
            throw ArgumentError("probabilities must be finite and non-negative");
        }
        total += v;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw ArgumentError("probabilities sum to " + std::to_string(total) + ", not 1");
    }
}

double dot(const std::vector<double> &a, const std::vector<double> &b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

double abs_dot(const std::vector<double> &a, const std::vector<double> &b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::abs(a[i] * b[i]);
    }
    return s;
}

bool close(double lhs, double rhs, double scale) { return std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, scale); }

}  // namespace

double entropy_state(const std::vector<double> &p) {
    require_distribution(p);
    double h = 0.0;
    for (double v : p) {
        if (v > 0.0) {
            h -= v * std::log2(v);
        }
    }
    return h;
}

double entropy_source(const std::vector<double> &p, const std::vector<double> &h) {
    if (p.size() != h.size()) {
        throw ArgumentError("state distribution and entropies differ in length");
    }
    require_distribution(p);
    double total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        total += p[i] * h[i];
    }
    return total;
}

AxiomReport inner_product_axioms(const std::vector<std::vector<double>> &sample, double alpha) {
    const std::size_t n = sample.size();
    for (const auto &v : sample) {
        if (v.size() != sample.front().size()) {
            throw ArgumentError("sample vectors must share one dimension");
        }
    }
    auto fail = [](const char *axiom, std::vector<std::size_t> idx, double residual) {
        return AxiomReport{false, axiom, std::move(idx), residual};
    };
    for (std::size_t i = 0; i < n; ++i) {
        const auto &x = sample[i];
        const bool nonzero = std::any_of(x.begin(), x.end(), [](double v) { return v != 0.0; });
        if (nonzero && !(dot(x, x) > 0.0)) {
            return fail("positivity", {i}, dot(x, x));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto &x = sample[i];
            const auto &y = sample[j];
            const double scale = abs_dot(x, y);
            if (!close(dot(x, y), dot(y, x), scale)) {
                return fail("symmetry", {i, j}, dot(x, y) - dot(y, x));
            }
            std::vector<double> ax(x);
            for (double &v : ax) {
                v *= alpha;
            }
            if (!close(dot(ax, y), alpha * dot(x, y), std::abs(alpha) * scale)) {
                return fail("homogeneity", {i, j}, dot(ax, y) - alpha * dot(x, y));
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<double> sum(sample[i]);
            for (std::size_t d = 0; d < sum.size(); ++d) {
                sum[d] += sample[j][d];
            }
            const std::size_t k = (i + j) % n;
            const auto &z = sample[k];
            const double lhs = dot(sum, z);
            const double rhs = dot(sample[i], z) + dot(sample[j], z);
            if (!close(lhs, rhs, abs_dot(sample[i], z) + abs_dot(sample[j], z))) {
                return fail("additivity", {i, j, k}, lhs - rhs);
            }
        }
    }
    return {};
}

}  // namespace qrw::waves
