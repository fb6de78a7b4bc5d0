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

#pragma once

// Independent brute-force oracles shared by the unit tests and the
// acceptance binary. Nothing here calls into the code under test except to
// read plain data out of its value types.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <queue>
#include <random>
#include <variant>
#include <vector>

#include "qrw/inference/best_first.hpp"
#include "qrw/qsim/circuit.hpp"

namespace qrw::oracle {

using Complex = std::complex<double>;

// ---------------------------------------------------------------- qsim

struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<Complex> a;  // row-major
    Complex &at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    Complex at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
    static DenseMatrix identity(std::size_t dim) {
        DenseMatrix m{dim, std::vector<Complex>(dim * dim)};
        for (std::size_t i = 0; i < dim; ++i) {
            m.at(i, i) = 1.0;
        }
        return m;
    }
};

inline DenseMatrix multiply(const DenseMatrix &x, const DenseMatrix &y) {
    DenseMatrix out{x.dim, std::vector<Complex>(x.dim * x.dim)};
    for (std::size_t r = 0; r < x.dim; ++r) {
        for (std::size_t k = 0; k < x.dim; ++k) {
            const Complex xv = x.at(r, k);
            if (xv == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < x.dim; ++c) {
                out.at(r, c) += xv * y.at(k, c);
            }
        }
    }
    return out;
}

inline std::vector<Complex> apply_dense(const DenseMatrix &m, const std::vector<Complex> &v) {
    std::vector<Complex> out(v.size());
    for (std::size_t r = 0; r < m.dim; ++r) {
        Complex acc{};
        for (std::size_t c = 0; c < m.dim; ++c) {
            acc += m.at(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

/// Full 2^n x 2^n unitary of one non-measurement gate, built element by
/// element from its textbook definition (qubit 0 = least significant bit).
inline DenseMatrix gate_matrix(const qsim::Gate &gate, unsigned n) {
    const std::size_t dim = std::size_t{1} << n;
    DenseMatrix m{dim, std::vector<Complex>(dim * dim)};
    auto bit = [](std::size_t v, unsigned q) { return (v >> q) & 1U; };
    if (const auto *rx = std::get_if<qsim::RotateX>(&gate)) {
        const Complex u[2][2] = {{std::cos(rx->angle / 2), Complex(0, -std::sin(rx->angle / 2))},
                                 {Complex(0, -std::sin(rx->angle / 2)), std::cos(rx->angle / 2)}};
        const std::size_t mask = std::size_t{1} << rx->target;
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                if ((r & ~mask) == (c & ~mask)) {
                    m.at(r, c) = u[bit(r, rx->target)][bit(c, rx->target)];
                }
            }
        }
    } else if (const auto *cx = std::get_if<qsim::CNot>(&gate)) {
        for (std::size_t c = 0; c < dim; ++c) {
            const std::size_t r = bit(c, cx->control) ? c ^ (std::size_t{1} << cx->target) : c;
            m.at(r, c) = 1.0;
        }
    } else if (const auto *ps = std::get_if<qsim::InverseCPhaseShift>(&gate)) {
        const double distance = std::abs(static_cast<double>(ps->control) - static_cast<double>(ps->target));
        const double angle = ps->convention == qsim::PhaseConvention::QubitDistance
                                 ? -std::numbers::pi / std::pow(2.0, distance)
                                 : -ps->explicit_angle;
        for (std::size_t c = 0; c < dim; ++c) {
            m.at(c, c) = bit(c, ps->control) && bit(c, ps->target) ? std::polar(1.0, angle) : Complex(1.0);
        }
    }
    return m;
}

/// Replays `circuit` on |basis> with dense unitary products, forcing each
/// measurement to the recorded bit.
inline std::vector<Complex> dense_run(const qsim::Circuit &circuit, std::uint64_t basis,
                                      const std::vector<qsim::MeasurementRecord> &measurements) {
    const std::size_t dim = std::size_t{1} << circuit.num_qubits;
    std::vector<Complex> psi(dim);
    psi[basis] = 1.0;
    DenseMatrix pending = DenseMatrix::identity(dim);
    std::size_t next_measurement = 0;
    for (std::size_t pos = 0; pos < circuit.gates.size(); ++pos) {
        const qsim::Gate &g = circuit.gates[pos];
        if (const auto *meas = std::get_if<qsim::Measure>(&g)) {
            psi = apply_dense(pending, psi);
            pending = DenseMatrix::identity(dim);
            const int b = measurements.at(next_measurement++).bit;
            double keep = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                if (static_cast<int>((i >> meas->target) & 1U) != b) {
                    psi[i] = 0.0;
                } else {
                    keep += std::norm(psi[i]);
                }
            }
            for (auto &z : psi) {
                z /= std::sqrt(keep);
            }
        } else {
            pending = multiply(gate_matrix(g, circuit.num_qubits), pending);
        }
    }
    return apply_dense(pending, psi);
}

template <class A, class B>
double total_variation(const A &a, const B &b) {
    double tv = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        tv += std::abs(std::norm(a[i]) - std::norm(b[i]));
    }
    return tv / 2.0;
}

// ---------------------------------------------------------------- search

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// Cheapest cost from `start` to any goal node.
inline double dijkstra(const inference::SearchGraph &g, std::size_t start) {
    std::vector<double> dist(g.size(), kUnreachable);
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[start] = 0.0;
    pq.push({0.0, start});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u]) {
            continue;
        }
        if (g.goal[u]) {
            return d;
        }
        for (const auto &e : g.successors[u]) {
            if (d + e.cost < dist[e.to]) {
                dist[e.to] = d + e.cost;
                pq.push({dist[e.to], e.to});
            }
        }
    }
    return kUnreachable;
}

/// Distance from every node to its nearest goal (reverse Dijkstra).
inline std::vector<double> distance_to_goal(const inference::SearchGraph &g) {
    std::vector<std::vector<inference::SearchEdge>> reverse(g.size());
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (const auto &e : g.successors[u]) {
            reverse[e.to].push_back({u, e.cost});
        }
    }
    std::vector<double> dist(g.size(), kUnreachable);
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (std::size_t u = 0; u < g.size(); ++u) {
        if (g.goal[u]) {
            dist[u] = 0.0;
            pq.push({0.0, u});
        }
    }
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u]) {
            continue;
        }
        for (const auto &e : reverse[u]) {
            if (d + e.cost < dist[e.to]) {
                dist[e.to] = d + e.cost;
                pq.push({dist[e.to], e.to});
            }
        }
    }
    return dist;
}

/// Random directed graph with integer edge costs and an admissible
/// heuristic: a random fraction of the true distance to the goal.
inline inference::SearchGraph random_search_graph(std::mt19937_64 &rng, std::size_t max_nodes = 50) {
    std::uniform_int_distribution<std::size_t> size_dist(2, max_nodes);
    const std::size_t n = size_dist(rng);
    inference::SearchGraph g;
    g.successors.resize(n);
    g.goal.assign(n, false);
    std::uniform_int_distribution<std::size_t> node(0, n - 1);
    std::uniform_int_distribution<int> cost(1, 20);
    std::uniform_int_distribution<std::size_t> degree(1, 4);
    for (std::size_t u = 0; u < n; ++u) {
        const std::size_t k = degree(rng);
        for (std::size_t e = 0; e < k; ++e) {
            const std::size_t v = node(rng);
            if (v != u) {
                g.successors[u].push_back({v, static_cast<double>(cost(rng))});
            }
        }
    }
    g.goal[n - 1] = true;
    if (n > 10 && rng() % 2 == 0) {
        g.goal[n / 2] = true;
    }
    const std::vector<double> exact = distance_to_goal(g);
    std::uniform_real_distribution<double> fraction(0.0, 1.0);
    g.heuristic.resize(n);
    for (std::size_t u = 0; u < n; ++u) {
        g.heuristic[u] = std::isfinite(exact[u]) ? std::floor(exact[u] * fraction(rng)) : 0.0;
    }
    return g;
}

// ---------------------------------------------------------------- primes

inline bool is_prime_trial(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

/// pi(n) by a segmented sieve seeded with trial-division base primes.
inline std::uint64_t segmented_pi(std::uint64_t n) {
    if (n < 2) {
        return 0;
    }
    const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))) + 1;
    std::vector<std::uint64_t> base;
    for (std::uint64_t p = 2; p <= root; ++p) {
        if (is_prime_trial(p)) {
            base.push_back(p);
        }
    }
    constexpr std::uint64_t kSegment = 1 << 16;
    std::uint64_t count = 0;
    std::vector<char> composite(kSegment);
    for (std::uint64_t lo = 2; lo <= n; lo += kSegment) {
        const std::uint64_t hi = std::min(n, lo + kSegment - 1);
        std::fill(composite.begin(), composite.end(), 0);
        for (std::uint64_t p : base) {
            std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (std::uint64_t m = start; m <= hi; m += p) {
                composite[m - lo] = 1;
            }
        }
        for (std::uint64_t v = lo; v <= hi; ++v) {
            count += composite[v - lo] ? 0 : 1;
        }
    }
    return count;
}

struct Triplet {
    std::uint64_t p1, p2, p3;
};

/// Every prime triplet (p, p+2, p+6) or (p, p+4, p+6), plus (3,5,7), with
/// largest member <= limit, by trial division.
inline std::vector<Triplet> brute_force_triplets(std::uint64_t limit) {
    std::vector<Triplet> out;
    for (std::uint64_t p = 2; p + 4 <= limit; ++p) {
        if (!is_prime_trial(p)) {
            continue;
        }
        if (is_prime_trial(p + 2) && is_prime_trial(p + 4)) {
            out.push_back({p, p + 2, p + 4});
        } else if (p + 6 <= limit && is_prime_trial(p + 2) && is_prime_trial(p + 6)) {
            out.push_back({p, p + 2, p + 6});
        } else if (p + 6 <= limit && is_prime_trial(p + 4) && is_prime_trial(p + 6)) {
            out.push_back({p, p + 4, p + 6});
        }
    }
    return out;
}

}  // namespace qrw::oracle
