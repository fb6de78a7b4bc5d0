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

#include "qrw/waves/identities.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "qrw/error.hpp"
#include "qrw/waves/constants.hpp"

namespace qrw::waves {
namespace {

using std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

struct Entry {
    IdentityId id;
    std::string_view name;
    std::string_view alias;
    std::string_view text;
    std::vector<std::string> symbols;
    bool closed;
};

const std::vector<Entry> &table() {
    static const std::vector<Entry> entries = {
        {IdentityId::Eq53, "Eq53", "sine-pair", "i e^(-i theta) - i e^(i theta)", {"theta"}, true},
        {IdentityId::Eq54, "Eq54", "sine-surface", "2 i theta e^(-i x) - 2 i theta e^(i x)", {"theta", "x"}, true},
        {IdentityId::Eq57, "Eq57", "zero-base", "0^(-i pi n) - 0^(i pi n)", {"n"}, false},
        {IdentityId::Eq58, "Eq58", "self-power", "-n^(-i pi n) (-1 + n^(i pi n)) (1 + n^(i pi n))", {"n"}, true},
        {IdentityId::Eq59, "Eq59", "convergence-angle", "i e^(179.21deg (-i)) - i e^(179.21deg i)", {}, false},
        {IdentityId::Eq61, "Eq61", "polar-sine", "2 i (180 ((pi - 1)/2)/pi) e^(-i x) - 2 i (180 ((pi - 1)/2)/pi) e^(i x)", {"x"},
         false},
        {IdentityId::Eq62, "Eq62", "shifted-exp", "e^(-i x) - 2 i", {"x"}, false},
        {IdentityId::Eq63, "Eq63", "log-sine", "n^(-i pi x) - n^(i pi x)", {"n", "x"}, true},
        {IdentityId::Eq64, "Eq64", "mixed-base", "2 e^(-i (pi x)) - theta^(i (pi x))", {"theta", "x"}, false},
        {IdentityId::Eq65, "Eq65", "double-sine", "2 e^(-i pi n) - 2 e^(i pi (n))", {"n"}, true},
        {IdentityId::Eq66, "Eq66", "half-turn", "-i e^(180deg (pi)) / sqrt(2) + e^(-180deg i) x", {"x"}, false},
        {IdentityId::Eq67, "Eq67", "shifted-exp-b", "e^(-i x) - 2 i", {"x"}, false},
        {IdentityId::Eq68, "Eq68", "double-sine-b", "2 e^(-i pi n) - 2 e^(i pi (n))", {"n"}, true},
    };
    return entries;
}

const Entry &entry(IdentityId id) {
    for (const Entry &e : table()) {
        if (e.id == id) {
            return e;
        }
    }
    throw ArgumentError("unknown identity");
}

IdentityValue value(Complex z) { return IdentityValue{z, false}; }

// a - b, indeterminate if either operand is.
IdentityValue minus(const IdentityValue &a, const IdentityValue &b) {
    return IdentityValue{a.value - b.value, a.indeterminate || b.indeterminate};
}

}  // namespace

const std::vector<IdentityId> &all_identities() {
    static const std::vector<IdentityId> ids = [] {
        std::vector<IdentityId> out;
        for (const Entry &e : table()) {
            out.push_back(e.id);
        }
        return out;
    }();
    return ids;
}

std::string_view identity_name(IdentityId id) { return entry(id).name; }

std::string_view identity_alias(IdentityId id) { return entry(id).alias; }

IdentityId parse_identity(std::string_view name) {
    std::string lowered;
    for (char c : name) {
        lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    for (const Entry &e : table()) {
        std::string candidate{e.name};
        std::transform(candidate.begin(), candidate.end(), candidate.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (lowered == candidate || lowered == candidate.substr(2) || lowered == e.alias) {
            return e.id;
        }
    }
    throw ArgumentError("unknown identity '" + std::string(name) + "'");
}

std::string_view identity_text(IdentityId id) { return entry(id).text; }

const std::vector<std::string> &identity_symbols(IdentityId id) { return entry(id).symbols; }

bool has_closed_form(IdentityId id) { return entry(id).closed; }

IdentityValue complex_power(Complex base, Complex exponent) {
    if (base == Complex{0.0, 0.0}) {
        return IdentityValue{Complex{std::nan(""), std::nan("")}, true};
    }
    return value(std::exp(exponent * std::log(base)));
}

IdentityValue eval_identity(IdentityId id, const IdentityInputs &in) {
    const double theta = in.theta;
    const double x = in.x;
    const double n = in.n;
    switch (id) {
        case IdentityId::Eq53:
            return value(kI * std::exp(-kI * theta) - kI * std::exp(kI * theta));
        case IdentityId::Eq54:
            return value(2.0 * kI * theta * std::exp(-kI * x) - 2.0 * kI * theta * std::exp(kI * x));
        case IdentityId::Eq57:
            return minus(complex_power(0.0, -kI * pi * n), complex_power(0.0, kI * pi * n));
        case IdentityId::Eq58: {
            const IdentityValue a = complex_power(n, -kI * pi * n);
            const IdentityValue b = complex_power(n, kI * pi * n);
            return IdentityValue{-a.value * (-1.0 + b.value) * (1.0 + b.value), a.indeterminate || b.indeterminate};
        }
        case IdentityId::Eq59:
            return value(kI * std::exp(kThetaStar * -kI) - kI * std::exp(kThetaStar * kI));
        case IdentityId::Eq61: {
            const double c = 180.0 * ((pi - 1.0) / 2.0) / pi;
            return value(2.0 * kI * c * std::exp(-kI * x) - 2.0 * kI * c * std::exp(kI * x));
        }
        case IdentityId::Eq62:
        case IdentityId::Eq67:
            return value(std::exp(-kI * x) - 2.0 * kI);
        case IdentityId::Eq63:
            return minus(complex_power(n, -kI * pi * x), complex_power(n, kI * pi * x));
        case IdentityId::Eq64:
            return minus(value(2.0 * std::exp(-kI * (pi * x))), complex_power(theta, kI * (pi * x)));
        case IdentityId::Eq65:
        case IdentityId::Eq68:
            return value(2.0 * std::exp(-kI * pi * n) - 2.0 * std::exp(kI * pi * n));
        case IdentityId::Eq66: {
            const double half_turn = radians(180.0);
            return value(-kI * std::exp(Complex{half_turn * pi}) / std::sqrt(2.0) + std::exp(-half_turn * kI) * x);
        }
    }
    throw ArgumentError("unknown identity");
}

Complex closed_form(IdentityId id, const IdentityInputs &in) {
    switch (id) {
        case IdentityId::Eq53:
            return 2.0 * std::sin(in.theta);
        case IdentityId::Eq54:
            return 4.0 * in.theta * std::sin(in.x);
        case IdentityId::Eq58:
            return minus(complex_power(in.n, -kI * pi * in.n), complex_power(in.n, kI * pi * in.n)).value;
        case IdentityId::Eq63:
            return -2.0 * kI * std::sin(pi * in.x * std::log(Complex{in.n}));
        case IdentityId::Eq65:
        case IdentityId::Eq68:
            return -4.0 * kI * std::sin(pi * in.n);
        default:
            throw UnsupportedError(std::string(identity_name(id)) + " has no closed form");
    }
}

std::vector<IdentitySample> sample_grid(IdentityId id, const std::vector<AxisRange> &axes) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < axes.size(); ++i) {
        const AxisRange &a = axes[i];
        if (a.symbol != "theta" && a.symbol != "x" && a.symbol != "n") {
            throw ArgumentError("unknown grid symbol '" + a.symbol + "'");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (axes[j].symbol == a.symbol) {
                throw ArgumentError("grid symbol '" + a.symbol + "' repeated");
            }
        }
        if (!std::isfinite(a.lo) || !std::isfinite(a.hi)) {
            throw ArgumentError("grid range for '" + a.symbol + "' must be finite");
        }
        if (a.points == 0) {
            return {};
        }
        if (total > kMaxGridPoints / a.points) {
            throw ArgumentError("grid exceeds 10^6 points");
        }
        total *= a.points;
    }
    auto coordinate = [](const AxisRange &a, std::size_t k) {
        if (a.points == 1) {
            return a.lo;
        }
        if (k + 1 == a.points) {
            return a.hi;
        }
        return a.lo + (a.hi - a.lo) * static_cast<double>(k) / static_cast<double>(a.points - 1);
    };
    std::vector<IdentitySample> out;
    out.reserve(total);
    std::vector<std::size_t> index(axes.size(), 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        IdentityInputs in;
        for (std::size_t i = 0; i < axes.size(); ++i) {
            const double v = coordinate(axes[i], index[i]);
            if (axes[i].symbol == "theta") {
                in.theta = v;
            } else if (axes[i].symbol == "x") {
                in.x = v;
            } else {
                in.n = v;
            }
        }
        out.push_back(IdentitySample{id, in, eval_identity(id, in)});
        for (std::size_t i = axes.size(); i-- > 0;) {
            if (++index[i] < axes[i].points) {
                break;
            }
            index[i] = 0;
        }
    }
    return out;
}

}  // namespace qrw::waves
