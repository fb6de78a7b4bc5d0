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

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qrw::waves {

using Complex = std::complex<double>;

enum class IdentityId { Eq53, Eq54, Eq57, Eq58, Eq59, Eq61, Eq62, Eq63, Eq64, Eq65, Eq66, Eq67, Eq68 };

/// All members in declaration order.
const std::vector<IdentityId> &all_identities();

/// "Eq53", ...
std::string_view identity_name(IdentityId id);
/// Descriptive name, e.g. "sine-pair".
std::string_view identity_alias(IdentityId id);

/// Inverse of identity_name and identity_alias (case-insensitive; "53" also
/// accepted). Throws ArgumentError for unknown names.
IdentityId parse_identity(std::string_view name);
/// The expression as printed, in plain text.
std::string_view identity_text(IdentityId id);
/// Free symbols read by the evaluator, a subset of "theta", "x", "n".
const std::vector<std::string> &identity_symbols(IdentityId id);
bool has_closed_form(IdentityId id);

/// Parameter values in radians. Unused symbols are ignored.
struct IdentityInputs {
    double theta = 0.0;
    double x = 0.0;
    double n = 0.0;
};

/// A complex value, or an indeterminate form (a zero base raised to a
/// complex power).
struct IdentityValue {
    Complex value{0.0, 0.0};
    bool indeterminate = false;
};

/// b^w on the principal branch, exp(w Log b); indeterminate for b = 0.
IdentityValue complex_power(Complex base, Complex exponent);

/// Literal evaluation of the printed expression. Degree-marked exponents
/// (Eq59, Eq61, Eq66) are converted to radians.
IdentityValue eval_identity(IdentityId id, const IdentityInputs &in);

/// Simplified form of a flagged member. Throws UnsupportedError otherwise.
Complex closed_form(IdentityId id, const IdentityInputs &in);

struct AxisRange {
    std::string symbol;  // "theta", "x" or "n"
    double lo = 0.0;
    double hi = 0.0;
    std::size_t points = 0;
};

struct IdentitySample {
    IdentityId id;
    IdentityInputs inputs;
    IdentityValue value;
};

inline constexpr std::size_t kMaxGridPoints = 1'000'000;

/// Evaluates `id` on the Cartesian product of inclusive linspaces, first
/// axis slowest. An axis with zero points yields an empty grid. Throws
/// ArgumentError for unknown symbols, repeated axes, or more than 10^6
/// points.
std::vector<IdentitySample> sample_grid(IdentityId id, const std::vector<AxisRange> &axes);

}  // namespace qrw::waves
