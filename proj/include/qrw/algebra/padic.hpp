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

#include <cstdint>
#include <vector>

namespace qrw::algebra {

/// Base-p digits of m, least significant first; [] for m = 0. Throws
/// ArgumentError when p is not prime.
std::vector<std::uint64_t> padic_digits(std::uint64_t m, std::uint64_t p);

/// sum digits[i] p^i.
std::uint64_t padic_value(const std::vector<std::uint64_t> &digits, std::uint64_t p);

/// Integers mod q satisfy every field axiom (exhaustive check). Throws
/// ArgumentError unless 2 <= q <= 97.
bool field_check(std::uint64_t q);

}  // namespace qrw::algebra
