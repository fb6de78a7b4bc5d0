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

namespace qrw::primes {

/// Offset logarithmic integral: the integral of 1/ln x from 2 to n, by
/// adaptive Gauss-Kronrod quadrature. Throws DomainError for n < 2 or
/// non-finite n.
double li(double n);

}  // namespace qrw::primes
