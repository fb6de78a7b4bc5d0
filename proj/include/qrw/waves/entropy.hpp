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

#include <optional>
#include <string>
#include <vector>

namespace qrw::waves {

/// -sum p log2 p, with 0 log 0 = 0. Throws ArgumentError unless entries are
/// finite, >= 0 and sum to 1 within 1e-9.
double entropy_state(const std::vector<double> &p);

/// sum P_i H_i for a valid distribution P. Throws ArgumentError on a length
/// mismatch or invalid P.
double entropy_source(const std::vector<double> &p, const std::vector<double> &h);

struct AxiomReport {
    bool passed = true;
    /// "positivity", "symmetry", "homogeneity" or "additivity".
    std::string axiom;
    /// Indices into the sample of the vectors involved.
    std::vector<std::size_t> vectors;
    double residual = 0.0;
};

/// Checks the dot product over the sample: (x,x) > 0 for x != 0, and on
/// every ordered pair (x_i, x_j): (x,y) = (y,x), (a x, y) = a (x, y), and
/// (x + y, z) = (x, z) + (y, z) with z = x_((i+j) mod n), within 1e-10
/// relative to the magnitudes involved. Reports the first violation. Throws
/// ArgumentError when dimensions differ.
AxiomReport inner_product_axioms(const std::vector<std::vector<double>> &sample, double alpha);

}  // namespace qrw::waves
