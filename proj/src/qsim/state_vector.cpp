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

#include "qrw/qsim/state_vector.hpp"

#include <cmath>
#include <string>

#include "qrw/error.hpp"
#include "qrw/kernels/kernels.hpp"

namespace qrw::qsim {

StateVector StateVector::basis(unsigned num_qubits, std::uint64_t basis_index) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw ArgumentError("qubit count " + std::to_string(num_qubits) + " outside 1..16");
    }
    const std::uint64_t dimension = std::uint64_t{1} << num_qubits;
    if (basis_index >= dimension) {
        throw ArgumentError("basis index " + std::to_string(basis_index) + " outside 0.." +
                            std::to_string(dimension - 1));
    }
    std::vector<Complex> amplitudes(dimension);
    amplitudes[basis_index] = 1.0;
    return StateVector(num_qubits, std::move(amplitudes));
}

StateVector StateVector::from_amplitudes(unsigned num_qubits, std::vector<Complex> amplitudes) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw ArgumentError("qubit count " + std::to_string(num_qubits) + " outside 1..16");
    }
    if (amplitudes.size() != (std::size_t{1} << num_qubits)) {
        throw ArgumentError("expected " + std::to_string(std::size_t{1} << num_qubits) + " amplitudes, got " +
                            std::to_string(amplitudes.size()));
    }
    StateVector state(num_qubits, std::move(amplitudes));
    const double norm = state.norm_squared();
    if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
        throw ArgumentError("amplitudes are not normalized (norm^2 = " + std::to_string(norm) + ")");
    }
    return state;
}

double StateVector::norm_squared() const { return kernels::scalar_kernels().norm_squared(amplitudes_); }

StateVector new_register(unsigned num_qubits, std::uint64_t basis_index) {
    return StateVector::basis(num_qubits, basis_index);
}

std::vector<double> probabilities(const StateVector &state) {
    std::vector<double> out(state.dimension());
    kernels::active_kernels().probabilities(state.amplitudes(), out);
    return out;
}

double overlap_magnitude(const StateVector &a, const StateVector &b) {
    if (a.dimension() != b.dimension()) {
        throw ArgumentError("overlap of registers with different sizes");
    }
    Complex inner{0.0, 0.0};
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        inner += std::conj(a[i]) * b[i];
    }
    return std::abs(inner);
}

}  // namespace qrw::qsim
