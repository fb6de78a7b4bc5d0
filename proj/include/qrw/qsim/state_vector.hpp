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
#include <cstdint>
#include <span>
#include <vector>

namespace qrw::qsim {

using Complex = std::complex<double>;

inline constexpr unsigned kMaxQubits = 16;
inline constexpr double kNormTolerance = 1e-10;

/// Amplitudes of an n-qubit register. Qubit 0 is the least significant bit of
/// the basis index, so basis index 0b0110 has qubits 1 and 2 set.
///
/// Values are immutable once built; gate application returns a new vector.
class StateVector {
   public:
    /// |basis_index> on `num_qubits` qubits. Throws ArgumentError when either
    /// value is out of range.
    static StateVector basis(unsigned num_qubits, std::uint64_t basis_index);

    /// Adopts `amplitudes`, checking the length is 2^num_qubits and the norm is
    /// one within kNormTolerance.
    static StateVector from_amplitudes(unsigned num_qubits, std::vector<Complex> amplitudes);

    unsigned num_qubits() const noexcept { return num_qubits_; }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    Complex operator[](std::size_t index) const { return amplitudes_[index]; }

    double norm_squared() const;

   private:
    friend class StateBuilder;
    StateVector(unsigned num_qubits, std::vector<Complex> amplitudes)
        : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

    unsigned num_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

/// Mutable scratch copy used by gate application; `finish()` hands the
/// amplitudes back as a StateVector without re-validating them.
class StateBuilder {
   public:
    explicit StateBuilder(const StateVector &from) : num_qubits_(from.num_qubits_), amplitudes_(from.amplitudes_) {}
    std::span<Complex> amplitudes() noexcept { return amplitudes_; }
    StateVector finish() && { return StateVector(num_qubits_, std::move(amplitudes_)); }

   private:
    unsigned num_qubits_;
    std::vector<Complex> amplitudes_;
};

StateVector new_register(unsigned num_qubits, std::uint64_t basis_index);

/// Entry i is |amplitude_i|^2.
std::vector<double> probabilities(const StateVector &state);

/// |<a|b>|; equals one exactly when the states agree up to a global phase.
double overlap_magnitude(const StateVector &a, const StateVector &b);

}  // namespace qrw::qsim
