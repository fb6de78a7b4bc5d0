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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qrw/error.hpp"
#include "qrw/qsim/gate.hpp"
#include "qrw/qsim/state_vector.hpp"

namespace qrw::qsim {

// Angle literals of the reference listing, kept digit for digit.
inline constexpr double kListingPi = 3.14159265358979;
inline constexpr double kListingPiShort = 3.14159;
inline constexpr double kListingHalfPi = 1.5707963267949;
inline constexpr double kListingHalfPiShort = 1.5708;

/// Amplitude the reference run reports for basis state |010>.
inline constexpr Complex kReportedAmplitude010{-1.0, 0.0};

struct Circuit {
    unsigned num_qubits = 1;
    std::vector<Gate> gates;

    void validate() const;
};

struct MeasurementRecord {
    std::size_t position = 0;
    unsigned qubit = 0;
    int bit = 0;

    friend bool operator==(const MeasurementRecord &, const MeasurementRecord &) = default;
};

struct RunResult {
    StateVector final_state;
    std::vector<MeasurementRecord> measurements;
    std::uint64_t seed = 0;
};

/// Raised by run(); wraps the failing gate's error with its position.
class RunError : public Error {
   public:
    RunError(std::size_t position, const Error &cause)
        : Error(cause.kind(), "gate " + std::to_string(position) + ": " + cause.what()), position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

/// Runs `circuit` from |initial_basis> applying gates in order.
RunResult run(const Circuit &circuit, std::uint64_t seed, std::uint64_t initial_basis = 0,
              const kernels::KernelSet &kernels = kernels::active_kernels());

/// The four-qubit reference circuit: two full-precision pi rotations on qubit
/// 0, a 3.14159 rotation on qubit 1, measure 3, inverse controlled phase
/// (3, 0), quarter turns on qubits 1 and 2, measure 3.
Circuit paper_circuit();

/// Seeded random circuit mixing all four gate kinds; identical for equal
/// arguments on every platform.
Circuit random_circuit(unsigned num_qubits, std::size_t gate_count, std::uint64_t seed);

/// State of the reference circuit just before its first measurement.
StateVector paper_circuit_premeasurement_state();

}  // namespace qrw::qsim
