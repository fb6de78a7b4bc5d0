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
#include <random>
#include <string>
#include <variant>

#include "qrw/kernels/kernels.hpp"
#include "qrw/qsim/state_vector.hpp"

namespace qrw::qsim {

/// Rotation about the x axis: [[cos a/2, -i sin a/2], [-i sin a/2, cos a/2]].
struct RotateX {
    double angle = 0.0;
    unsigned target = 0;
};

/// Flips `target` when `control` is 1.
struct CNot {
    unsigned control = 0;
    unsigned target = 1;
};

enum class PhaseConvention {
    /// Phase angle -pi / 2^|control - target|, the inverse-QFT controlled phase.
    QubitDistance,
    /// Phase angle -explicit_angle.
    Explicit,
};

/// diag(1, 1, 1, e^{-i phi}) on (control, target).
struct InverseCPhaseShift {
    unsigned control = 0;
    unsigned target = 1;
    PhaseConvention convention = PhaseConvention::QubitDistance;
    double explicit_angle = 0.0;
};

struct Measure {
    unsigned target = 0;
};

using Gate = std::variant<RotateX, CNot, InverseCPhaseShift, Measure>;

/// Seeded source for measurement sampling; owned by a single run.
class MeasurementRng {
   public:
    explicit MeasurementRng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform double in [0, 1) with 53 random bits, identical on every platform.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

   private:
    std::mt19937_64 engine_;
};

kernels::Matrix2 rotate_x_matrix(double angle);

/// The phase multiplier applied by an InverseCPhaseShift when both qubits are 1.
Complex inverse_phase_factor(const InverseCPhaseShift &gate);

/// Throws ArgumentError if any index is >= num_qubits or control == target.
void validate_gate(const Gate &gate, unsigned num_qubits);

bool is_measurement(const Gate &gate);

/// Listing-style rendering, e.g. "RotateX(3.14159265358979, 0)".
std::string describe(const Gate &gate);

/// Applies a unitary gate. Throws ContractError for Measure.
StateVector apply_gate(const StateVector &state, const Gate &gate,
                       const kernels::KernelSet &kernels = kernels::active_kernels());

struct MeasureOutcome {
    int bit = 0;
    StateVector state;
    /// Pre-measurement probability of reading 1 on the qubit.
    double probability_of_one = 0.0;
};

/// Samples `qubit`, zeroes the inconsistent amplitudes and renormalizes by the
/// square root of the branch probability. Branch probabilities below 1e-300
/// raise RenormalizationError.
MeasureOutcome measure(const StateVector &state, unsigned qubit, MeasurementRng &rng,
                       const kernels::KernelSet &kernels = kernels::active_kernels());

/// Collapse onto a chosen outcome instead of sampling one.
StateVector project(const StateVector &state, unsigned qubit, int bit,
                    const kernels::KernelSet &kernels = kernels::active_kernels());

}  // namespace qrw::qsim
