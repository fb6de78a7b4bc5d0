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

#include "qrw/qsim/gate.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qrw/error.hpp"

namespace qrw::qsim {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void check_index(unsigned index, unsigned num_qubits) {
    if (index >= num_qubits) {
        throw ArgumentError("qubit index " + std::to_string(index) + " out of range for " +
                            std::to_string(num_qubits) + " qubits");
    }
}

void check_pair(unsigned control, unsigned target, unsigned num_qubits) {
    check_index(control, num_qubits);
    check_index(target, num_qubits);
    if (control == target) {
        throw ArgumentError("control and target are both qubit " + std::to_string(control));
    }
}

std::string format_angle(double angle) {
    std::ostringstream out;
    out.precision(15);
    out << angle;
    return out.str();
}

}  // namespace

kernels::Matrix2 rotate_x_matrix(double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    return {Complex{c, 0.0}, Complex{0.0, -s}, Complex{0.0, -s}, Complex{c, 0.0}};
}

Complex inverse_phase_factor(const InverseCPhaseShift &gate) {
    double phi = gate.explicit_angle;
    if (gate.convention == PhaseConvention::QubitDistance) {
        const unsigned distance = gate.control > gate.target ? gate.control - gate.target : gate.target - gate.control;
        phi = std::numbers::pi / std::ldexp(1.0, static_cast<int>(distance));
    }
    return std::polar(1.0, -phi);
}

void validate_gate(const Gate &gate, unsigned num_qubits) {
    std::visit(overloaded{
                   [&](const RotateX &g) { check_index(g.target, num_qubits); },
                   [&](const CNot &g) { check_pair(g.control, g.target, num_qubits); },
                   [&](const InverseCPhaseShift &g) { check_pair(g.control, g.target, num_qubits); },
                   [&](const Measure &g) { check_index(g.target, num_qubits); },
               },
               gate);
}

bool is_measurement(const Gate &gate) { return std::holds_alternative<Measure>(gate); }

std::string describe(const Gate &gate) {
    return std::visit(
        overloaded{
            [](const RotateX &g) { return "RotateX(" + format_angle(g.angle) + ", " + std::to_string(g.target) + ")"; },
            [](const CNot &g) { return "CNot(" + std::to_string(g.control) + ", " + std::to_string(g.target) + ")"; },
            [](const InverseCPhaseShift &g) {
                return "InverseCPhaseShift(" + std::to_string(g.control) + ", " + std::to_string(g.target) + ")";
            },
            [](const Measure &g) { return "Measure(" + std::to_string(g.target) + ")"; },
        },
        gate);
}

StateVector apply_gate(const StateVector &state, const Gate &gate, const kernels::KernelSet &kernels) {
    validate_gate(gate, state.num_qubits());
    if (is_measurement(gate)) {
        throw ContractError("Measure is not a unitary gate; use measure()");
    }
    StateBuilder next(state);
    std::visit(overloaded{
                   [&](const RotateX &g) { kernels.apply_matrix(next.amplitudes(), g.target, rotate_x_matrix(g.angle)); },
                   [&](const CNot &g) { kernels.apply_cnot(next.amplitudes(), g.control, g.target); },
                   [&](const InverseCPhaseShift &g) {
                       const std::uint64_t mask = (std::uint64_t{1} << g.control) | (std::uint64_t{1} << g.target);
                       kernels.apply_phase(next.amplitudes(), mask, inverse_phase_factor(g));
                   },
                   [](const Measure &) {},
               },
               gate);
    return std::move(next).finish();
}

namespace {

StateVector collapse_onto(const StateVector &state, unsigned qubit, int bit, double branch_probability,
                          const kernels::KernelSet &kernels) {
    if (!(branch_probability >= 1e-300)) {
        throw RenormalizationError("branch probability " + std::to_string(branch_probability) + " for qubit " +
                                   std::to_string(qubit) + " = " + std::to_string(bit) + " is degenerate");
    }
    StateBuilder next(state);
    kernels.collapse(next.amplitudes(), qubit, bit != 0, 1.0 / std::sqrt(branch_probability));
    return std::move(next).finish();
}

}  // namespace

MeasureOutcome measure(const StateVector &state, unsigned qubit, MeasurementRng &rng,
                       const kernels::KernelSet &kernels) {
    validate_gate(Measure{qubit}, state.num_qubits());
    const double p1 = kernels.probability_of_one(state.amplitudes(), qubit);
    const double p0 = kernels.norm_squared(state.amplitudes()) - p1;
    const int bit = rng.uniform() < p1 ? 1 : 0;
    return MeasureOutcome{bit, collapse_onto(state, qubit, bit, bit ? p1 : p0, kernels), p1};
}

StateVector project(const StateVector &state, unsigned qubit, int bit, const kernels::KernelSet &kernels) {
    validate_gate(Measure{qubit}, state.num_qubits());
    const double p1 = kernels.probability_of_one(state.amplitudes(), qubit);
    const double p0 = kernels.norm_squared(state.amplitudes()) - p1;
    return collapse_onto(state, qubit, bit, bit ? p1 : p0, kernels);
}

}  // namespace qrw::qsim
