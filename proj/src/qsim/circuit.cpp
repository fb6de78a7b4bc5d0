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

#include "qrw/qsim/circuit.hpp"

#include <algorithm>

namespace qrw::qsim {

void Circuit::validate() const {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw ArgumentError("circuit qubit count " + std::to_string(num_qubits) + " outside 1..16");
    }
    for (std::size_t i = 0; i < gates.size(); ++i) {
        try {
            validate_gate(gates[i], num_qubits);
        } catch (const Error &e) {
            throw RunError(i, e);
        }
    }
}

RunResult run(const Circuit &circuit, std::uint64_t seed, std::uint64_t initial_basis,
              const kernels::KernelSet &kernels) {
    circuit.validate();
    MeasurementRng rng(seed);
    RunResult result{StateVector::basis(circuit.num_qubits, initial_basis), {}, seed};
    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        const Gate &gate = circuit.gates[i];
        try {
            if (const auto *m = std::get_if<Measure>(&gate)) {
                MeasureOutcome outcome = measure(result.final_state, m->target, rng, kernels);
                result.measurements.push_back({i, m->target, outcome.bit});
                result.final_state = std::move(outcome.state);
            } else {
                result.final_state = apply_gate(result.final_state, gate, kernels);
            }
        } catch (const RunError &) {
            throw;
        } catch (const Error &e) {
            throw RunError(i, e);
        }
    }
    return result;
}

Circuit paper_circuit() {
    return Circuit{4,
                   {
                       RotateX{kListingPi, 0},
                       RotateX{kListingPi, 0},
                       RotateX{kListingPiShort, 1},
                       Measure{3},
                       InverseCPhaseShift{3, 0},
                       RotateX{kListingHalfPi, 1},
                       RotateX{kListingHalfPiShort, 2},
                       Measure{3},
                   }};
}

Circuit random_circuit(unsigned num_qubits, std::size_t gate_count, std::uint64_t seed) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw ArgumentError("circuit qubit count " + std::to_string(num_qubits) + " outside 1..16");
    }
    MeasurementRng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    auto pick = [&rng](unsigned n) {
        return std::min(static_cast<unsigned>(rng.uniform() * n), n - 1);
    };
    Circuit circuit{num_qubits, {}};
    for (std::size_t i = 0; i < gate_count; ++i) {
        const double kind = rng.uniform();
        const unsigned a = pick(num_qubits);
        unsigned b = num_qubits > 1 ? pick(num_qubits - 1) : 0;
        b += (b >= a) ? 1 : 0;
        if (num_qubits == 1 || kind < 0.45) {
            circuit.gates.push_back(kind < 0.05 ? Gate{Measure{a}} : Gate{RotateX{rng.uniform() * 2.0 * kListingPi, a}});
        } else if (kind < 0.70) {
            circuit.gates.push_back(CNot{a, b});
        } else if (kind < 0.90) {
            circuit.gates.push_back(InverseCPhaseShift{a, b});
        } else {
            circuit.gates.push_back(Measure{a});
        }
    }
    return circuit;
}

StateVector paper_circuit_premeasurement_state() {
    const Circuit circuit = paper_circuit();
    StateVector state = StateVector::basis(circuit.num_qubits, 0);
    for (const Gate &gate : circuit.gates) {
        if (is_measurement(gate)) {
            break;
        }
        state = apply_gate(state, gate);
    }
    return state;
}

}  // namespace qrw::qsim
