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
#include <vector>

#include "qrw/kernels/kernels.hpp"

namespace qrw::waves {

/// Displacement of a string of density `density` and stiffness `young` on a
/// uniform grid with fixed (zero) ends, at two consecutive time levels.
struct WaveField {
    double dx = 1.0;
    double dt = 1.0;
    double young = 1.0;
    double density = 1.0;
    std::vector<double> previous;
    std::vector<double> current;
    std::size_t step = 0;

    /// sqrt(young / density).
    double speed() const;
    /// speed * dt / dx.
    double courant() const;
    /// Throws ConfigurationError for non-positive parameters, mismatched
    /// levels, fewer than 3 points, or courant() > 1.
    void validate() const;
};

/// A Gaussian pulse exp(-((x - center)/width)^2) travelling towards +x:
/// `previous` holds the pulse shifted back by speed * dt.
WaveField gaussian_pulse(std::size_t points, double dx, double young, double density, double courant, double center,
                         double width);

/// Advances `steps` leapfrog steps of density * psi_tt = young * psi_xx.
/// Throws ConfigurationError before stepping if the field is invalid.
WaveField propagate_wave(WaveField field, std::size_t steps,
                         const kernels::KernelSet &kernels = kernels::active_kernels());

/// Discrete energy between the two stored levels: kinetic
/// (density/2) sum ((cur - prev)/dt)^2 dx plus potential
/// (young/2) sum (cur' * prev') dx with forward differences. Conserved
/// exactly by the leapfrog update up to rounding.
double wave_energy(const WaveField &field);

/// Location of the largest sample refined by a parabola through its
/// neighbours.
double peak_position(const std::vector<double> &samples, double dx);

struct SpeedMeasurement {
    double expected = 0.0;
    double measured = 0.0;
    double relative_error = 0.0;
};

/// Launches a pulse, tracks its peak over a run that keeps it clear of the
/// ends, and compares the mean peak speed with sqrt(young/density).
SpeedMeasurement measure_pulse_speed(double young, double density, double courant = 0.5,
                                     const kernels::KernelSet &kernels = kernels::active_kernels());

}  // namespace qrw::waves
