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

#include "qrw/waves/wave_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qrw/error.hpp"

namespace qrw::waves {

double WaveField::speed() const { return std::sqrt(young / density); }

double WaveField::courant() const { return speed() * dt / dx; }

void WaveField::validate() const {
    if (!(dx > 0.0) || !(dt > 0.0) || !(young > 0.0) || !(density > 0.0) || !std::isfinite(dx) ||
        !std::isfinite(dt) || !std::isfinite(young) || !std::isfinite(density)) {
        throw ConfigurationError("wave field parameters must be positive and finite");
    }
    if (previous.size() != current.size() || current.size() < 3) {
        throw ConfigurationError("wave field needs two levels of equal size >= 3");
    }
    if (courant() > 1.0) {
        throw ConfigurationError("CFL condition violated: v dt / dx = " + std::to_string(courant()) + " > 1");
    }
}

WaveField gaussian_pulse(std::size_t points, double dx, double young, double density, double courant, double center,
                         double width) {
    WaveField f;
    f.dx = dx;
    f.young = young;
    f.density = density;
    f.dt = courant * dx / std::sqrt(young / density);
    f.previous.resize(points);
    f.current.resize(points);
    const double shift = f.speed() * f.dt;
    for (std::size_t i = 0; i < points; ++i) {
        const double x = static_cast<double>(i) * dx;
        f.current[i] = std::exp(-std::pow((x - center) / width, 2));
        f.previous[i] = std::exp(-std::pow((x + shift - center) / width, 2));
    }
    f.current.front() = f.current.back() = 0.0;
    f.previous.front() = f.previous.back() = 0.0;
    f.validate();
    return f;
}

WaveField propagate_wave(WaveField field, std::size_t steps, const kernels::KernelSet &kernels) {
    field.validate();
    const double c = field.courant();
    const double courant_sq = c * c;
    std::vector<double> next(field.current.size());
    for (std::size_t s = 0; s < steps; ++s) {
        kernels.leapfrog_step(field.previous, field.current, next, courant_sq);
        std::swap(field.previous, field.current);
        std::swap(field.current, next);
        ++field.step;
    }
    return field;
}

double wave_energy(const WaveField &field) {
    const auto &u0 = field.previous;
    const auto &u1 = field.current;
    double kinetic = 0.0;
    double potential = 0.0;
    for (std::size_t i = 0; i < u1.size(); ++i) {
        const double vel = (u1[i] - u0[i]) / field.dt;
        kinetic += vel * vel;
    }
    for (std::size_t i = 0; i + 1 < u1.size(); ++i) {
        potential += (u1[i + 1] - u1[i]) * (u0[i + 1] - u0[i]) / (field.dx * field.dx);
    }
    return 0.5 * field.density * kinetic * field.dx + 0.5 * field.young * potential * field.dx;
}

double peak_position(const std::vector<double> &samples, double dx) {
    if (samples.empty()) {
        throw ArgumentError("no samples");
    }
    const auto it = std::max_element(samples.begin(), samples.end());
    const std::size_t i = static_cast<std::size_t>(it - samples.begin());
    double offset = 0.0;
    if (i > 0 && i + 1 < samples.size()) {
        const double a = samples[i - 1];
        const double b = samples[i];
        const double c = samples[i + 1];
        const double denom = a - 2.0 * b + c;
        if (denom != 0.0) {
            offset = 0.5 * (a - c) / denom;
        }
    }
    return (static_cast<double>(i) + offset) * dx;
}

SpeedMeasurement measure_pulse_speed(double young, double density, double courant,
                                     const kernels::KernelSet &kernels) {
    constexpr std::size_t kPoints = 4001;
    constexpr double kLength = 40.0;
    constexpr double kCenter = 10.0;
    constexpr double kWidth = 1.0;
    constexpr double kTravel = 20.0;
    const double dx = kLength / static_cast<double>(kPoints - 1);
    WaveField field = gaussian_pulse(kPoints, dx, young, density, courant, kCenter, kWidth);
    const double start = peak_position(field.current, dx);
    const auto steps = static_cast<std::size_t>(std::lround(kTravel / (field.speed() * field.dt)));
    field = propagate_wave(std::move(field), steps, kernels);
    const double end = peak_position(field.current, dx);
    SpeedMeasurement m;
    m.expected = std::sqrt(young / density);
    m.measured = (end - start) / (static_cast<double>(steps) * field.dt);
    m.relative_error = std::abs(m.measured - m.expected) / m.expected;
    return m;
}

}  // namespace qrw::waves
