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

#include <numbers>

namespace qrw::waves {

/// Angle read off the y-axis convergence plot, in degrees.
inline constexpr double kConvergenceAngleDeg = 179.21;
/// Vertical angle reported with it, in degrees.
inline constexpr double kVerticalAngleDeg = 89.21;
/// Approximate vector length at the convergence point.
inline constexpr double kConvergenceVectorLength = -1.45e8;
/// Coordinates of the convergence point.
inline constexpr double kConvergenceX = -1.45e8;
inline constexpr double kConvergenceY = 2.0e5;
/// Near-zero intersection values quoted as wavelengths at theta = 180 deg.
inline constexpr double kLambdaRadio = 2.0e-2;
inline constexpr double kLambdaUltraviolet = 2.45e-16;
/// Constant term of the closed form of phi, printed to three decimals.
inline constexpr double kPhiConstant = 12.511;
/// Constant of the derivative relation, printed to one decimal.
inline constexpr double kPhiRootConstant = 387.9;

inline constexpr double radians(double degrees) { return degrees * std::numbers::pi / 180.0; }
inline constexpr double degrees(double radians) { return radians * 180.0 / std::numbers::pi; }

/// The convergence angle in radians.
inline constexpr double kThetaStar = radians(kConvergenceAngleDeg);

}  // namespace qrw::waves
