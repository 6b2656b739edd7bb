// Copyright 2026 The qfi-mzi developers.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Difference-intensity detection for the interferometer closed by a balanced
 * second splitter: observable mean slope, variance, phase sensitivity and
 * the optimal working point.  Dual-coherent input only; the detectors are
 * ideal.
 */

#pragma once

#include "qfi/core.hpp"

namespace qfi::detection {

/// Working point: input splitter, dual-coherent input, total internal phase.
struct DetectionPoint {
  BeamSplitter bs;
  DualCoherent input;
  double phi = 0.0;
};

/// C_d = |TR| (1 - varpi^2) + (1 - 2|T|^2) varpi sin(dtheta); the sin(phi)
/// coefficient of the observable slope.
double slope_coefficient(const BeamSplitter& bs, const DualCoherent& in);

/// |d<N_d>/d phi| = 2 |alpha|^2 |C_d sin(phi) + varpi cos(dtheta) cos(phi)|.
double nd_mean_derivative(const DetectionPoint& p);

/// Var(N_d) = |alpha|^2 (1 + varpi^2); independent of phi and tau.
double nd_variance(const DetectionPoint& p);

/**
 * Error-propagation phase sensitivity
 * sqrt(1 + varpi^2) / (2 |alpha| |C_d sin(phi) + varpi cos(dtheta) cos(phi)|).
 * Throws Error(insensitive_point) where the slope vanishes.
 */
double delta_phi_diff(const DetectionPoint& p);

struct PhiOpt {
  double phi;
  /// Set when varpi cos(dtheta) = 0: the arctan form degenerates and the
  /// sin-phi-only extremum phi = pi/2 is returned.
  bool sin_fringe;
};

/// Working point maximizing the slope: arctan(C_d / (varpi cos(dtheta))),
/// principal value.  At this phi the sensitivity reaches 1/sqrt(F).
PhiOpt phi_opt(const BeamSplitter& bs, const DualCoherent& in);

}  // namespace qfi::detection
