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
 * Derived optima and regime classification: optimal input phase mismatch,
 * optimal transmission, threshold mismatch where the information becomes
 * transmission-independent, and the closed-form maxima.
 */

#pragma once

#include <optional>

#include "qfi/core.hpp"

namespace qfi::optimize {

enum class KappaKind {
  /// kappa > 0: the information grows with |TR|^2, optimum at tau = pi/4.
  balanced_optimal,
  /// kappa = 0 (within tolerance): the information does not depend on T.
  transmission_independent,
  /// kappa < 0: optimum at the degenerate splitter |T|^2 in {0, 1}.
  degenerate_optimal,
};

struct KappaRegime {
  KappaKind kind;
  double kappa;
};

/**
 * Input phase mismatch that restores the maximum |alpha|^2 (1 + varpi^2) at
 * a fixed, possibly unbalanced splitter:
 * sin(dtheta_opt) = (|T|^2 - |R|^2)(varpi - 1/varpi) / (4 |TR|).
 * Principal value; the 2k pi family is the caller's concern.  Returns
 * nullopt when the argument leaves [-1, 1] (no compensating mismatch exists
 * for this (T, varpi)).  Throws for varpi <= 0 or a degenerate splitter.
 */
std::optional<double> delta_theta_opt_dual(const BeamSplitter& bs,
                                           double varpi);

struct TOptDual {
  double t_squared;
  /// Set when varpi = 1 and sin(dtheta) = 0: every T attains the maximum.
  bool degenerate;
};

/**
 * Transmission that restores the maximum for a given mismatch:
 * |T|^2_opt = 1/2 + sign(varpi^2 - 1) varpi sin(dtheta)
 *                   / sqrt((1 - varpi^2)^2 + 4 varpi^2 sin^2(dtheta)).
 * At varpi = 1 with sin(dtheta) != 0 the sign factor is a removable 0/0;
 * the candidates {0, 1, 1/2} are evaluated and the argmax returned.
 */
TOptDual t_opt_squared_dual(double delta_theta, double varpi);

/// |alpha|^2 + |beta|^2.
double fisher_max(const DualCoherent& in);

/// Regime of the coherent x squeezed-vacuum scenario from the sign of kappa.
KappaRegime kappa_regime(const CoherentSqueezedVacuum& in);

/**
 * Threshold mismatch in [0, pi] at which kappa = 0 and the information
 * becomes transmission-independent.  Solved algebraically from the kappa
 * definition; independent of T.  nullopt when no such angle exists for
 * this (|alpha|, r).  Requires |alpha| > 0 and r > 0.
 */
std::optional<double> delta_theta_lim(double alpha_mag, double r);

/// Large-|alpha| approximation arccos(2 sinh(2r)/|alpha|^2 - coth-like term).
/// Convenience only; never a ground truth.
std::optional<double> delta_theta_lim_approx(double alpha_mag, double r);

/// |alpha|^2 e^{2r} + sinh^2 r, attained balanced at dtheta = 0.
double fisher_max(const CoherentSqueezedVacuum& in);

KappaRegime kappa_regime(const SqueezedCoherentSqueezedVacuum& in);

/**
 * Generic one-variable kappa root for the third scenario: scans
 * dtheta in [0, pi] (theta = 2 theta_alpha - dtheta, all other parameters
 * held fixed) and bisects the first sign change.  The kappa = 0 locus here
 * depends on alpha, r, z and phi jointly, so no closed form is claimed.
 */
std::optional<double> kappa_root_delta_theta(
    const SqueezedCoherentSqueezedVacuum& in);

/// |alpha|^2 e^{2r} + sinh^2(r + z), attained balanced with
/// 2 theta_alpha - theta = 0, 2 theta_alpha - phi = pi, phi - theta = pi.
double fisher_max(const SqueezedCoherentSqueezedVacuum& in);

double fisher_max(const InputScenario& in);

}  // namespace qfi::optimize
