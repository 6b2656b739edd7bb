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
 * Closed-form Fisher matrix elements and reduced Fisher information for the
 * three Gaussian input scenarios of the unbalanced interferometer.
 *
 * For the squeezed scenarios the reduced information has the structure
 * F = 4|TR|^2 kappa + B, where B is the transmission-independent part; the
 * same decomposition drives the regime classification in optimize.  Every
 * evaluation is cross-checked internally against the independent direct
 * expression (Fdd - Fsd^2/Fss form) so the two algebraic routes cannot
 * drift apart.
 */

#pragma once

#include "qfi/core.hpp"

namespace qfi::closed_form {

/**
 * Transmission-dependent/independent split of the reduced Fisher
 * information: F(tau) = 4|TR|^2 * kappa + offset.
 */
struct KappaDecomposition {
  double kappa = 0.0;
  double offset = 0.0;
};

// ---- dual coherent input (|beta> port 0, |alpha> port 1) ----

/// Fisher matrix: ss = dd = |alpha|^2 + |beta|^2,
/// sd = ds = |R alpha + T beta|^2 - |T alpha + R beta|^2.
FisherMatrix fisher_matrix(const BeamSplitter& bs, const DualCoherent& in);

/**
 * Reduced Fisher information.  Equals the compact form
 * 4 |R alpha + T beta|^2 |T alpha + R beta|^2 / (|alpha|^2 + |beta|^2).
 * Throws Error(no_information) for double vacuum.
 */
double fisher(const BeamSplitter& bs, const DualCoherent& in);

/// Balanced-splitter special case
/// |alpha|^2 (1 + varpi^2 - 4 varpi^2 sin^2(dtheta) / (1 + varpi^2)).
double fisher_balanced(const DualCoherent& in);

// ---- coherent (port 1) x squeezed vacuum (port 0) ----

FisherMatrix fisher_matrix(const BeamSplitter& bs,
                           const CoherentSqueezedVacuum& in);

double fisher(const BeamSplitter& bs, const CoherentSqueezedVacuum& in);

/// kappa and the T-independent offset B = 2 sinh^2(2r) |alpha|^2 / Fss.
KappaDecomposition kappa_decomposition(const CoherentSqueezedVacuum& in);

// ---- squeezed coherent (port 1) x squeezed vacuum (port 0) ----

FisherMatrix fisher_matrix(const BeamSplitter& bs,
                           const SqueezedCoherentSqueezedVacuum& in);

double fisher(const BeamSplitter& bs,
              const SqueezedCoherentSqueezedVacuum& in);

/// Balanced-splitter form including the cross term
/// 2 sinh r sinh z (sinh r sinh z - cosh r cosh z cos(phi - theta)).
double fisher_balanced(const SqueezedCoherentSqueezedVacuum& in);

KappaDecomposition kappa_decomposition(
    const SqueezedCoherentSqueezedVacuum& in);

// ---- scenario-generic dispatch ----

FisherMatrix fisher_matrix(const BeamSplitter& bs, const InputScenario& in);
double fisher(const BeamSplitter& bs, const InputScenario& in);
double fisher_balanced(const InputScenario& in);

/// |alpha|^2 + |beta|^2, |alpha|^2 + sinh^2 r, or
/// |alpha|^2 + sinh^2 r + sinh^2 z depending on the scenario.
double mean_photon_number(const InputScenario& in);

}  // namespace qfi::closed_form
