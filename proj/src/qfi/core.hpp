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
 * Domain types shared by the whole library: beam splitter, Gaussian input
 * scenarios, the two-parameter Fisher matrix and its scalar reduction.
 */

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <variant>

namespace qfi {

enum class Status {
  ok = 0,
  invalid_argument,
  no_information,
  singular_sum_block,
  no_solution,
  cutoff_too_small,
  unsupported,
  insensitive_point,
};

/// Library error: a status code plus a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  Status status() const { return status_; }

 private:
  Status status_;
};

/**
 * Lossless beam splitter parameterized by a single mixing angle tau in
 * [0, pi/2].  The transmission coefficient is T = cos(tau) (real, >= 0) and
 * the reflection coefficient R = i sin(tau), so |T|^2 + |R|^2 = 1 and
 * T R* + T* R = 0 hold exactly and i T* R = -|TR|.
 */
class BeamSplitter {
 public:
  explicit BeamSplitter(double tau);

  /// tau = pi/4, i.e. |T|^2 = |R|^2 = 1/2.
  static BeamSplitter balanced();
  /// Builds the splitter from the transmission probability |T|^2 in [0, 1].
  static BeamSplitter from_t_squared(double t_squared);

  double tau() const { return tau_; }
  std::complex<double> t() const { return {std::cos(tau_), 0.0}; }
  std::complex<double> r() const { return {0.0, std::sin(tau_)}; }
  double t_squared() const;
  double r_squared() const;
  /// |T R| = sin(2 tau) / 2.
  double tr() const;
  /// |T|^2 - |R|^2 = cos(2 tau).
  double t2_minus_r2() const;

 private:
  double tau_;
};

/// Field amplitude |gamma| e^{i phase}; the phase is stored unwrapped.
struct CoherentAmplitude {
  double magnitude = 0.0;
  double phase = 0.0;

  CoherentAmplitude() = default;
  CoherentAmplitude(double magnitude_in, double phase_in);

  std::complex<double> value() const {
    return std::polar(magnitude, phase);
  }
};

/// Squeeze parameter r e^{i angle} with squeezing factor r >= 0.
struct SqueezeParam {
  double r = 0.0;
  double angle = 0.0;

  SqueezeParam() = default;
  SqueezeParam(double r_in, double angle_in);
};

/// Coherent |beta> on port 0 and coherent |alpha> on port 1.
struct DualCoherent {
  CoherentAmplitude alpha;  // port 1
  CoherentAmplitude beta;   // port 0

  /// varpi = |beta| / |alpha|; defined only for |alpha| > 0.
  double varpi() const;
  /// Delta theta = theta_alpha - theta_beta.
  double delta_theta() const { return alpha.phase - beta.phase; }
};

/// Squeezed vacuum S(xi)|0> on port 0, coherent |alpha> on port 1.
struct CoherentSqueezedVacuum {
  CoherentAmplitude alpha;  // port 1
  SqueezeParam xi;          // port 0, xi = r e^{i theta}

  /// Delta theta = 2 theta_alpha - theta.
  double delta_theta() const { return 2.0 * alpha.phase - xi.angle; }
};

/// S(xi)|0> on port 0 and the squeezed-coherent state D(alpha) S(zeta)|0>
/// on port 1 (displacement applied after squeezing).
struct SqueezedCoherentSqueezedVacuum {
  CoherentAmplitude alpha;  // port 1
  SqueezeParam zeta;        // port 1, zeta = z e^{i phi}
  SqueezeParam xi;          // port 0, xi = r e^{i theta}

  double delta_theta() const { return 2.0 * alpha.phase - xi.angle; }
  /// Delta phi = 2 theta_alpha - phi.
  double delta_phi() const { return 2.0 * alpha.phase - zeta.angle; }
};

using InputScenario = std::variant<DualCoherent, CoherentSqueezedVacuum,
                                   SqueezedCoherentSqueezedVacuum>;

/**
 * Two-parameter Fisher matrix over the sum/difference phases (phi_s, phi_d).
 * Symmetric (sd == ds) and positive semidefinite for any physical state.
 */
struct FisherMatrix {
  double ss = 0.0;
  double sd = 0.0;
  double ds = 0.0;
  double dd = 0.0;
};

/// Sum/difference phases phi_{s/d} = (phi_1 +- phi_2) / 2.
struct PhaseConfig {
  double phi_s = 0.0;
  double phi_d = 0.0;

  static PhaseConfig from_arm_phases(double phi_1, double phi_2) {
    return {(phi_1 + phi_2) / 2.0, (phi_1 - phi_2) / 2.0};
  }
  double phi_1() const { return phi_s + phi_d; }
  double phi_2() const { return phi_s - phi_d; }
};

/**
 * Reduces the 2x2 Fisher matrix to the scalar information for the difference
 * phase: F = dd - sd * ds / ss.  The full cross-term correction is kept; the
 * dd-only approximation is never used.
 *
 * Throws Error(singular_sum_block) when ss == 0 (zero total photon number).
 */
double reduce_fisher(const FisherMatrix& m);

/// Cramer-Rao phase sensitivity 1/sqrt(F).  Throws Error(no_information)
/// for F <= 0.
double qcrb_sensitivity(double fisher);

}  // namespace qfi
