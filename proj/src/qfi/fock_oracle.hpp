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
 * Brute-force verification engine in a truncated two-mode Fock basis.
 *
 * The beam splitter acts blockwise inside fixed total-photon-number sectors
 * (the mixing generator conserves n0 + n1), so its action is an exact
 * orthogonal rotation per sector and the only approximation anywhere is the
 * photon-number cutoff, which is tail-checked.  Fisher matrix elements are
 * obtained as number-operator generator covariances on the post-splitter
 * state; the phase evolution is number-diagonal and drops out, so no
 * numerical differentiation of states is ever needed.  This path never
 * touches the closed-form algebra it is used to verify.
 */

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qfi/core.hpp"

namespace qfi::oracle {

inline constexpr double kDefaultTailTol = 1e-12;

/// One bosonic mode truncated at `cutoff` photons (cutoff >= 8).
class SingleModeState {
 public:
  /// Fock expansion of D(alpha)|0>: c_n = e^{-|a|^2/2} a^n / sqrt(n!).
  static SingleModeState coherent(const CoherentAmplitude& alpha, int cutoff,
                                  double tail_tol = kDefaultTailTol);

  /**
   * Fock expansion of D(alpha) S(zeta)|0> (displacement after squeezing)
   * via the stable three-term recurrence of the Bogoliubov annihilator.
   * alpha = 0 gives squeezed vacuum, zeta = 0 a plain coherent state.
   * Validated on construction: norm, tail mass, and <n> = |alpha|^2 +
   * sinh^2 z to 1e-9.
   */
  static SingleModeState squeezed_coherent(const CoherentAmplitude& alpha,
                                           const SqueezeParam& zeta,
                                           int cutoff,
                                           double tail_tol = kDefaultTailTol);

  int cutoff() const { return static_cast<int>(amp_.size()) - 1; }
  std::span<const std::complex<double>> amplitudes() const { return amp_; }
  double norm_squared() const;
  double mean_photon_number() const;

 private:
  explicit SingleModeState(std::vector<std::complex<double>> amp)
      : amp_(std::move(amp)) {}
  void validate(double tail_tol, double expected_mean) const;

  std::vector<std::complex<double>> amp_;
};

/// Two modes on a (cutoff+1) x (cutoff+1) amplitude grid.  Indices are
/// (n0, n1) photon numbers before the splitter and (n2, n3) after it.
class TwoModeState {
 public:
  explicit TwoModeState(int cutoff);

  int cutoff() const { return cutoff_; }
  std::complex<double> amplitude(int n_first, int n_second) const {
    return amp_[static_cast<size_t>(n_first) * (cutoff_ + 1) + n_second];
  }
  std::complex<double>& at(int n_first, int n_second) {
    return amp_[static_cast<size_t>(n_first) * (cutoff_ + 1) + n_second];
  }
  std::span<const std::complex<double>> amplitudes() const { return amp_; }
  double norm_squared() const;
  /// <n> of the first (mode 0/2) or second (mode 1/3) slot.
  double mean_photon_first() const;
  double mean_photon_second() const;

 private:
  int cutoff_;
  std::vector<std::complex<double>> amp_;
};

/// Tensor product |in0> x |in1> (pre-splitter state).
TwoModeState product_state(const SingleModeState& in0,
                           const SingleModeState& in1);

/**
 * Sector rotation exp(i tau_signed (a0^dag a1 + a1^dag a0)) applied to an
 * arbitrary two-mode state; tau_signed may be any real, so the inverse map
 * is apply_mixing(out, -tau).  Throws Error(cutoff_too_small) when the
 * rotation moves more than 1e-10 of the norm beyond the grid.
 */
TwoModeState apply_mixing(const TwoModeState& state, double tau_signed);

/**
 * |psi_23> = U_BS (|in0> x |in1>) with U_BS = exp(i tau (a0^dag a1 + h.c.)),
 * realizing exactly a2 = T a0 + R a1, a3 = R a0 + T a1 with T = cos tau,
 * R = i sin tau.  Photon number and norm are conserved to 1e-10; amplitude
 * mass rotated beyond the grid raises Error(cutoff_too_small).
 */
TwoModeState apply_beam_splitter(const SingleModeState& in0,
                                 const SingleModeState& in1,
                                 const BeamSplitter& bs);

/**
 * Fisher matrix from generator covariances on |psi_23>:
 * F_ij = 4 (<G_i G_j> - <G_i><G_j>) with G_s = (n2 + n3)/2 and
 * G_d = (n2 - n3)/2.  Exact for pure phase evolution.
 */
FisherMatrix fisher_matrix_numeric(const TwoModeState& psi23);

struct NdMoments {
  double mean;
  double variance;
};

/// Mean and variance of the difference photo-current
/// N_d(phi) = i e^{i phi} a2^dag a3 - i e^{-i phi} a3^dag a2 on |psi_23>.
NdMoments observable_moments(const TwoModeState& psi23, double phi);

/// Cutoff heuristic for the supported small-amplitude envelope.
int default_cutoff(const InputScenario& in);

/// Builds the two input-port states for a scenario.
std::pair<SingleModeState, SingleModeState> build_inputs(
    const InputScenario& in, int cutoff, double tail_tol = kDefaultTailTol);

/// End-to-end: inputs -> splitter -> generator covariances.
FisherMatrix fisher_matrix(const InputScenario& in, const BeamSplitter& bs,
                           int cutoff);

}  // namespace qfi::oracle
