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

#include "qfi/core.hpp"

#include <cmath>
#include <numbers>

namespace qfi {

BeamSplitter::BeamSplitter(double tau) : tau_(tau) {
  if (!std::isfinite(tau) || tau < 0.0 || tau > std::numbers::pi / 2.0) {
    throw Error(Status::invalid_argument,
                "beam splitter mixing angle must lie in [0, pi/2]");
  }
}

BeamSplitter BeamSplitter::balanced() {
  return BeamSplitter(std::numbers::pi / 4.0);
}

BeamSplitter BeamSplitter::from_t_squared(double t_squared) {
  if (!std::isfinite(t_squared) || t_squared < 0.0 || t_squared > 1.0) {
    throw Error(Status::invalid_argument,
                "transmission probability must lie in [0, 1]");
  }
  return BeamSplitter(std::acos(std::sqrt(t_squared)));
}

double BeamSplitter::t_squared() const {
  double c = std::cos(tau_);
  return c * c;
}

double BeamSplitter::r_squared() const {
  double s = std::sin(tau_);
  return s * s;
}

double BeamSplitter::tr() const { return std::sin(2.0 * tau_) / 2.0; }

double BeamSplitter::t2_minus_r2() const { return std::cos(2.0 * tau_); }

CoherentAmplitude::CoherentAmplitude(double magnitude_in, double phase_in)
    : magnitude(magnitude_in), phase(phase_in) {
  if (!std::isfinite(magnitude) || magnitude < 0.0) {
    throw Error(Status::invalid_argument,
                "coherent amplitude magnitude must be >= 0");
  }
  if (!std::isfinite(phase)) {
    throw Error(Status::invalid_argument, "coherent phase must be finite");
  }
}

SqueezeParam::SqueezeParam(double r_in, double angle_in)
    : r(r_in), angle(angle_in) {
  if (!std::isfinite(r) || r < 0.0) {
    throw Error(Status::invalid_argument, "squeezing factor must be >= 0");
  }
  if (!std::isfinite(angle)) {
    throw Error(Status::invalid_argument, "squeezing angle must be finite");
  }
}

double DualCoherent::varpi() const {
  if (alpha.magnitude <= 0.0) {
    throw Error(Status::invalid_argument,
                "varpi = |beta|/|alpha| is undefined for |alpha| = 0");
  }
  return beta.magnitude / alpha.magnitude;
}

double reduce_fisher(const FisherMatrix& m) {
  if (m.ss < 0.0) {
    throw Error(Status::invalid_argument, "Fisher matrix has negative ss");
  }
  if (m.ss == 0.0) {
    throw Error(Status::singular_sum_block, "singular sum block");
  }
  return m.dd - m.sd * m.ds / m.ss;
}

double qcrb_sensitivity(double fisher) {
  if (!(fisher > 0.0)) {
    throw Error(Status::no_information, "no information");
  }
  return 1.0 / std::sqrt(fisher);
}

}  // namespace qfi
