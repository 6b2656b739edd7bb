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

#include "qfi/detection.hpp"

#include <cmath>
#include <numbers>

namespace qfi::detection {

namespace {

double require_alpha(const DualCoherent& in) {
  if (!(in.alpha.magnitude > 0.0)) {
    throw Error(Status::invalid_argument,
                "difference-intensity detection requires |alpha| > 0");
  }
  return in.alpha.magnitude;
}

}  // namespace

double slope_coefficient(const BeamSplitter& bs, const DualCoherent& in) {
  const double varpi = in.varpi();
  return bs.tr() * (1.0 - varpi * varpi) +
         (1.0 - 2.0 * bs.t_squared()) * varpi * std::sin(in.delta_theta());
}

double nd_mean_derivative(const DetectionPoint& p) {
  const double amag = require_alpha(p.input);
  const double varpi = p.input.varpi();
  const double cd = slope_coefficient(p.bs, p.input);
  return 2.0 * amag * amag *
         std::abs(cd * std::sin(p.phi) +
                  varpi * std::cos(p.input.delta_theta()) * std::cos(p.phi));
}

double nd_variance(const DetectionPoint& p) {
  const double amag = require_alpha(p.input);
  const double varpi = p.input.varpi();
  return amag * amag * (1.0 + varpi * varpi);
}

double delta_phi_diff(const DetectionPoint& p) {
  const double amag = require_alpha(p.input);
  const double varpi = p.input.varpi();
  const double cd = slope_coefficient(p.bs, p.input);
  const double den =
      std::abs(cd * std::sin(p.phi) +
               varpi * std::cos(p.input.delta_theta()) * std::cos(p.phi));
  if (den == 0.0) {
    throw Error(Status::insensitive_point, "insensitive working point");
  }
  return std::sqrt(1.0 + varpi * varpi) / (2.0 * amag * den);
}

PhiOpt phi_opt(const BeamSplitter& bs, const DualCoherent& in) {
  require_alpha(in);
  const double varpi = in.varpi();
  const double denom = varpi * std::cos(in.delta_theta());
  if (denom == 0.0) {
    return {std::numbers::pi / 2.0, true};
  }
  return {std::atan(slope_coefficient(bs, in) / denom), false};
}

}  // namespace qfi::detection
