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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qfi/closed_form.hpp"
#include "qfi/detection.hpp"
#include "test_util.hpp"

using namespace qfi;
namespace det = qfi::detection;
using qfi_test::close;
using qfi_test::thrown_status;

namespace {
constexpr double kPi = std::numbers::pi;

DualCoherent dual(double amag, double bmag, double dtheta) {
  return {{amag, 0.0}, {bmag, -dtheta}};
}
}  // namespace

TEST_CASE("observable slope") {
  SUBCASE("balanced, dtheta = 0, phi = 0: only the cos term survives") {
    const det::DetectionPoint p{BeamSplitter::balanced(),
                                dual(10.0, 8.0, 0.0), 0.0};
    CHECK(close(det::nd_mean_derivative(p), 2.0 * 100.0 * 0.8, 1e-12));
  }
  SUBCASE("balanced, dtheta = 0, varpi = 0.8, phi = pi/2") {
    const det::DetectionPoint p{BeamSplitter::balanced(),
                                dual(10.0, 8.0, 0.0), kPi / 2.0};
    CHECK(close(det::nd_mean_derivative(p), 36.0, 1e-12));
  }
  SUBCASE("requires a nonzero alpha") {
    CHECK(thrown_status([] {
            det::nd_mean_derivative({BeamSplitter::balanced(),
                                     dual(0.0, 1.0, 0.0), 0.0});
          }) == Status::invalid_argument);
  }
}

TEST_CASE("observable variance is flat in phi and tau") {
  CHECK(close(det::nd_variance({BeamSplitter::balanced(),
                                dual(10.0, 8.0, 0.0), 0.0}),
              164.0, 1e-13));
  CHECK(close(det::nd_variance({BeamSplitter(0.2), dual(3.0, 0.0, 0.0), 1.0}),
              9.0, 1e-13));
  qfi_test::Rng rng(41);
  const DualCoherent in = dual(2.0, 1.0, 0.7);
  const double ref =
      det::nd_variance({BeamSplitter::balanced(), in, 0.0});
  for (int i = 0; i < 50; ++i) {
    const det::DetectionPoint p{BeamSplitter(rng.range(0.0, kPi / 2.0)), in,
                                rng.angle()};
    CHECK(det::nd_variance(p) == ref);
  }
}

TEST_CASE("difference-intensity phase sensitivity") {
  SUBCASE("single coherent input reaches the shot-noise limit at phi = pi/2") {
    const det::DetectionPoint p{BeamSplitter::balanced(),
                                dual(10.0, 0.0, 0.0), kPi / 2.0};
    CHECK(close(det::delta_phi_diff(p), 0.1, 1e-12));
  }
  SUBCASE("worked example") {
    // sqrt(1 + 0.64) / (2 * 10 * 0.18); phi = pi/2 sits off the optimum,
    // so the value stays above the bound 1/sqrt(164) = 0.078.
    const det::DetectionPoint p{BeamSplitter::balanced(),
                                dual(10.0, 8.0, 0.0), kPi / 2.0};
    CHECK(close(det::delta_phi_diff(p), 0.3557291243018249, 1e-12));
  }
  SUBCASE("insensitive working point") {
    // beta = 0 kills the cos term; phi = 0 kills the sin term.
    CHECK(thrown_status([] {
            det::delta_phi_diff(
                {BeamSplitter::balanced(), dual(1.0, 0.0, 0.0), 0.0});
          }) == Status::insensitive_point);
  }
  SUBCASE("periodicity under phi -> phi + pi") {
    qfi_test::Rng rng(42);
    for (int i = 0; i < 200; ++i) {
      const det::DetectionPoint p{BeamSplitter(rng.range(0.01, kPi / 2.0)),
                                  dual(2.0, rng.range(0.1, 2.0), rng.angle()),
                                  rng.angle()};
      const det::DetectionPoint q{p.bs, p.input, p.phi + kPi};
      CHECK(close(det::delta_phi_diff(p), det::delta_phi_diff(q), 1e-9));
    }
  }
}

TEST_CASE("optimal working point") {
  SUBCASE("balanced, dtheta = 0, varpi = 0.8") {
    const auto v = det::phi_opt(BeamSplitter::balanced(), dual(10.0, 8.0, 0.0));
    CHECK(close(v.phi, 0.22131444234779127, 1e-12));
    CHECK_FALSE(v.sin_fringe);
  }
  SUBCASE("varpi = 1, dtheta = 0 sits on the cos fringe") {
    const auto v =
        det::phi_opt(BeamSplitter::balanced(), dual(10.0, 10.0, 0.0));
    CHECK(std::abs(v.phi) <= 1e-15);
    CHECK_FALSE(v.sin_fringe);
  }
  SUBCASE("vacuum second port degenerates to the sin fringe") {
    const auto v = det::phi_opt(BeamSplitter(0.4), dual(1.0, 0.0, 0.0));
    CHECK(v.phi == doctest::Approx(kPi / 2.0));
    CHECK(v.sin_fringe);
  }
  SUBCASE("the published working point") {
    // |alpha| = 10, |beta| = 8, dtheta = pi/90 optimized at |T|^2 = 0.25
    const BeamSplitter bs = BeamSplitter::from_t_squared(0.25);
    const DualCoherent in = dual(10.0, 8.0, kPi / 90.0);
    CHECK(close(det::slope_coefficient(bs, in), 0.1698443713621993, 1e-12));
    const auto v = det::phi_opt(bs, in);
    CHECK(close(v.phi, 0.20932307971159886, 1e-12));
  }
}

TEST_CASE("the optimal working point attains the quantum Cramer-Rao bound") {
  qfi_test::Rng rng(43);
  for (int i = 0; i < 500; ++i) {
    const BeamSplitter bs(rng.range(0.01, kPi / 2.0 - 0.01));
    const double amag = 10.0;
    const DualCoherent in =
        dual(amag, amag * rng.range(0.05, 1.0), rng.angle());
    const auto opt = det::phi_opt(bs, in);
    const double sens = det::delta_phi_diff({bs, in, opt.phi});
    const double fisher = closed_form::fisher(bs, in);
    CHECK(close(sens * std::sqrt(fisher), 1.0, 1e-10));
  }
}
