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
#include <complex>
#include <numbers>

#include "doctest.h"
#include "qfi/core.hpp"
#include "test_util.hpp"

using namespace qfi;
using qfi_test::close;
using qfi_test::thrown_status;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("beam splitter convention holds across the whole angle range") {
  for (int i = 0; i <= 1000; ++i) {
    const double tau = kPi / 2.0 * i / 1000.0;
    BeamSplitter bs(tau);
    const auto t = bs.t();
    const auto r = bs.r();
    CHECK(std::abs(std::norm(t) + std::norm(r) - 1.0) <= 1e-15);
    CHECK(std::abs(t * std::conj(r) + std::conj(t) * r) <= 1e-15);
    // i T* R = -|TR|
    const std::complex<double> lhs =
        std::complex<double>(0.0, 1.0) * std::conj(t) * r;
    CHECK(std::abs(lhs - std::complex<double>(-bs.tr(), 0.0)) <= 1e-15);
    CHECK(std::abs(bs.t_squared() + bs.r_squared() - 1.0) <= 1e-15);
    CHECK(std::abs(bs.t2_minus_r2() - (bs.t_squared() - bs.r_squared())) <=
          1e-14);
  }
}

TEST_CASE("beam splitter construction and validation") {
  CHECK(BeamSplitter::balanced().tau() == doctest::Approx(kPi / 4.0));
  CHECK(BeamSplitter::from_t_squared(0.25).t_squared() ==
        doctest::Approx(0.25).epsilon(1e-14));
  CHECK(BeamSplitter::from_t_squared(1.0).tr() == doctest::Approx(0.0));
  CHECK(thrown_status([] { BeamSplitter bs(-0.1); }) ==
        Status::invalid_argument);
  CHECK(thrown_status([] { BeamSplitter bs(2.0); }) ==
        Status::invalid_argument);
  CHECK(thrown_status([] { BeamSplitter::from_t_squared(1.5); }) ==
        Status::invalid_argument);
}

TEST_CASE("amplitude and squeeze parameter validation") {
  CHECK(thrown_status([] { CoherentAmplitude a(-1.0, 0.0); }) ==
        Status::invalid_argument);
  CHECK(thrown_status([] { SqueezeParam s(-0.2, 0.0); }) ==
        Status::invalid_argument);
  CHECK(CoherentAmplitude(2.0, 0.5).value() ==
        std::polar(2.0, 0.5));
}

TEST_CASE("varpi requires a nonzero alpha") {
  DualCoherent in{{0.0, 0.0}, {1.0, 0.0}};
  CHECK(thrown_status([&] { (void)in.varpi(); }) == Status::invalid_argument);
  DualCoherent ok{{2.0, 0.0}, {1.0, 0.0}};
  CHECK(ok.varpi() == doctest::Approx(0.5));
}

TEST_CASE("reduce_fisher examples") {
  CHECK(reduce_fisher({2.0, 0.0, 0.0, 2.0}) == doctest::Approx(2.0));
  // balanced dual-coherent with varpi = 1 has vanishing off-diagonals
  CHECK(reduce_fisher({200.0, 0.0, 0.0, 200.0}) == doctest::Approx(200.0));
  CHECK(reduce_fisher({1.0, 0.5, 0.5, 1.0}) == doctest::Approx(0.75));
  CHECK(thrown_status([] { reduce_fisher({0.0, 0.0, 0.0, 1.0}); }) ==
        Status::singular_sum_block);
}

TEST_CASE("reduce_fisher never exceeds dd on positive semidefinite input") {
  qfi_test::Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const double ss = rng.range(1e-3, 50.0);
    const double dd = rng.range(0.0, 50.0);
    const double sd = rng.range(-1.0, 1.0) * std::sqrt(ss * dd);
    const double f = reduce_fisher({ss, sd, sd, dd});
    CHECK(f <= dd + 1e-12 * std::max(1.0, dd));
    CHECK(f >= -1e-12 * std::max(1.0, dd));
  }
}

TEST_CASE("reduction scaling invariance and qcrb scaling") {
  qfi_test::Rng rng(12);
  for (int i = 0; i < 500; ++i) {
    const double ss = rng.range(0.5, 20.0);
    const double dd = rng.range(0.1, 20.0);
    const double sd = rng.range(-1.0, 1.0) * std::sqrt(ss * dd);
    const double lambda = rng.range(0.1, 100.0);
    const double f1 = reduce_fisher({ss, sd, sd, dd});
    const double f2 =
        reduce_fisher({lambda * ss, lambda * sd, lambda * sd, lambda * dd});
    CHECK(close(f2, lambda * f1, 1e-12));
    if (f1 > 1e-9) {
      CHECK(close(qcrb_sensitivity(f2),
                  qcrb_sensitivity(f1) / std::sqrt(lambda), 1e-12));
    }
  }
}

TEST_CASE("qcrb sensitivity examples") {
  CHECK(qcrb_sensitivity(100.0) == doctest::Approx(0.1).epsilon(1e-14));
  // 1/sqrt(|alpha|^2 + |beta|^2) at |alpha| = 10, |beta| = 9.9
  CHECK(close(qcrb_sensitivity(198.01), 0.07106511090102073, 1e-13));
  // full-precision maximum of the coherent x squeezed-vacuum scenario
  CHECK(close(qcrb_sensitivity(9972.805156062797), 0.010013625218451797,
              1e-13));
  CHECK(thrown_status([] { qcrb_sensitivity(0.0); }) ==
        Status::no_information);
  CHECK(thrown_status([] { qcrb_sensitivity(-5.0); }) ==
        Status::no_information);
}

TEST_CASE("phase configuration round trip") {
  qfi_test::Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    const double phi1 = rng.range(-10.0, 10.0);
    const double phi2 = rng.range(-10.0, 10.0);
    const PhaseConfig pc = PhaseConfig::from_arm_phases(phi1, phi2);
    CHECK(std::abs(pc.phi_1() - phi1) <=
          1e-15 * std::max({1.0, std::abs(phi1), std::abs(phi2)}));
    CHECK(std::abs(pc.phi_2() - phi2) <=
          1e-15 * std::max({1.0, std::abs(phi1), std::abs(phi2)}));
  }
  const PhaseConfig pc{0.3, -0.8};
  const PhaseConfig back =
      PhaseConfig::from_arm_phases(pc.phi_1(), pc.phi_2());
  CHECK(back.phi_s == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(back.phi_d == doctest::Approx(-0.8).epsilon(1e-15));
}
