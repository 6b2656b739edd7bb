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
#include "test_util.hpp"

using namespace qfi;
namespace cf = qfi::closed_form;
using qfi_test::close;
using qfi_test::thrown_status;

namespace {
constexpr double kPi = std::numbers::pi;

DualCoherent dual(double amag, double bmag, double dtheta,
                  double theta_alpha = 0.0) {
  return {{amag, theta_alpha}, {bmag, theta_alpha - dtheta}};
}

CoherentSqueezedVacuum coh_sqz(double amag, double r, double dtheta,
                               double theta_alpha = 0.0) {
  return {{amag, theta_alpha}, {r, 2.0 * theta_alpha - dtheta}};
}
}  // namespace

TEST_CASE("dual coherent Fisher matrix") {
  SUBCASE("balanced, dtheta = 0") {
    const FisherMatrix m =
        cf::fisher_matrix(BeamSplitter::balanced(), dual(10.0, 9.9, 0.0));
    CHECK(close(m.ss, 198.01, 1e-13));
    CHECK(close(m.dd, 198.01, 1e-13));
    CHECK(std::abs(m.sd) <= 1e-12 * 200.0);  // equal output intensities
    CHECK(m.sd == m.ds);
  }
  SUBCASE("single coherent input: sd = |R|^2 - |T|^2") {
    const BeamSplitter bs(0.3);
    const FisherMatrix m = cf::fisher_matrix(bs, dual(1.0, 0.0, 0.0));
    CHECK(close(m.ss, 1.0, 1e-14));
    CHECK(close(m.dd, 1.0, 1e-14));
    CHECK(close(m.sd, bs.r_squared() - bs.t_squared(), 1e-13));
  }
  SUBCASE("vacuum") {
    const FisherMatrix m =
        cf::fisher_matrix(BeamSplitter(0.7), dual(0.0, 0.0, 0.0));
    CHECK(m.ss == 0.0);
    CHECK(m.sd == 0.0);
    CHECK(m.dd == 0.0);
  }
  SUBCASE("balanced splitter: sd = -2|alpha beta| sin(dtheta)") {
    const double dtheta = kPi / 3.0;
    const FisherMatrix m =
        cf::fisher_matrix(BeamSplitter::balanced(), dual(10.0, 10.0, dtheta));
    CHECK(close(m.sd, -2.0 * 100.0 * std::sin(dtheta), 1e-12));
    // so at varpi = 1 the balanced off-diagonal vanishes only for aligned
    // phases, not unconditionally
    CHECK(std::abs(m.sd) > 100.0);
    const FisherMatrix aligned =
        cf::fisher_matrix(BeamSplitter::balanced(), dual(10.0, 10.0, 0.0));
    CHECK(std::abs(aligned.sd) <= 1e-12 * 200.0);
  }
}

TEST_CASE("dual coherent reduced Fisher information") {
  SUBCASE("balanced maximum") {
    CHECK(close(cf::fisher(BeamSplitter::balanced(), dual(10.0, 9.9, 0.0)),
                198.01, 1e-12));
  }
  SUBCASE("degenerate splitter, single input") {
    CHECK(std::abs(cf::fisher(BeamSplitter(0.0), dual(1.0, 0.0, 0.0))) <=
          1e-14);
  }
  SUBCASE("hand-evaluated unbalanced point") {
    // |T|^2 = 0.1, dtheta = pi/2, |alpha| = 10, varpi = 0.5
    const double f = cf::fisher(BeamSplitter::from_t_squared(0.1),
                                dual(10.0, 5.0, kPi / 2.0));
    CHECK(close(f, 125.0, 1e-12));
  }
  SUBCASE("double vacuum is an error") {
    CHECK(thrown_status([] {
            cf::fisher(BeamSplitter::balanced(), dual(0.0, 0.0, 0.0));
          }) == Status::no_information);
  }
  SUBCASE("alpha = 0 falls back to the swapped evaluation") {
    const BeamSplitter bs(0.6);
    const double f = cf::fisher(bs, dual(0.0, 2.0, 0.4));
    CHECK(close(f, 4.0 * bs.tr() * bs.tr() * 4.0, 1e-12));
  }
}

TEST_CASE("dual coherent balanced form") {
  CHECK(close(cf::fisher_balanced(dual(10.0, 0.0, 1.234)), 100.0, 1e-13));
  CHECK(close(cf::fisher_balanced(dual(10.0, 9.9, 0.0)), 198.01, 1e-13));
  // worst case at varpi = 1, dtheta = pi/2
  CHECK(std::abs(cf::fisher_balanced(dual(10.0, 10.0, kPi / 2.0))) <= 1e-10);

  qfi_test::Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    const DualCoherent in =
        dual(rng.range(0.1, 2.0), rng.range(0.0, 2.0), rng.angle());
    CHECK(close(cf::fisher_balanced(in),
                cf::fisher(BeamSplitter::balanced(), in), 1e-12));
  }
}

TEST_CASE("compact-form equality over 10^4 random draws") {
  qfi_test::Rng rng(22);
  for (int i = 0; i < 10000; ++i) {
    const BeamSplitter bs(rng.range(0.0, kPi / 2.0));
    const DualCoherent in{{rng.range(0.0, 2.0), rng.angle()},
                          {rng.range(0.0, 2.0), rng.angle()}};
    if (in.alpha.magnitude == 0.0 && in.beta.magnitude == 0.0) {
      continue;
    }
    const double eq10 = cf::fisher(bs, in);
    const FisherMatrix m = cf::fisher_matrix(bs, in);
    const double out2 = (m.ss + m.sd) / 2.0;
    const double out3 = (m.ss - m.sd) / 2.0;
    const double compact = 4.0 * out2 * out3 / m.ss;
    CHECK(std::abs(eq10 - compact) <=
          1e-12 * std::max({1.0, eq10, compact}));
  }
}

TEST_CASE("input-swap symmetry") {
  // Exchanging the two input beams at a fixed splitter leaves F invariant;
  // verified against the Fock oracle.  Adding the tau -> pi/2 - tau relabel
  // on top additionally reflects the mismatch (dtheta -> -dtheta) under the
  // i T* R = -|TR| convention, so the combined map needs conjugate phases.
  qfi_test::Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    const double tau = rng.range(0.0, kPi / 2.0);
    const CoherentAmplitude a{rng.range(0.01, 2.0), rng.angle()};
    const CoherentAmplitude b{rng.range(0.01, 2.0), rng.angle()};
    const double f1 = cf::fisher(BeamSplitter(tau), DualCoherent{a, b});
    const double f2 = cf::fisher(BeamSplitter(tau), DualCoherent{b, a});
    CHECK(close(f1, f2, 1e-12));
    const double f3 = cf::fisher(
        BeamSplitter(kPi / 2.0 - tau),
        DualCoherent{{b.magnitude, -b.phase}, {a.magnitude, -a.phase}});
    CHECK(close(f1, f3, 1e-12));
  }
}

TEST_CASE("coherent x squeezed vacuum Fisher matrix") {
  SUBCASE("r = 0 reduces to the dual-coherent matrix with beta = 0") {
    const BeamSplitter bs(0.77);
    const FisherMatrix a = cf::fisher_matrix(bs, coh_sqz(1.3, 0.0, 0.9));
    const FisherMatrix b = cf::fisher_matrix(bs, dual(1.3, 0.0, 0.0));
    CHECK(close(a.ss, b.ss, 1e-14));
    CHECK(close(a.sd, b.sd, 1e-14));
    CHECK(close(a.dd, b.dd, 1e-14));
  }
  SUBCASE("balanced decoupling: sd = 0") {
    const FisherMatrix m = cf::fisher_matrix(BeamSplitter::balanced(),
                                             coh_sqz(1.0, 0.4, 0.7));
    CHECK(std::abs(m.sd) <= 1e-12 * std::max(1.0, m.ss));
  }
  SUBCASE("frozen oracle point: |alpha| = 1, r = 0.5, tau = pi/6") {
    const FisherMatrix m =
        cf::fisher_matrix(BeamSplitter(kPi / 6.0), coh_sqz(1.0, 0.5, 0.0));
    CHECK(close(m.ss, 1.6905489227709078, 1e-12));
    CHECK(close(m.sd, -0.15472553861454616, 1e-12));
    CHECK(close(m.dd, 2.665003840092727, 1e-12));
  }
}

TEST_CASE("coherent x squeezed vacuum reduced Fisher information") {
  SUBCASE("balanced matched maximum") {
    CHECK(close(cf::fisher(BeamSplitter::balanced(), coh_sqz(10.0, 2.3, 0.0)),
                9972.805156062797, 1e-12));
  }
  SUBCASE("no squeezing is the plain coherent value") {
    CHECK(close(cf::fisher(BeamSplitter::balanced(), coh_sqz(3.0, 0.0, 0.7)),
                9.0, 1e-12));
  }
  SUBCASE("degenerate splitter leaves only the T-independent part") {
    const double f =
        cf::fisher(BeamSplitter(0.0), coh_sqz(1.0, 0.5, 0.3));
    CHECK(close(f, 1.6339046175346597, 1e-12));
  }
  SUBCASE("all-vacuum is an error") {
    CHECK(thrown_status([] {
            cf::fisher(BeamSplitter::balanced(), coh_sqz(0.0, 0.0, 0.0));
          }) == Status::no_information);
  }
  SUBCASE("pure squeezed vacuum is fine") {
    const double f =
        cf::fisher(BeamSplitter::balanced(), coh_sqz(0.0, 0.8, 0.0));
    const double shr = std::sinh(0.8);
    CHECK(close(f, shr * shr, 1e-12));
  }
}

TEST_CASE("squeezed-coherent x squeezed vacuum Fisher matrix") {
  SUBCASE("z = 0 reduces exactly to the coherent x squeezed case") {
    const BeamSplitter bs(0.9);
    const SqueezedCoherentSqueezedVacuum in{
        {1.2, 0.3}, {0.0, 1.7}, {0.35, -0.4}};
    const CoherentSqueezedVacuum ref{{1.2, 0.3}, {0.35, -0.4}};
    const FisherMatrix a = cf::fisher_matrix(bs, in);
    const FisherMatrix b = cf::fisher_matrix(bs, ref);
    CHECK(close(a.ss, b.ss, 1e-15));
    CHECK(close(a.sd, b.sd, 1e-15));
    CHECK(close(a.dd, b.dd, 1e-15));
  }
  SUBCASE("balanced decoupling") {
    const SqueezedCoherentSqueezedVacuum in{
        {1.0, 0.4}, {0.3, 1.1}, {0.3, 0.2}};
    const FisherMatrix m = cf::fisher_matrix(BeamSplitter::balanced(), in);
    CHECK(std::abs(m.sd) <= 1e-12 * std::max(1.0, m.ss));
  }
  SUBCASE("frozen oracle point") {
    // |alpha| = 1, theta_alpha = 0.4, r = 0.3, theta = 0.2, z = 0.3,
    // phi = 1.1, tau = pi/5
    const SqueezedCoherentSqueezedVacuum in{
        {1.0, 0.4}, {0.3, 1.1}, {0.3, 0.2}};
    const FisherMatrix m = cf::fisher_matrix(BeamSplitter(kPi / 5.0), in);
    CHECK(close(m.ss, 0.9825746039457136, 1e-12));
    CHECK(close(m.sd, -0.17837907741651074, 1e-12));
    CHECK(close(m.dd, 1.7107306149385806, 1e-12));
  }
}

TEST_CASE("squeezed-coherent x squeezed vacuum reduced Fisher information") {
  SUBCASE("phase-matched balanced maximum") {
    // dtheta = 0, phi - theta = pi, 2 theta_alpha - phi = pi
    const SqueezedCoherentSqueezedVacuum in{
        {10.0, 0.0}, {2.3, kPi}, {2.3, 0.0}};
    CHECK(close(cf::fisher(BeamSplitter::balanced(), in),
                12422.213854139205, 1e-12));
    CHECK(close(cf::fisher_balanced(in), 12422.213854139205, 1e-12));
  }
  SUBCASE("z = 0 equals the coherent x squeezed value") {
    const BeamSplitter bs(0.52);
    const SqueezedCoherentSqueezedVacuum in{
        {1.1, 0.2}, {0.0, 0.0}, {0.4, -0.9}};
    const CoherentSqueezedVacuum ref{{1.1, 0.2}, {0.4, -0.9}};
    CHECK(close(cf::fisher(bs, in), cf::fisher(bs, ref), 1e-15));
  }
  SUBCASE("balanced form with aligned squeezing angles") {
    // theta_alpha = theta = phi = 0: cos(phi - theta) = 1 kills the cross
    // enhancement and the balanced value collapses to |alpha|^2 e^{2r}.
    const SqueezedCoherentSqueezedVacuum in{
        {10.0, 0.0}, {2.3, 0.0}, {2.3, 0.0}};
    CHECK(close(cf::fisher_balanced(in), 9948.431564193379, 1e-12));
  }
  SUBCASE("balanced dispatch equals the generic evaluation") {
    qfi_test::Rng rng(24);
    for (int i = 0; i < 300; ++i) {
      const SqueezedCoherentSqueezedVacuum in{
          {rng.range(0.1, 2.0), rng.angle()},
          {rng.range(0.0, 0.5), rng.angle()},
          {rng.range(0.0, 0.5), rng.angle()}};
      CHECK(close(cf::fisher_balanced(in),
                  cf::fisher(BeamSplitter::balanced(), in), 1e-12));
    }
  }
  SUBCASE("all-vacuum is an error") {
    CHECK(thrown_status([] {
            cf::fisher(BeamSplitter::balanced(),
                       SqueezedCoherentSqueezedVacuum{
                           {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
          }) == Status::no_information);
  }
}

TEST_CASE("reduction consistency across all scenarios") {
  qfi_test::Rng rng(25);
  for (int i = 0; i < 500; ++i) {
    const BeamSplitter bs(rng.range(0.01, kPi / 2.0 - 0.01));
    const DualCoherent s1{{rng.range(0.05, 2.0), rng.angle()},
                          {rng.range(0.0, 2.0), rng.angle()}};
    CHECK(close(reduce_fisher(cf::fisher_matrix(bs, s1)), cf::fisher(bs, s1),
                1e-12));
    const CoherentSqueezedVacuum s2{{rng.range(0.05, 2.0), rng.angle()},
                                    {rng.range(0.0, 0.6), rng.angle()}};
    CHECK(close(reduce_fisher(cf::fisher_matrix(bs, s2)), cf::fisher(bs, s2),
                1e-12));
    const SqueezedCoherentSqueezedVacuum s3{
        {rng.range(0.05, 2.0), rng.angle()},
        {rng.range(0.0, 0.6), rng.angle()},
        {rng.range(0.0, 0.6), rng.angle()}};
    CHECK(close(reduce_fisher(cf::fisher_matrix(bs, s3)), cf::fisher(bs, s3),
                1e-12));
  }
}

TEST_CASE("limit chain: scenario 2 at r = 0 equals scenario 1 with beta = 0") {
  qfi_test::Rng rng(26);
  for (int i = 0; i < 300; ++i) {
    const BeamSplitter bs(rng.range(0.0, kPi / 2.0));
    const double amag = rng.range(0.05, 2.0);
    const double f2 = cf::fisher(bs, coh_sqz(amag, 0.0, rng.angle()));
    const double f1 = cf::fisher(bs, dual(amag, 0.0, 0.0));
    CHECK(close(f2, f1, 1e-15));
  }
}

TEST_CASE("mean photon number") {
  CHECK(close(cf::mean_photon_number(coh_sqz(10.0, 2.3, 0.0)),
              124.3735918694196, 1e-12));
  CHECK(close(cf::mean_photon_number(SqueezedCoherentSqueezedVacuum{
                  {10.0, 0.0}, {2.3, 0.0}, {2.3, 0.0}}),
              148.7471837388392, 1e-12));
  CHECK(cf::mean_photon_number(dual(0.0, 0.0, 0.0)) == 0.0);
  CHECK(close(cf::mean_photon_number(dual(10.0, 9.9, 0.3)), 198.01, 1e-13));
}
