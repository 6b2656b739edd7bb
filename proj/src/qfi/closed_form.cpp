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

#include "qfi/closed_form.hpp"

#include <cmath>
#include <stdexcept>

namespace qfi::closed_form {

namespace {

// Guard against transcription drift between the kappa + B route and the
// direct matrix-reduction route.  Both are plain arithmetic, so anything
// beyond rounding noise is a programming error, not an input error.
void check_routes_agree(double decomposed, double direct, double scale) {
  double tol = 1e-10 * std::max({1.0, std::abs(decomposed), std::abs(direct),
                                 scale});
  if (std::abs(decomposed - direct) > tol) {
    throw std::logic_error(
        "internal inconsistency between Fisher evaluation routes");
  }
}

}  // namespace

FisherMatrix fisher_matrix(const BeamSplitter& bs, const DualCoherent& in) {
  const std::complex<double> a = in.alpha.value();
  const std::complex<double> b = in.beta.value();
  const std::complex<double> t = bs.t();
  const std::complex<double> r = bs.r();
  const double ss = std::norm(a) + std::norm(b);
  // Output intensities after the splitter: mode 2 carries |R alpha + T beta|^2.
  const double out2 = std::norm(r * a + t * b);
  const double out3 = std::norm(t * a + r * b);
  const double sd = out2 - out3;
  return {ss, sd, sd, ss};
}

double fisher(const BeamSplitter& bs, const DualCoherent& in) {
  const double amag = in.alpha.magnitude;
  const double bmag = in.beta.magnitude;
  if (amag == 0.0 && bmag == 0.0) {
    throw Error(Status::no_information, "no information");
  }

  // Evaluate in terms of (|alpha|, varpi, dtheta); the expression is
  // symmetric under alpha <-> beta, so swap roles when |alpha| = 0.
  double mag = amag;
  double varpi = 0.0;
  double dtheta = in.delta_theta();
  if (amag > 0.0) {
    varpi = bmag / amag;
  } else {
    mag = bmag;
    dtheta = -dtheta;
  }

  const double tr = bs.tr();
  const double c2t = bs.t2_minus_r2();
  const double w2 = varpi * varpi;
  const double s = std::sin(dtheta);
  const double value =
      4.0 * mag * mag *
      (tr * tr * (1.0 + w2) -
       4.0 * tr * tr * w2 * (1.0 + s * s) / (1.0 + w2) + w2 / (1.0 + w2) -
       2.0 * tr * c2t * varpi * (1.0 - w2) * s / (1.0 + w2));

  // Independent route: compact determinant form from the output intensities.
  const FisherMatrix m = fisher_matrix(bs, in);
  const double out2 = (m.ss + m.sd) / 2.0;
  const double out3 = (m.ss - m.sd) / 2.0;
  const double compact = 4.0 * out2 * out3 / m.ss;
  check_routes_agree(value, compact, m.ss);
  return value;
}

double fisher_balanced(const DualCoherent& in) {
  if (in.alpha.magnitude <= 0.0) {
    if (in.beta.magnitude == 0.0) {
      throw Error(Status::no_information, "no information");
    }
    // varpi undefined; the balanced value only depends on the magnitudes
    // through |alpha|^2 + |beta|^2 terms, so swap roles.
    DualCoherent swapped{in.beta, in.alpha};
    return fisher_balanced(swapped);
  }
  const double a2 = in.alpha.magnitude * in.alpha.magnitude;
  const double w = in.varpi();
  const double w2 = w * w;
  const double s = std::sin(in.delta_theta());
  return a2 * (1.0 + w2 - 4.0 * w2 * s * s / (1.0 + w2));
}

KappaDecomposition kappa_decomposition(const CoherentSqueezedVacuum& in) {
  const double a2 = in.alpha.magnitude * in.alpha.magnitude;
  const double r = in.xi.r;
  const double s2r = std::sinh(2.0 * r);
  const double c2r = std::cosh(2.0 * r);
  const double shr = std::sinh(r);
  const double fss = a2 + s2r * s2r / 2.0;
  if (fss == 0.0) {
    throw Error(Status::no_information, "no information");
  }
  const double offset = 2.0 * s2r * s2r * a2 / fss;
  const double kappa =
      a2 * (s2r * std::cos(in.delta_theta()) + c2r) + shr * shr - offset;
  return {kappa, offset};
}

FisherMatrix fisher_matrix(const BeamSplitter& bs,
                           const CoherentSqueezedVacuum& in) {
  const double a2 = in.alpha.magnitude * in.alpha.magnitude;
  const double r = in.xi.r;
  const double s2r = std::sinh(2.0 * r);
  const double c2r = std::cosh(2.0 * r);
  const double shr = std::sinh(r);
  const double c2t = bs.t2_minus_r2();
  const double tr2 = bs.tr() * bs.tr();

  const double ss = a2 + s2r * s2r / 2.0;
  const double sd = c2t * (s2r * s2r / 2.0 - a2);
  const double dd =
      c2t * c2t * ss +
      4.0 * tr2 * (a2 * (s2r * std::cos(in.delta_theta()) + c2r) + shr * shr);
  return {ss, sd, sd, dd};
}

double fisher(const BeamSplitter& bs, const CoherentSqueezedVacuum& in) {
  const KappaDecomposition k = kappa_decomposition(in);
  const double tr2 = bs.tr() * bs.tr();
  const double value = 4.0 * tr2 * k.kappa + k.offset;

  // Direct route straight from the matrix elements.
  const double c2t = bs.t2_minus_r2();
  const double a2 = in.alpha.magnitude * in.alpha.magnitude;
  const double s2r = std::sinh(2.0 * in.xi.r);
  const double fss = a2 + s2r * s2r / 2.0;
  const double direct = c2t * c2t * 2.0 * s2r * s2r * a2 / fss +
                        4.0 * tr2 * (k.kappa + k.offset);
  check_routes_agree(value, direct, k.offset + 4.0 * std::abs(k.kappa));
  return value;
}

KappaDecomposition kappa_decomposition(
    const SqueezedCoherentSqueezedVacuum& in) {
  const double a2 = in.alpha.magnitude * in.alpha.magnitude;
  const double r = in.xi.r;
  const double z = in.zeta.r;
  const double s2r = std::sinh(2.0 * r);
  const double s2z = std::sinh(2.0 * z);
  const double c2r = std::cosh(2.0 * r);
  const double c2z = std::cosh(2.0 * z);
  const double shr = std::sinh(r);
  const double shz = std::sinh(z);
  const double chr = std::cosh(r);
  const double chz = std::cosh(z);

  const double q = s2z * s2z / 2.0 +
                   a2 * (c2z - s2z * std::cos(in.delta_phi()));
  const double fss = s2r * s2r / 2.0 + q;
  if (fss == 0.0) {
    throw Error(Status::no_information, "no information");
  }
  const double p =
      a2 * (c2r + s2r * std::cos(in.delta_theta())) + shr * shr + shz * shz +
      2.0 * shr * shz *
          (shr * shz - chr * chz * std::cos(in.zeta.angle - in.xi.angle));
  const double offset = 2.0 * s2r * s2r * q / fss;
  return {p - offset, offset};
}

FisherMatrix fisher_matrix(const BeamSplitter& bs,
                           const SqueezedCoherentSqueezedVacuum& in) {
  const double a2 = in.alpha.magnitude * in.alpha.magnitude;
  const double r = in.xi.r;
  const double z = in.zeta.r;
  const double s2r = std::sinh(2.0 * r);
  const double s2z = std::sinh(2.0 * z);
  const double c2r = std::cosh(2.0 * r);
  const double c2z = std::cosh(2.0 * z);
  const double shr = std::sinh(r);
  const double shz = std::sinh(z);
  const double chr = std::cosh(r);
  const double chz = std::cosh(z);
  const double c2t = bs.t2_minus_r2();
  const double tr2 = bs.tr() * bs.tr();

  const double q = s2z * s2z / 2.0 +
                   a2 * (c2z - s2z * std::cos(in.delta_phi()));
  const double ss = s2r * s2r / 2.0 + q;
  const double sd = c2t * (s2r * s2r / 2.0 - q);
  const double p =
      a2 * (c2r + s2r * std::cos(in.delta_theta())) + shr * shr + shz * shz +
      2.0 * shr * shz *
          (shr * shz - chr * chz * std::cos(in.zeta.angle - in.xi.angle));
  const double dd = c2t * c2t * ss + 4.0 * tr2 * p;
  return {ss, sd, sd, dd};
}

double fisher(const BeamSplitter& bs,
              const SqueezedCoherentSqueezedVacuum& in) {
  const KappaDecomposition k = kappa_decomposition(in);
  const double tr2 = bs.tr() * bs.tr();
  const double value = 4.0 * tr2 * k.kappa + k.offset;

  const double c2t = bs.t2_minus_r2();
  const double direct = 4.0 * tr2 * (k.kappa + k.offset) + c2t * c2t * k.offset;
  check_routes_agree(value, direct, k.offset + 4.0 * std::abs(k.kappa));
  return value;
}

double fisher_balanced(const SqueezedCoherentSqueezedVacuum& in) {
  const double a2 = in.alpha.magnitude * in.alpha.magnitude;
  const double r = in.xi.r;
  const double z = in.zeta.r;
  const double shr = std::sinh(r);
  const double shz = std::sinh(z);
  if (a2 == 0.0 && r == 0.0 && z == 0.0) {
    throw Error(Status::no_information, "no information");
  }
  return a2 * (std::cosh(2.0 * r) +
               std::sinh(2.0 * r) * std::cos(in.delta_theta())) +
         shr * shr + shz * shz +
         2.0 * shr * shz *
             (shr * shz - std::cosh(r) * std::cosh(z) *
                              std::cos(in.zeta.angle - in.xi.angle));
}

FisherMatrix fisher_matrix(const BeamSplitter& bs, const InputScenario& in) {
  return std::visit([&](const auto& s) { return fisher_matrix(bs, s); }, in);
}

double fisher(const BeamSplitter& bs, const InputScenario& in) {
  return std::visit([&](const auto& s) { return fisher(bs, s); }, in);
}

double fisher_balanced(const InputScenario& in) {
  if (const auto* dual = std::get_if<DualCoherent>(&in)) {
    return fisher_balanced(*dual);
  }
  if (const auto* both = std::get_if<SqueezedCoherentSqueezedVacuum>(&in)) {
    return fisher_balanced(*both);
  }
  return fisher(BeamSplitter::balanced(), in);
}

double mean_photon_number(const InputScenario& in) {
  return std::visit(
      [](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        const double a2 = s.alpha.magnitude * s.alpha.magnitude;
        if constexpr (std::is_same_v<T, DualCoherent>) {
          return a2 + s.beta.magnitude * s.beta.magnitude;
        } else if constexpr (std::is_same_v<T, CoherentSqueezedVacuum>) {
          const double shr = std::sinh(s.xi.r);
          return a2 + shr * shr;
        } else {
          const double shr = std::sinh(s.xi.r);
          const double shz = std::sinh(s.zeta.r);
          return a2 + shr * shr + shz * shz;
        }
      },
      in);
}

}  // namespace qfi::closed_form
