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

#include "qfi/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qfi/closed_form.hpp"

namespace qfi::optimize {

namespace {

KappaRegime classify(const closed_form::KappaDecomposition& k) {
  // Scale-aware zero band: |kappa| is compared against the magnitudes that
  // entered its cancellation.
  const double tol =
      1e-9 * std::max(1.0, std::abs(k.kappa + k.offset) + k.offset);
  KappaKind kind;
  if (std::abs(k.kappa) <= tol) {
    kind = KappaKind::transmission_independent;
  } else if (k.kappa > 0.0) {
    kind = KappaKind::balanced_optimal;
  } else {
    kind = KappaKind::degenerate_optimal;
  }
  return {kind, k.kappa};
}

}  // namespace

std::optional<double> delta_theta_opt_dual(const BeamSplitter& bs,
                                           double varpi) {
  if (!(varpi > 0.0)) {
    throw Error(Status::invalid_argument, "varpi must be > 0");
  }
  const double tr = bs.tr();
  if (tr == 0.0) {
    throw Error(Status::invalid_argument, "degenerate splitter");
  }
  const double arg =
      bs.t2_minus_r2() * (varpi - 1.0 / varpi) / (4.0 * tr);
  if (std::abs(arg) > 1.0) {
    return std::nullopt;  // no compensating mismatch exists for this (T, varpi)
  }
  return std::asin(arg);
}

TOptDual t_opt_squared_dual(double delta_theta, double varpi) {
  if (!(varpi >= 0.0)) {
    throw Error(Status::invalid_argument, "varpi must be >= 0");
  }
  const double s = std::sin(delta_theta);
  if (varpi == 1.0) {
    if (s == 0.0) {
      return {0.5, true};  // 0/0 limit: every T attains the maximum
    }
    // Removable sign ambiguity: both one-sided limits 1/2 -+ 1/2 attain the
    // maximum; evaluate the candidates and keep the argmax deterministically.
    const double sg = s > 0.0 ? 1.0 : -1.0;
    const double candidates[] = {0.5 - sg / 2.0, 0.5 + sg / 2.0, 0.5};
    DualCoherent probe{{1.0, delta_theta}, {varpi, 0.0}};
    double best = candidates[0];
    double best_f = closed_form::fisher(
        BeamSplitter::from_t_squared(candidates[0]), probe);
    for (double c : candidates) {
      double f = closed_form::fisher(BeamSplitter::from_t_squared(c), probe);
      if (f > best_f) {
        best_f = f;
        best = c;
      }
    }
    return {best, false};
  }
  const double w2 = varpi * varpi;
  const double sg = w2 > 1.0 ? 1.0 : -1.0;
  const double denom =
      std::sqrt((1.0 - w2) * (1.0 - w2) + 4.0 * w2 * s * s);
  const double t2 = 0.5 + sg * varpi * s / denom;
  return {std::clamp(t2, 0.0, 1.0), false};
}

double fisher_max(const DualCoherent& in) {
  return in.alpha.magnitude * in.alpha.magnitude +
         in.beta.magnitude * in.beta.magnitude;
}

KappaRegime kappa_regime(const CoherentSqueezedVacuum& in) {
  return classify(closed_form::kappa_decomposition(in));
}

std::optional<double> delta_theta_lim(double alpha_mag, double r) {
  if (!(alpha_mag > 0.0) || !(r > 0.0)) {
    throw Error(Status::invalid_argument,
                "delta_theta_lim requires |alpha| > 0 and r > 0");
  }
  const double a2 = alpha_mag * alpha_mag;
  const double s2r = std::sinh(2.0 * r);
  const double c2r = std::cosh(2.0 * r);
  const double shr = std::sinh(r);
  const double offset = 2.0 * s2r * s2r * a2 / (a2 + s2r * s2r / 2.0);
  const double c = (offset - a2 * c2r - shr * shr) / (a2 * s2r);
  if (std::abs(c) > 1.0) {
    return std::nullopt;
  }
  return std::acos(c);
}

std::optional<double> delta_theta_lim_approx(double alpha_mag, double r) {
  if (!(alpha_mag > 0.0) || !(r > 0.0)) {
    throw Error(Status::invalid_argument,
                "delta_theta_lim_approx requires |alpha| > 0 and r > 0");
  }
  const double a2 = alpha_mag * alpha_mag;
  const double s2r = std::sinh(2.0 * r);
  const double c = 2.0 * s2r / a2 - std::cosh(2.0 * r) / s2r;
  if (std::abs(c) > 1.0) {
    return std::nullopt;
  }
  return std::acos(c);
}

double fisher_max(const CoherentSqueezedVacuum& in) {
  const double a2 = in.alpha.magnitude * in.alpha.magnitude;
  const double shr = std::sinh(in.xi.r);
  return a2 * std::exp(2.0 * in.xi.r) + shr * shr;
}

KappaRegime kappa_regime(const SqueezedCoherentSqueezedVacuum& in) {
  return classify(closed_form::kappa_decomposition(in));
}

std::optional<double> kappa_root_delta_theta(
    const SqueezedCoherentSqueezedVacuum& in) {
  auto kappa_at = [&](double dtheta) {
    SqueezedCoherentSqueezedVacuum probe = in;
    probe.xi.angle = 2.0 * in.alpha.phase - dtheta;
    return closed_form::kappa_decomposition(probe).kappa;
  };
  constexpr int kGrid = 4096;
  double lo = 0.0;
  double f_lo = kappa_at(lo);
  if (f_lo == 0.0) {
    return lo;
  }
  double hi = 0.0;
  double f_hi = 0.0;
  bool bracketed = false;
  for (int i = 1; i <= kGrid; ++i) {
    hi = std::numbers::pi * static_cast<double>(i) / kGrid;
    f_hi = kappa_at(hi);
    if (f_hi == 0.0) {
      return hi;
    }
    if ((f_lo > 0.0) != (f_hi > 0.0)) {
      bracketed = true;
      break;
    }
    lo = hi;
    f_lo = f_hi;
  }
  if (!bracketed) {
    return std::nullopt;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = (lo + hi) / 2.0;
    const double f_mid = kappa_at(mid);
    if (f_mid == 0.0) {
      return mid;
    }
    if ((f_lo > 0.0) != (f_mid > 0.0)) {
      hi = mid;
    } else {
      lo = mid;
      f_lo = f_mid;
    }
  }
  return (lo + hi) / 2.0;
}

double fisher_max(const SqueezedCoherentSqueezedVacuum& in) {
  const double a2 = in.alpha.magnitude * in.alpha.magnitude;
  const double sh = std::sinh(in.xi.r + in.zeta.r);
  return a2 * std::exp(2.0 * in.xi.r) + sh * sh;
}

double fisher_max(const InputScenario& in) {
  return std::visit([](const auto& s) { return fisher_max(s); }, in);
}

}  // namespace qfi::optimize
