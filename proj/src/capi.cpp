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

#include "qfi_mzi.h"

#include <new>

#include "qfi/closed_form.hpp"
#include "qfi/core.hpp"
#include "qfi/detection.hpp"
#include "qfi/fock_oracle.hpp"
#include "qfi/optimize.hpp"

struct qfi_scenario {
  qfi::InputScenario value;
};

namespace {

qfi_status to_status(qfi::Status s) {
  switch (s) {
    case qfi::Status::ok:
      return QFI_OK;
    case qfi::Status::invalid_argument:
      return QFI_ERR_INVALID_ARGUMENT;
    case qfi::Status::no_information:
      return QFI_ERR_NO_INFORMATION;
    case qfi::Status::singular_sum_block:
      return QFI_ERR_SINGULAR_SUM_BLOCK;
    case qfi::Status::no_solution:
      return QFI_ERR_NO_SOLUTION;
    case qfi::Status::cutoff_too_small:
      return QFI_ERR_CUTOFF_TOO_SMALL;
    case qfi::Status::unsupported:
      return QFI_ERR_UNSUPPORTED;
    case qfi::Status::insensitive_point:
      return QFI_ERR_INSENSITIVE_POINT;
  }
  return QFI_ERR_INTERNAL;
}

template <typename Fn>
qfi_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const qfi::Error& e) {
    return to_status(e.status());
  } catch (const std::bad_alloc&) {
    return QFI_ERR_INTERNAL;
  } catch (const std::exception&) {
    return QFI_ERR_INTERNAL;
  }
}

qfi_status make_scenario(qfi::InputScenario value, qfi_scenario** out) {
  if (out == nullptr) {
    return QFI_ERR_INVALID_ARGUMENT;
  }
  *out = new qfi_scenario{std::move(value)};
  return QFI_OK;
}

bool bad(const qfi_scenario* s, const void* out) {
  return s == nullptr || out == nullptr;
}

}  // namespace

extern "C" {

const char* qfi_status_message(qfi_status status) {
  switch (status) {
    case QFI_OK:
      return "ok";
    case QFI_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case QFI_ERR_NO_INFORMATION:
      return "no information";
    case QFI_ERR_SINGULAR_SUM_BLOCK:
      return "singular sum block";
    case QFI_ERR_NO_SOLUTION:
      return "no solution";
    case QFI_ERR_CUTOFF_TOO_SMALL:
      return "cutoff too small";
    case QFI_ERR_UNSUPPORTED:
      return "unsupported for this scenario";
    case QFI_ERR_INSENSITIVE_POINT:
      return "insensitive working point";
    case QFI_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* qfi_mzi_version(void) { return "0.1.0"; }

qfi_status qfi_scenario_dual_coherent(double alpha_mag, double alpha_phase,
                                      double beta_mag, double beta_phase,
                                      qfi_scenario** out) {
  return guarded([&] {
    return make_scenario(
        qfi::DualCoherent{{alpha_mag, alpha_phase}, {beta_mag, beta_phase}},
        out);
  });
}

qfi_status qfi_scenario_coherent_squeezed(double alpha_mag,
                                          double alpha_phase, double r,
                                          double theta, qfi_scenario** out) {
  return guarded([&] {
    return make_scenario(
        qfi::CoherentSqueezedVacuum{{alpha_mag, alpha_phase}, {r, theta}},
        out);
  });
}

qfi_status qfi_scenario_squeezed_coherent_squeezed(
    double alpha_mag, double alpha_phase, double z, double phi, double r,
    double theta, qfi_scenario** out) {
  return guarded([&] {
    return make_scenario(
        qfi::SqueezedCoherentSqueezedVacuum{
            {alpha_mag, alpha_phase}, {z, phi}, {r, theta}},
        out);
  });
}

void qfi_scenario_free(qfi_scenario* scenario) { delete scenario; }

qfi_status qfi_fisher_matrix_closed(const qfi_scenario* scenario, double tau,
                             qfi_fisher_matrix* out) {
  if (bad(scenario, out)) return QFI_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const qfi::FisherMatrix m =
        qfi::closed_form::fisher_matrix(qfi::BeamSplitter(tau),
                                        scenario->value);
    *out = {m.ss, m.sd, m.ds, m.dd};
    return QFI_OK;
  });
}

qfi_status qfi_fisher(const qfi_scenario* scenario, double tau, double* out) {
  if (bad(scenario, out)) return QFI_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = qfi::closed_form::fisher(qfi::BeamSplitter(tau), scenario->value);
    return QFI_OK;
  });
}

qfi_status qfi_fisher_balanced(const qfi_scenario* scenario, double* out) {
  if (bad(scenario, out)) return QFI_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = qfi::closed_form::fisher_balanced(scenario->value);
    return QFI_OK;
  });
}

qfi_status qfi_fisher_max(const qfi_scenario* scenario, double* out) {
  if (bad(scenario, out)) return QFI_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = qfi::optimize::fisher_max(scenario->value);
    return QFI_OK;
  });
}

qfi_status qfi_mean_photon_number(const qfi_scenario* scenario, double* out) {
  if (bad(scenario, out)) return QFI_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = qfi::closed_form::mean_photon_number(scenario->value);
    return QFI_OK;
  });
}

qfi_status qfi_reduce_fisher(const qfi_fisher_matrix* matrix, double* out) {
  if (matrix == nullptr || out == nullptr) return QFI_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = qfi::reduce_fisher(
        {matrix->ss, matrix->sd, matrix->ds, matrix->dd});
    return QFI_OK;
  });
}

qfi_status qfi_qcrb_sensitivity(double fisher, double* out) {
  if (out == nullptr) return QFI_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = qfi::qcrb_sensitivity(fisher);
    return QFI_OK;
  });
}

qfi_status qfi_kappa(const qfi_scenario* scenario, double* kappa,
                     qfi_kappa_regime* regime) {
  if (scenario == nullptr || kappa == nullptr || regime == nullptr) {
    return QFI_ERR_INVALID_ARGUMENT;
  }
  return guarded([&]() -> qfi_status {
    qfi::optimize::KappaRegime result{};
    if (const auto* s =
            std::get_if<qfi::CoherentSqueezedVacuum>(&scenario->value)) {
      result = qfi::optimize::kappa_regime(*s);
    } else if (const auto* s = std::get_if<qfi::SqueezedCoherentSqueezedVacuum>(
                   &scenario->value)) {
      result = qfi::optimize::kappa_regime(*s);
    } else {
      return QFI_ERR_UNSUPPORTED;
    }
    *kappa = result.kappa;
    switch (result.kind) {
      case qfi::optimize::KappaKind::balanced_optimal:
        *regime = QFI_KAPPA_BALANCED_OPTIMAL;
        break;
      case qfi::optimize::KappaKind::transmission_independent:
        *regime = QFI_KAPPA_TRANSMISSION_INDEPENDENT;
        break;
      case qfi::optimize::KappaKind::degenerate_optimal:
        *regime = QFI_KAPPA_DEGENERATE_OPTIMAL;
        break;
    }
    return QFI_OK;
  });
}

qfi_status qfi_delta_theta_opt_dual(double tau, double varpi, double* out) {
  if (out == nullptr) return QFI_ERR_INVALID_ARGUMENT;
  return guarded([&]() -> qfi_status {
    const auto v =
        qfi::optimize::delta_theta_opt_dual(qfi::BeamSplitter(tau), varpi);
    if (!v) {
      return QFI_ERR_NO_SOLUTION;
    }
    *out = *v;
    return QFI_OK;
  });
}

qfi_status qfi_t_opt_squared_dual(double delta_theta, double varpi,
                                  double* t_squared, int* degenerate) {
  if (t_squared == nullptr || degenerate == nullptr) {
    return QFI_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const auto v = qfi::optimize::t_opt_squared_dual(delta_theta, varpi);
    *t_squared = v.t_squared;
    *degenerate = v.degenerate ? 1 : 0;
    return QFI_OK;
  });
}

qfi_status qfi_delta_theta_lim(double alpha_mag, double r, double* out) {
  if (out == nullptr) return QFI_ERR_INVALID_ARGUMENT;
  return guarded([&]() -> qfi_status {
    const auto v = qfi::optimize::delta_theta_lim(alpha_mag, r);
    if (!v) {
      return QFI_ERR_NO_SOLUTION;
    }
    *out = *v;
    return QFI_OK;
  });
}

qfi_status qfi_kappa_root_delta_theta(const qfi_scenario* scenario,
                                      double* out) {
  if (bad(scenario, out)) return QFI_ERR_INVALID_ARGUMENT;
  return guarded([&]() -> qfi_status {
    const auto* s =
        std::get_if<qfi::SqueezedCoherentSqueezedVacuum>(&scenario->value);
    if (s == nullptr) {
      return QFI_ERR_UNSUPPORTED;
    }
    const auto v = qfi::optimize::kappa_root_delta_theta(*s);
    if (!v) {
      return QFI_ERR_NO_SOLUTION;
    }
    *out = *v;
    return QFI_OK;
  });
}

qfi_status qfi_nd_mean_derivative(const qfi_scenario* scenario, double tau,
                                  double phi, double* out) {
  if (bad(scenario, out)) return QFI_ERR_INVALID_ARGUMENT;
  return guarded([&]() -> qfi_status {
    const auto* s = std::get_if<qfi::DualCoherent>(&scenario->value);
    if (s == nullptr) return QFI_ERR_UNSUPPORTED;
    *out = qfi::detection::nd_mean_derivative(
        {qfi::BeamSplitter(tau), *s, phi});
    return QFI_OK;
  });
}

qfi_status qfi_nd_variance(const qfi_scenario* scenario, double* out) {
  if (bad(scenario, out)) return QFI_ERR_INVALID_ARGUMENT;
  return guarded([&]() -> qfi_status {
    const auto* s = std::get_if<qfi::DualCoherent>(&scenario->value);
    if (s == nullptr) return QFI_ERR_UNSUPPORTED;
    *out = qfi::detection::nd_variance(
        {qfi::BeamSplitter::balanced(), *s, 0.0});
    return QFI_OK;
  });
}

qfi_status qfi_delta_phi_diff(const qfi_scenario* scenario, double tau,
                              double phi, double* out) {
  if (bad(scenario, out)) return QFI_ERR_INVALID_ARGUMENT;
  return guarded([&]() -> qfi_status {
    const auto* s = std::get_if<qfi::DualCoherent>(&scenario->value);
    if (s == nullptr) return QFI_ERR_UNSUPPORTED;
    *out = qfi::detection::delta_phi_diff({qfi::BeamSplitter(tau), *s, phi});
    return QFI_OK;
  });
}

qfi_status qfi_phi_opt(const qfi_scenario* scenario, double tau, double* out,
                       int* on_sin_fringe) {
  if (scenario == nullptr || out == nullptr || on_sin_fringe == nullptr) {
    return QFI_ERR_INVALID_ARGUMENT;
  }
  return guarded([&]() -> qfi_status {
    const auto* s = std::get_if<qfi::DualCoherent>(&scenario->value);
    if (s == nullptr) return QFI_ERR_UNSUPPORTED;
    const auto v = qfi::detection::phi_opt(qfi::BeamSplitter(tau), *s);
    *out = v.phi;
    *on_sin_fringe = v.sin_fringe ? 1 : 0;
    return QFI_OK;
  });
}

qfi_status qfi_oracle_fisher_matrix(const qfi_scenario* scenario, double tau,
                                    int cutoff, qfi_fisher_matrix* out) {
  if (bad(scenario, out)) return QFI_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const int c =
        cutoff > 0 ? cutoff : qfi::oracle::default_cutoff(scenario->value);
    const qfi::FisherMatrix m = qfi::oracle::fisher_matrix(
        scenario->value, qfi::BeamSplitter(tau), c);
    *out = {m.ss, m.sd, m.ds, m.dd};
    return QFI_OK;
  });
}

qfi_status qfi_oracle_nd_moments(const qfi_scenario* scenario, double tau,
                                 double phi, int cutoff, double* mean,
                                 double* variance) {
  if (scenario == nullptr || mean == nullptr || variance == nullptr) {
    return QFI_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const int c =
        cutoff > 0 ? cutoff : qfi::oracle::default_cutoff(scenario->value);
    auto [port0, port1] = qfi::oracle::build_inputs(scenario->value, c);
    const auto psi23 = qfi::oracle::apply_beam_splitter(
        port0, port1, qfi::BeamSplitter(tau));
    const auto m = qfi::oracle::observable_moments(psi23, phi);
    *mean = m.mean;
    *variance = m.variance;
    return QFI_OK;
  });
}

}  // extern "C"
