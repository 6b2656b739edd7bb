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

#include "qfi/fock_oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace qfi::oracle {

namespace {

constexpr int kMinCutoff = 8;

void require_cutoff(int cutoff) {
  if (cutoff < kMinCutoff) {
    throw Error(Status::invalid_argument, "cutoff must be >= 8");
  }
}

// Eigendecompositions of the sector generators H_N (tridiagonal with
// off-diagonal sqrt((m+1)(N-m))), shared across beam-splitter applications
// with the same cutoff.  H_N does not depend on tau, so the per-application
// work is only the rotation itself.
struct SectorBasis {
  std::vector<Eigen::MatrixXd> vectors;  // index N = 0 .. 2*cutoff
  std::vector<Eigen::VectorXd> values;
};

std::shared_ptr<const SectorBasis> sector_basis(int cutoff) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const SectorBasis>> cache;
  std::scoped_lock lock(mutex);
  auto it = cache.find(cutoff);
  if (it != cache.end()) {
    return it->second;
  }
  auto basis = std::make_shared<SectorBasis>();
  basis->vectors.reserve(2 * cutoff + 1);
  basis->values.reserve(2 * cutoff + 1);
  for (int total = 0; total <= 2 * cutoff; ++total) {
    const int dim = total + 1;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int m = 0; m + 1 < dim; ++m) {
      const double v = std::sqrt(static_cast<double>(m + 1) *
                                 static_cast<double>(total - m));
      h(m, m + 1) = v;
      h(m + 1, m) = v;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    basis->vectors.push_back(solver.eigenvectors());
    basis->values.push_back(solver.eigenvalues());
  }
  cache.emplace(cutoff, basis);
  return basis;
}

}  // namespace

void SingleModeState::validate(double tail_tol, double expected_mean) const {
  const int n = static_cast<int>(amp_.size());
  double tail = 0.0;
  for (int i = std::max(0, n - 5); i < n; ++i) {
    tail += std::norm(amp_[i]);
  }
  if (tail > tail_tol) {
    throw Error(Status::cutoff_too_small, "cutoff too small");
  }
  const double nsq = norm_squared();
  if (nsq < 1.0 - tail_tol || nsq > 1.0 + 1e-12) {
    throw Error(Status::cutoff_too_small, "cutoff too small");
  }
  const double mean = mean_photon_number();
  if (std::abs(mean - expected_mean) > 1e-9 * std::max(1.0, expected_mean)) {
    throw Error(Status::cutoff_too_small, "cutoff too small");
  }
}

SingleModeState SingleModeState::coherent(const CoherentAmplitude& alpha,
                                          int cutoff, double tail_tol) {
  require_cutoff(cutoff);
  std::vector<std::complex<double>> amp(cutoff + 1);
  const std::complex<double> a = alpha.value();
  amp[0] = std::exp(-alpha.magnitude * alpha.magnitude / 2.0);
  for (int n = 0; n < cutoff; ++n) {
    amp[n + 1] = amp[n] * a / std::sqrt(static_cast<double>(n + 1));
  }
  SingleModeState state(std::move(amp));
  state.validate(tail_tol, alpha.magnitude * alpha.magnitude);
  return state;
}

SingleModeState SingleModeState::squeezed_coherent(
    const CoherentAmplitude& alpha, const SqueezeParam& zeta, int cutoff,
    double tail_tol) {
  require_cutoff(cutoff);
  const std::complex<double> a = alpha.value();
  const double mu = std::cosh(zeta.r);
  const std::complex<double> nu =
      std::polar(std::sinh(zeta.r), zeta.angle);
  // D(alpha) S(zeta)|0> is annihilated by mu a + nu a^dag - gamma.
  const std::complex<double> gamma = a * mu + std::conj(a) * nu;
  std::vector<std::complex<double>> amp(cutoff + 1);
  amp[0] = std::exp(-alpha.magnitude * alpha.magnitude / 2.0 -
                    std::conj(a) * std::conj(a) *
                        std::polar(std::tanh(zeta.r), zeta.angle) / 2.0) /
           std::sqrt(mu);
  for (int n = 0; n < cutoff; ++n) {
    const std::complex<double> prev = n >= 1 ? amp[n - 1] : 0.0;
    amp[n + 1] = (gamma * amp[n] - nu * std::sqrt(static_cast<double>(n)) * prev) /
                 (mu * std::sqrt(static_cast<double>(n + 1)));
  }
  SingleModeState state(std::move(amp));
  const double shz = std::sinh(zeta.r);
  state.validate(tail_tol, alpha.magnitude * alpha.magnitude + shz * shz);
  return state;
}

double SingleModeState::norm_squared() const {
  double s = 0.0;
  for (const auto& c : amp_) {
    s += std::norm(c);
  }
  return s;
}

double SingleModeState::mean_photon_number() const {
  double s = 0.0;
  for (size_t n = 0; n < amp_.size(); ++n) {
    s += static_cast<double>(n) * std::norm(amp_[n]);
  }
  return s;
}

TwoModeState::TwoModeState(int cutoff) : cutoff_(cutoff) {
  require_cutoff(cutoff);
  amp_.assign(static_cast<size_t>(cutoff + 1) * (cutoff + 1), 0.0);
}

double TwoModeState::norm_squared() const {
  double s = 0.0;
  for (const auto& c : amp_) {
    s += std::norm(c);
  }
  return s;
}

double TwoModeState::mean_photon_first() const {
  double s = 0.0;
  for (int i = 0; i <= cutoff_; ++i) {
    for (int j = 0; j <= cutoff_; ++j) {
      s += static_cast<double>(i) * std::norm(amplitude(i, j));
    }
  }
  return s;
}

double TwoModeState::mean_photon_second() const {
  double s = 0.0;
  for (int i = 0; i <= cutoff_; ++i) {
    for (int j = 0; j <= cutoff_; ++j) {
      s += static_cast<double>(j) * std::norm(amplitude(i, j));
    }
  }
  return s;
}

TwoModeState product_state(const SingleModeState& in0,
                           const SingleModeState& in1) {
  if (in0.cutoff() != in1.cutoff()) {
    throw Error(Status::invalid_argument, "input cutoffs do not match");
  }
  const int cutoff = in0.cutoff();
  TwoModeState out(cutoff);
  const auto a0 = in0.amplitudes();
  const auto a1 = in1.amplitudes();
  for (int i = 0; i <= cutoff; ++i) {
    for (int j = 0; j <= cutoff; ++j) {
      out.at(i, j) = a0[i] * a1[j];
    }
  }
  return out;
}

TwoModeState apply_mixing(const TwoModeState& state, double tau_signed) {
  const int cutoff = state.cutoff();
  const auto basis = sector_basis(cutoff);

  TwoModeState out(cutoff);
  Eigen::VectorXcd sector;
  for (int total = 0; total <= 2 * cutoff; ++total) {
    const int dim = total + 1;
    const int lo = std::max(0, total - cutoff);
    const int hi = std::min(total, cutoff);
    sector = Eigen::VectorXcd::Zero(dim);
    bool empty = true;
    for (int m = lo; m <= hi; ++m) {
      const std::complex<double> c = state.amplitude(m, total - m);
      sector(m) = c;
      empty = empty && c == 0.0;
    }
    if (empty) {
      continue;
    }
    const Eigen::MatrixXd& v = basis->vectors[total];
    const Eigen::VectorXd& lambda = basis->values[total];
    Eigen::VectorXcd coef = v.transpose() * sector;
    for (int k = 0; k < dim; ++k) {
      coef(k) *= std::polar(1.0, tau_signed * lambda(k));
    }
    sector = v * coef;
    for (int m = lo; m <= hi; ++m) {
      out.at(m, total - m) = sector(m);
    }
    // Components with m outside [lo, hi] have no grid slot; the mass they
    // carry shows up in the norm check below.
  }

  if (std::abs(out.norm_squared() - state.norm_squared()) > 1e-10) {
    throw Error(Status::cutoff_too_small,
                "mixing rotated amplitude mass beyond the cutoff");
  }
  return out;
}

TwoModeState apply_beam_splitter(const SingleModeState& in0,
                                 const SingleModeState& in1,
                                 const BeamSplitter& bs) {
  const TwoModeState input = product_state(in0, in1);
  TwoModeState out = apply_mixing(input, bs.tau());
  if (std::abs(out.norm_squared() - 1.0) > 1e-10) {
    throw Error(Status::cutoff_too_small,
                "beam splitter output norm deviates from 1");
  }
  const double n_in = input.mean_photon_first() + input.mean_photon_second();
  const double n_out = out.mean_photon_first() + out.mean_photon_second();
  if (std::abs(n_in - n_out) > 1e-10 * std::max(1.0, n_in)) {
    throw Error(Status::cutoff_too_small,
                "photon number not conserved within tolerance");
  }
  return out;
}

FisherMatrix fisher_matrix_numeric(const TwoModeState& psi23) {
  const int cutoff = psi23.cutoff();
  double es = 0.0, ed = 0.0, ess = 0.0, edd = 0.0, esd = 0.0;
  for (int n2 = 0; n2 <= cutoff; ++n2) {
    for (int n3 = 0; n3 <= cutoff; ++n3) {
      const double p = std::norm(psi23.amplitude(n2, n3));
      if (p == 0.0) {
        continue;
      }
      const double gs = (n2 + n3) / 2.0;
      const double gd = (n2 - n3) / 2.0;
      es += p * gs;
      ed += p * gd;
      ess += p * gs * gs;
      edd += p * gd * gd;
      esd += p * gs * gd;
    }
  }
  const double ss = 4.0 * (ess - es * es);
  const double dd = 4.0 * (edd - ed * ed);
  const double sd = 4.0 * (esd - es * ed);
  return {ss, sd, sd, dd};
}

NdMoments observable_moments(const TwoModeState& psi23, double phi) {
  const int cutoff = psi23.cutoff();
  const std::complex<double> up = std::complex<double>(0.0, 1.0) *
                                  std::polar(1.0, phi);   // a2^dag a3
  const std::complex<double> down = std::complex<double>(0.0, -1.0) *
                                    std::polar(1.0, -phi);  // a3^dag a2
  TwoModeState acted(cutoff);
  for (int n2 = 0; n2 <= cutoff; ++n2) {
    for (int n3 = 0; n3 <= cutoff; ++n3) {
      const std::complex<double> c = psi23.amplitude(n2, n3);
      if (c == 0.0) {
        continue;
      }
      if (n2 + 1 <= cutoff && n3 >= 1) {
        acted.at(n2 + 1, n3 - 1) +=
            up * std::sqrt(static_cast<double>(n2 + 1) * n3) * c;
      }
      if (n3 + 1 <= cutoff && n2 >= 1) {
        acted.at(n2 - 1, n3 + 1) +=
            down * std::sqrt(static_cast<double>(n3 + 1) * n2) * c;
      }
    }
  }
  std::complex<double> mean_c = 0.0;
  double second = 0.0;
  const auto a = psi23.amplitudes();
  const auto b = acted.amplitudes();
  for (size_t i = 0; i < a.size(); ++i) {
    mean_c += std::conj(a[i]) * b[i];
    second += std::norm(b[i]);
  }
  const double mean = mean_c.real();
  return {mean, second - mean * mean};
}

int default_cutoff(const InputScenario& in) {
  double amax = 0.0;
  double smax = 0.0;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        amax = s.alpha.magnitude;
        if constexpr (std::is_same_v<T, DualCoherent>) {
          amax = std::max(amax, s.beta.magnitude);
        } else if constexpr (std::is_same_v<T, CoherentSqueezedVacuum>) {
          smax = s.xi.r;
        } else {
          smax = std::max(s.xi.r, s.zeta.r);
        }
      },
      in);
  return (amax <= 1.0 && smax <= 0.3) ? 40 : 60;
}

std::pair<SingleModeState, SingleModeState> build_inputs(
    const InputScenario& in, int cutoff, double tail_tol) {
  return std::visit(
      [&](const auto& s) -> std::pair<SingleModeState, SingleModeState> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DualCoherent>) {
          return {SingleModeState::coherent(s.beta, cutoff, tail_tol),
                  SingleModeState::coherent(s.alpha, cutoff, tail_tol)};
        } else if constexpr (std::is_same_v<T, CoherentSqueezedVacuum>) {
          return {SingleModeState::squeezed_coherent({}, s.xi, cutoff,
                                                     tail_tol),
                  SingleModeState::coherent(s.alpha, cutoff, tail_tol)};
        } else {
          return {SingleModeState::squeezed_coherent({}, s.xi, cutoff,
                                                     tail_tol),
                  SingleModeState::squeezed_coherent(s.alpha, s.zeta, cutoff,
                                                     tail_tol)};
        }
      },
      in);
}

FisherMatrix fisher_matrix(const InputScenario& in, const BeamSplitter& bs,
                           int cutoff) {
  auto [port0, port1] = build_inputs(in, cutoff);
  return fisher_matrix_numeric(apply_beam_splitter(port0, port1, bs));
}

}  // namespace qfi::oracle
