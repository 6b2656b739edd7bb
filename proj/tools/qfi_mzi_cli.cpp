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

// Command-line front end: parameter sweeps, optimum lookup, regime
// classification, oracle verification and figure-preset CSV emission.
// Built exclusively on the public C API.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "qfi_mzi.h"

namespace {

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------- helpers

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct ScenarioDeleter {
  void operator()(qfi_scenario* s) const { qfi_scenario_free(s); }
};
using ScenarioPtr = std::unique_ptr<qfi_scenario, ScenarioDeleter>;

[[noreturn]] void die_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(1);
}

void check_status(qfi_status st, const std::string& context) {
  if (st != QFI_OK) {
    die_usage(context + ": " + qfi_status_message(st));
  }
}

double tau_from_t2(double t2) {
  if (!(t2 >= 0.0 && t2 <= 1.0)) {
    die_usage("t2 must lie in [0, 1], got " + fmt_g(t2));
  }
  return std::acos(std::sqrt(t2));
}

int thread_budget(std::size_t jobs) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("QFI_MZI_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) {
      hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
    }
  }
  return static_cast<int>(
      std::min<std::size_t>(hw, std::max<std::size_t>(jobs, 1)));
}

// Runs fn(i) for i in [0, n); results are written into index-addressed
// slots so the output order never depends on scheduling.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const int workers = thread_budget(n);
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

// Platform-independent uniforms from a seeded mt19937_64.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double unit() {  // [0, 1)
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
  }
  double unit_open_top() { return 1.0 - unit(); }      // (0, 1]
  double angle() { return kPi - 2.0 * kPi * unit(); }  // (-pi, pi]
  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }
};

// -------------------------------------------------------- scenario flags

struct ScenarioArgs {
  std::string kind;  // dual | coh-sqz | sqzcoh-sqz
  double alpha = 0.0, alpha_phase = 0.0;
  double beta = 0.0, beta_phase = 0.0;
  double r = 0.0, theta = 0.0;
  double z = 0.0, phi_sqz = 0.0;

  bool is_dual() const { return kind == "dual"; }
  bool has_xi() const { return kind == "coh-sqz" || kind == "sqzcoh-sqz"; }

  void set_delta_theta(double dtheta) {
    if (is_dual()) {
      beta_phase = alpha_phase - dtheta;
    } else {
      theta = 2.0 * alpha_phase - dtheta;
    }
  }

  ScenarioPtr make() const {
    qfi_scenario* raw = nullptr;
    qfi_status st = QFI_ERR_INVALID_ARGUMENT;
    if (kind == "dual") {
      st = qfi_scenario_dual_coherent(alpha, alpha_phase, beta, beta_phase,
                                      &raw);
    } else if (kind == "coh-sqz") {
      st = qfi_scenario_coherent_squeezed(alpha, alpha_phase, r, theta, &raw);
    } else if (kind == "sqzcoh-sqz") {
      st = qfi_scenario_squeezed_coherent_squeezed(alpha, alpha_phase, z,
                                                   phi_sqz, r, theta, &raw);
    } else {
      die_usage("scenario must be one of dual, coh-sqz, sqzcoh-sqz");
    }
    check_status(st, "scenario");
    return ScenarioPtr(raw);
  }
};

void add_scenario_flags(CLI::App* cmd, ScenarioArgs* args) {
  cmd->add_option("--scenario", args->kind,
                  "Input scenario: dual, coh-sqz, sqzcoh-sqz")
      ->required();
  cmd->add_option("--alpha", args->alpha,
                  "Coherent magnitude |alpha| (port 1)");
  cmd->add_option("--alpha-phase", args->alpha_phase,
                  "Coherent phase theta_alpha [rad]");
  cmd->add_option("--beta", args->beta, "Coherent magnitude |beta| (port 0)");
  cmd->add_option("--beta-phase", args->beta_phase,
                  "Coherent phase theta_beta [rad]");
  cmd->add_option("--r", args->r, "Squeezing factor r of xi (port 0)");
  cmd->add_option("--theta", args->theta,
                  "Squeezing angle theta of xi [rad]");
  cmd->add_option("--z", args->z, "Squeezing factor z of zeta (port 1)");
  cmd->add_option("--phi-sqz", args->phi_sqz,
                  "Squeezing angle phi of zeta [rad]");
}

// ------------------------------------------------------------- CSV sweep

struct SweepSpec {
  ScenarioArgs base;
  std::string var;  // t2 | delta-theta | theta | phi-internal
  double from = 0.0, to = 1.0;
  int points = 2;
  std::vector<std::pair<std::string, double>> overlays;  // (key, value)
  double t2 = 0.5;                     // splitter when not swept
  std::optional<double> phi_internal;  // detection phase when fixed
  bool want_diff_column = false;
  bool want_kappa_column = false;
};

struct RowScenario {
  ScenarioArgs args;
  double t2;
  std::optional<double> phi_internal;
};

void apply_key(RowScenario* row, const std::string& key, double value) {
  if (key == "t2") {
    row->t2 = value;
  } else if (key == "delta-theta") {
    row->args.set_delta_theta(value);
  } else if (key == "theta") {
    row->args.theta = value;
  } else if (key == "phi-sqz") {
    row->args.phi_sqz = value;
  } else if (key == "phi-internal") {
    row->phi_internal = value;
  } else if (key == "beta") {
    row->args.beta = value;
  } else {
    die_usage("unknown sweep/overlay key '" + key + "'");
  }
}

void validate_spec(const SweepSpec& spec) {
  const std::string& v = spec.var;
  if (v != "t2" && v != "delta-theta" && v != "theta" &&
      v != "phi-internal") {
    die_usage(
        "var must be one of t2, delta-theta, theta, phi-internal; got '" + v +
        "'");
  }
  if (v == "theta" && !spec.base.has_xi()) {
    die_usage("var 'theta' requires a squeezed scenario (field: var)");
  }
  if (v == "phi-internal" && !spec.base.is_dual()) {
    die_usage("var 'phi-internal' requires the dual scenario (field: var)");
  }
  if (!(spec.from < spec.to)) {
    die_usage("sweep range requires from < to (fields: from, to)");
  }
  if (spec.points < 2) {
    die_usage("points must be >= 2 (field: points)");
  }
  for (const auto& [key, value] : spec.overlays) {
    (void)value;
    if (key == spec.var) {
      die_usage("overlay key '" + key + "' duplicates the sweep variable");
    }
  }
}

std::string var_column(const std::string& var) {
  if (var == "t2") return "t_squared";
  if (var == "delta-theta") return "delta_theta_rad";
  if (var == "theta") return "theta_rad";
  return "phi_internal_rad";
}

struct SweepRow {
  std::string overlay;
  double x = 0.0;
  double fisher = 0.0;
  std::optional<double> qcrb;
  std::optional<double> diff;
  std::optional<double> kappa;
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  validate_spec(spec);
  std::vector<std::pair<std::string, double>> overlays = spec.overlays;
  if (overlays.empty()) {
    overlays.emplace_back("", 0.0);
  }
  const std::size_t n_rows =
      overlays.size() * static_cast<std::size_t>(spec.points);
  std::vector<SweepRow> rows(n_rows);

  parallel_for(n_rows, [&](std::size_t idx) {
    const std::size_t o = idx / spec.points;
    const int i = static_cast<int>(idx % spec.points);
    RowScenario row{spec.base, spec.t2, spec.phi_internal};
    std::string label;
    if (!overlays[o].first.empty()) {
      apply_key(&row, overlays[o].first, overlays[o].second);
      label = overlays[o].first + "=" + fmt_g(overlays[o].second);
    }
    const double x =
        spec.from + (spec.to - spec.from) * i / (spec.points - 1);
    apply_key(&row, spec.var, x);

    ScenarioPtr s = row.args.make();
    const double tau = tau_from_t2(row.t2);
    SweepRow& out = rows[idx];
    out.overlay = label;
    out.x = x;
    check_status(qfi_fisher(s.get(), tau, &out.fisher), "fisher");
    double qcrb = 0.0;
    if (qfi_qcrb_sensitivity(out.fisher, &qcrb) == QFI_OK) {
      out.qcrb = qcrb;
    }
    if (spec.want_diff_column && row.args.is_dual() && row.phi_internal) {
      double diff = 0.0;
      if (qfi_delta_phi_diff(s.get(), tau, *row.phi_internal, &diff) ==
          QFI_OK) {
        out.diff = diff;
      }
    }
    if (spec.want_kappa_column && row.args.has_xi()) {
      double kappa = 0.0;
      qfi_kappa_regime regime;
      if (qfi_kappa(s.get(), &kappa, &regime) == QFI_OK) {
        out.kappa = kappa;
      }
    }
  });
  return rows;
}

void write_csv(std::ostream& os, const SweepSpec& spec,
               const std::vector<SweepRow>& rows) {
  os << "overlay," << var_column(spec.var) << ",fisher,delta_phi_qcrb_rad";
  if (spec.want_diff_column) os << ",delta_phi_diff_rad";
  if (spec.want_kappa_column) os << ",kappa";
  os << "\n";
  for (const auto& row : rows) {
    os << row.overlay << "," << fmt_g(row.x) << "," << fmt_g(row.fisher)
       << "," << (row.qcrb ? fmt_g(*row.qcrb) : "");
    if (spec.want_diff_column) {
      os << "," << (row.diff ? fmt_g(*row.diff) : "");
    }
    if (spec.want_kappa_column) {
      os << "," << (row.kappa ? fmt_g(*row.kappa) : "");
    }
    os << "\n";
  }
}

void emit_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows,
              const std::string& output) {
  if (output.empty() || output == "-") {
    write_csv(std::cout, spec, rows);
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) {
    die_usage("cannot open output file '" + output + "'");
  }
  write_csv(file, spec, rows);
}

// ---------------------------------------------------------------- presets

SweepSpec preset_spec(const std::string& name) {
  SweepSpec spec;
  if (name == "fig2") {
    spec.base = {"dual", 10.0, 0.0, 9.9, 0.0};
    spec.var = "t2";
    spec.from = 0.0;
    spec.to = 1.0;
    spec.points = 201;
    spec.overlays = {{"delta-theta", 0.0},
                     {"delta-theta", kPi / 6.0},
                     {"delta-theta", kPi / 3.0}};
  } else if (name == "fig3" || name == "fig4") {
    spec.base = {"dual", 10.0, 0.0, name == "fig3" ? 2.0 : 8.0, 0.0};
    spec.var = "delta-theta";
    spec.from = -kPi;
    spec.to = kPi;
    spec.points = 361;
    spec.overlays = {{"t2", 0.09},
                     {"t2", 0.25},
                     {"t2", 0.5},
                     {"t2", 0.64},
                     {"t2", 0.9025}};
  } else if (name == "fig5") {
    spec.base = {"dual", 10.0, 0.0, 8.0, -kPi / 90.0};  // dtheta = pi/90
    spec.var = "t2";
    spec.from = 0.0;
    spec.to = 1.0;
    spec.points = 201;
    spec.want_diff_column = true;
    // Internal phase optimized once, at |T|^2 = 0.25, then held fixed.
    ScenarioPtr s = spec.base.make();
    double phi = 0.0;
    int fringe = 0;
    check_status(qfi_phi_opt(s.get(), tau_from_t2(0.25), &phi, &fringe),
                 "phi_opt");
    spec.phi_internal = phi;
  } else if (name == "fig6") {
    spec.base = {"coh-sqz", 10.0, 0.0, 0.0, 0.0, 2.3, 0.0};
    spec.var = "t2";
    spec.from = 0.0;
    spec.to = 1.0;
    spec.points = 201;
    spec.want_kappa_column = true;
    double lim = 0.0;
    check_status(qfi_delta_theta_lim(10.0, 2.3, &lim), "delta_theta_lim");
    spec.overlays = {{"delta-theta", 0.8 * kPi},
                     {"delta-theta", lim},
                     {"delta-theta", 0.95 * kPi}};
  } else if (name == "fig7") {
    spec.base = {"sqzcoh-sqz", 10.0, 0.0, 0.0, 0.0, 2.3, 0.0, 2.3, 0.0};
    spec.var = "theta";
    spec.from = -kPi;
    spec.to = kPi;
    spec.points = 361;
    spec.overlays = {{"phi-sqz", 0.0},
                     {"phi-sqz", kPi / 2.0},
                     {"phi-sqz", kPi}};
  } else {
    die_usage("unknown preset '" + name +
              "' (expected fig2, fig3, fig4, fig5, fig6 or fig7)");
  }
  return spec;
}

// Reference curve appended to fig6: a single coherent input carrying the
// same mean photon number.
void append_fig6_reference(const SweepSpec& spec,
                           std::vector<SweepRow>* rows) {
  ScenarioPtr base = spec.base.make();
  double n_mean = 0.0;
  check_status(qfi_mean_photon_number(base.get(), &n_mean), "mean photon");
  ScenarioArgs ref{"dual", std::sqrt(n_mean), 0.0, 0.0, 0.0};
  ScenarioPtr s = ref.make();
  for (int i = 0; i < spec.points; ++i) {
    const double x =
        spec.from + (spec.to - spec.from) * i / (spec.points - 1);
    SweepRow row;
    row.overlay = "coherent-reference";
    row.x = x;
    check_status(qfi_fisher(s.get(), tau_from_t2(x), &row.fisher), "fisher");
    double qcrb = 0.0;
    if (qfi_qcrb_sensitivity(row.fisher, &qcrb) == QFI_OK) {
      row.qcrb = qcrb;
    }
    rows->push_back(std::move(row));
  }
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  int draws = 50;
  std::uint64_t seed = 1;
  int cutoff = 60;
  double alpha_max = 1.5;
  double r_max = 0.4;
  double z_max = 0.4;
  double tau_min = 0.1;
  double tau_max = kPi / 2.0 - 0.1;
};

struct DrawResult {
  std::string scenario;
  double max_err = 0.0;
};

int run_verify(const VerifyArgs& args) {
  constexpr double kSlack = 1e-9;
  if (args.alpha_max <= 0.0 || args.alpha_max > 1.5 + kSlack) {
    die_usage(
        "refusing: |alpha| envelope must lie in (0, 1.5]; the Fock oracle "
        "is not supported beyond it");
  }
  if (args.r_max < 0.0 || args.r_max > 0.4 + kSlack || args.z_max < 0.0 ||
      args.z_max > 0.4 + kSlack) {
    die_usage(
        "refusing: squeezing envelope must lie in [0, 0.4]; the Fock oracle "
        "is not supported beyond it");
  }
  if (args.tau_min < 0.1 - kSlack ||
      args.tau_max > kPi / 2.0 - 0.1 + kSlack || args.tau_min > args.tau_max) {
    die_usage("refusing: tau envelope must lie in [0.1, pi/2 - 0.1]");
  }
  if (args.draws < 0) {
    die_usage("draws must be >= 0");
  }
  if (args.cutoff < 8) {
    die_usage("cutoff must be >= 8");
  }

  const std::vector<std::string> kinds = {"dual", "coh-sqz", "sqzcoh-sqz"};
  std::vector<ScenarioArgs> cases;
  std::vector<double> taus;
  Rng rng(args.seed);
  for (const auto& kind : kinds) {
    for (int d = 0; d < args.draws; ++d) {
      ScenarioArgs a;
      a.kind = kind;
      a.alpha = args.alpha_max * rng.unit_open_top();
      a.alpha_phase = rng.angle();
      if (kind == "dual") {
        a.beta = a.alpha * rng.unit_open_top();  // varpi in (0, 1]
        a.beta_phase = rng.angle();
      } else if (kind == "coh-sqz") {
        a.r = args.r_max * rng.unit_open_top();
        a.theta = rng.angle();
      } else {
        a.z = args.z_max * rng.unit_open_top();
        a.phi_sqz = rng.angle();
        a.r = args.r_max * rng.unit_open_top();
        a.theta = rng.angle();
      }
      cases.push_back(a);
      taus.push_back(rng.range(args.tau_min, args.tau_max));
    }
  }

  std::vector<DrawResult> results(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    ScenarioPtr s = cases[i].make();
    qfi_fisher_matrix closed{};
    qfi_fisher_matrix numeric{};
    check_status(qfi_fisher_matrix_closed(s.get(), taus[i], &closed),
                 "closed-form matrix");
    check_status(
        qfi_oracle_fisher_matrix(s.get(), taus[i], args.cutoff, &numeric),
        "oracle matrix");
    // Normalized error: |d| / max(|closed|, 1e-2) <= 1e-6 is exactly
    // "relative 1e-6 with an absolute floor of 1e-8".
    auto err = [](double c, double o) {
      return std::abs(c - o) / std::max(std::abs(c), 1e-2);
    };
    results[i].scenario = cases[i].kind;
    results[i].max_err =
        std::max({err(closed.ss, numeric.ss), err(closed.sd, numeric.sd),
                  err(closed.ds, numeric.ds), err(closed.dd, numeric.dd)});
  });

  double worst = 0.0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    std::cout << "draw " << i << " scenario=" << results[i].scenario
              << " max_normalized_error=" << fmt_g(results[i].max_err)
              << "\n";
    worst = std::max(worst, results[i].max_err);
  }
  const bool pass = worst <= 1e-6;
  std::cout << "verify: " << results.size() << " draws, cutoff "
            << args.cutoff << ", worst normalized error " << fmt_g(worst)
            << " -> " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 2;
}

// ---------------------------------------------------------------- optimum

const char* regime_name(qfi_kappa_regime regime) {
  switch (regime) {
    case QFI_KAPPA_BALANCED_OPTIMAL:
      return "balanced-optimal";
    case QFI_KAPPA_TRANSMISSION_INDEPENDENT:
      return "transmission-independent";
    case QFI_KAPPA_DEGENERATE_OPTIMAL:
      return "degenerate-optimal";
  }
  return "?";
}

int run_optimum(const ScenarioArgs& base, std::optional<double> t2,
                std::optional<double> dtheta, bool kappa_root) {
  ScenarioPtr s = base.make();
  double fmax = 0.0, n_mean = 0.0;
  check_status(qfi_fisher_max(s.get(), &fmax), "fisher_max");
  check_status(qfi_mean_photon_number(s.get(), &n_mean), "mean photon");
  std::cout << "scenario = " << base.kind << "\n";
  std::cout << "fisher_max = " << fmt_g(fmax) << "\n";
  std::cout << "mean_photon_number = " << fmt_g(n_mean) << "\n";
  double qcrb = 0.0;
  if (qfi_qcrb_sensitivity(fmax, &qcrb) == QFI_OK) {
    std::cout << "delta_phi_qcrb_at_max_rad = " << fmt_g(qcrb) << "\n";
  }

  if (base.is_dual()) {
    if (t2 && dtheta) {
      die_usage(
          "at most one of --t2 / --delta-theta may constrain the "
          "dual-coherent optimum");
    }
    if (base.alpha <= 0.0) {
      die_usage("dual-coherent optimum requires --alpha > 0");
    }
    const double varpi = base.beta / base.alpha;
    std::cout << "varpi = " << fmt_g(varpi) << "\n";
    if (t2) {
      double opt = 0.0;
      const qfi_status st =
          qfi_delta_theta_opt_dual(tau_from_t2(*t2), varpi, &opt);
      if (st == QFI_ERR_NO_SOLUTION) {
        std::cout << "delta_theta_opt = no solution (no compensating "
                     "mismatch exists for this (T, varpi))\n";
        return 0;
      }
      check_status(st, "delta_theta_opt");
      std::cout << "delta_theta_opt_rad = " << fmt_g(opt) << "\n";
      ScenarioArgs tuned = base;
      tuned.set_delta_theta(opt);
      ScenarioPtr st2 = tuned.make();
      double f = 0.0;
      check_status(qfi_fisher(st2.get(), tau_from_t2(*t2), &f), "fisher");
      std::cout << "fisher_at_optimum = " << fmt_g(f) << "\n";
    } else if (dtheta) {
      double t2_opt = 0.0;
      int degenerate = 0;
      check_status(
          qfi_t_opt_squared_dual(*dtheta, varpi, &t2_opt, &degenerate),
          "t_opt_squared");
      std::cout << "t_squared_opt = " << fmt_g(t2_opt) << "\n";
      std::cout << "t_opt_degenerate = " << (degenerate ? "yes" : "no")
                << "\n";
      ScenarioArgs tuned = base;
      tuned.set_delta_theta(*dtheta);
      ScenarioPtr st2 = tuned.make();
      double f = 0.0;
      check_status(qfi_fisher(st2.get(), tau_from_t2(t2_opt), &f), "fisher");
      std::cout << "fisher_at_optimum = " << fmt_g(f) << "\n";
    } else {
      std::cout << "delta_theta_opt_rad = 0 (balanced splitter assumed)\n";
    }
    return 0;
  }

  // Squeezed scenarios: kappa regime at the configured angles.
  double kappa = 0.0;
  qfi_kappa_regime regime;
  check_status(qfi_kappa(s.get(), &kappa, &regime), "kappa");
  std::cout << "kappa = " << fmt_g(kappa) << "\n";
  std::cout << "kappa_regime = " << regime_name(regime) << "\n";

  if (base.kind == "coh-sqz") {
    if (base.alpha > 0.0 && base.r > 0.0) {
      double lim = 0.0;
      const qfi_status st = qfi_delta_theta_lim(base.alpha, base.r, &lim);
      if (st == QFI_ERR_NO_SOLUTION) {
        std::cout << "delta_theta_lim = no solution (F never becomes "
                     "T-independent for these |alpha|, r)\n";
      } else {
        check_status(st, "delta_theta_lim");
        std::cout << "delta_theta_lim_rad = " << fmt_g(lim) << "\n";
        ScenarioArgs at_lim = base;
        at_lim.set_delta_theta(lim);
        ScenarioPtr sl = at_lim.make();
        double f = 0.0;
        check_status(qfi_fisher_balanced(sl.get(), &f), "fisher");
        std::cout << "fisher_at_threshold = " << fmt_g(f) << "\n";
      }
    }
  } else if (kappa_root) {
    double root = 0.0;
    const qfi_status st = qfi_kappa_root_delta_theta(s.get(), &root);
    if (st == QFI_ERR_NO_SOLUTION) {
      std::cout << "kappa_root_delta_theta = no solution in [0, pi]\n";
    } else {
      check_status(st, "kappa_root");
      std::cout << "kappa_root_delta_theta_rad = " << fmt_g(root) << "\n";
    }
  }
  return 0;
}

// ------------------------------------------------------------------- main

void convert_angles(bool degrees, std::initializer_list<double*> values) {
  if (!degrees) return;
  for (double* v : values) {
    *v *= kPi / 180.0;
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Simple key=value config files: each key names a long option of the chosen
// subcommand; values from the file only fill options absent from the
// command line, so flags always win.
void merge_config_args(CLI::App& app, std::vector<std::string>& args) {
  if (args.empty()) return;
  CLI::App* sub = nullptr;
  for (CLI::App* candidate : app.get_subcommands(
           [](const CLI::App*) { return true; })) {
    if (candidate->get_name() == args.front()) {
      sub = candidate;
      break;
    }
  }
  if (sub == nullptr) return;

  std::string path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (path.empty()) return;

  std::ifstream file(path);
  if (!file) {
    die_usage("cannot read config file '" + path + "'");
  }
  auto user_has = [&](const std::string& flag) {
    for (std::size_t i = 1; i < args.size(); ++i) {
      if (args[i] == flag || args[i].rfind(flag + "=", 0) == 0) return true;
    }
    return false;
  };

  std::vector<std::string> extra;
  std::string line;
  int line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      die_usage("config line " + std::to_string(line_no) +
                " is not key=value: '" + text + "'");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    const std::string flag = "--" + key;
    CLI::Option* opt = sub->get_option_no_throw(flag);
    if (opt == nullptr) {
      die_usage("unknown config key '" + key + "' for subcommand '" +
                sub->get_name() + "'");
    }
    if (user_has(flag)) continue;
    if (key == "output" && user_has("-o")) continue;
    if (opt->get_expected_min() == 0) {  // flag-style option
      if (value == "1" || value == "true" || value == "yes" ||
          value == "on") {
        extra.push_back(flag);
      }
    } else {
      extra.push_back(flag);
      extra.push_back(value);
    }
  }
  args.insert(args.end(), extra.begin(), extra.end());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Quantum Fisher information and phase sensitivity of an unbalanced "
      "Mach-Zehnder interferometer with Gaussian inputs"};
  app.require_subcommand(1);

  // --- sweep ---
  auto* sweep_cmd = app.add_subcommand(
      "sweep",
      "Evaluate F, the QCRB sensitivity and optional detection / kappa "
      "columns over a parameter grid; emits CSV");
  SweepSpec spec;
  bool sweep_degrees = false;
  std::string sweep_output;
  std::vector<std::string> overlay_strings;
  double sweep_phi_internal = 0.0;
  add_scenario_flags(sweep_cmd, &spec.base);
  sweep_cmd
      ->add_option("--var", spec.var,
                   "Sweep variable: t2, delta-theta, theta, phi-internal")
      ->required();
  sweep_cmd->add_option("--from", spec.from, "Range start")->required();
  sweep_cmd->add_option("--to", spec.to, "Range end")->required();
  sweep_cmd->add_option("--points", spec.points, "Number of grid points")
      ->required();
  sweep_cmd->add_option("--overlay", overlay_strings,
                        "Fixed-parameter variant key=value; repeatable");
  sweep_cmd->add_option("--t2", spec.t2,
                        "Splitter transmission |T|^2 when not swept");
  auto* phi_flag = sweep_cmd->add_option(
      "--phi-internal", sweep_phi_internal,
      "Detection internal phase [rad]; adds the delta_phi_diff column");
  sweep_cmd->add_flag("--kappa", spec.want_kappa_column,
                      "Add the kappa column (squeezed scenarios)");
  sweep_cmd->add_option("--output,-o", sweep_output,
                        "Output CSV path ('-' or empty for stdout)");
  sweep_cmd->add_flag("--degrees", sweep_degrees,
                      "Interpret input angles as degrees");
  std::string sweep_config;
  sweep_cmd->add_option("--config", sweep_config,
                        "Read options from a key=value file; flags win");

  // --- preset ---
  auto* preset_cmd = app.add_subcommand(
      "preset", "Emit the CSV for a canned figure configuration");
  std::string preset_name;
  std::string preset_output;
  preset_cmd
      ->add_option("name", preset_name,
                   "One of fig2, fig3, fig4, fig5, fig6, fig7")
      ->required();
  preset_cmd->add_option("--output,-o", preset_output,
                         "Output CSV path ('-' or empty for stdout)");

  // --- verify ---
  auto* verify_cmd = app.add_subcommand(
      "verify",
      "Compare closed-form Fisher matrices against the truncated-Fock "
      "oracle on seeded random draws");
  VerifyArgs verify_args;
  verify_cmd->add_option("--draws", verify_args.draws,
                         "Random draws per scenario");
  verify_cmd->add_option("--seed", verify_args.seed, "RNG seed");
  verify_cmd->add_option("--cutoff", verify_args.cutoff, "Fock cutoff");
  verify_cmd->add_option("--alpha-max", verify_args.alpha_max,
                         "Envelope: maximum |alpha| (supported up to 1.5)");
  verify_cmd->add_option("--r-max", verify_args.r_max,
                         "Envelope: maximum r (supported up to 0.4)");
  verify_cmd->add_option("--z-max", verify_args.z_max,
                         "Envelope: maximum z (supported up to 0.4)");
  verify_cmd->add_option("--tau-min", verify_args.tau_min,
                         "Envelope: minimum tau [rad]");
  verify_cmd->add_option("--tau-max", verify_args.tau_max,
                         "Envelope: maximum tau [rad]");
  std::string verify_config;
  verify_cmd->add_option("--config", verify_config,
                         "Read options from a key=value file; flags win");

  // --- optimum ---
  auto* optimum_cmd = app.add_subcommand(
      "optimum", "Report the derived optima and regime classification");
  ScenarioArgs optimum_base;
  bool optimum_degrees = false;
  bool optimum_kappa_root = false;
  double optimum_t2 = 0.0, optimum_dtheta = 0.0;
  add_scenario_flags(optimum_cmd, &optimum_base);
  auto* t2_flag = optimum_cmd->add_option(
      "--t2", optimum_t2, "Fixed |T|^2; reports the compensating mismatch");
  auto* dtheta_flag = optimum_cmd->add_option(
      "--delta-theta", optimum_dtheta,
      "Fixed mismatch [rad]; reports the compensating |T|^2");
  optimum_cmd->add_flag("--kappa-root", optimum_kappa_root,
                        "Also locate the kappa = 0 mismatch (sqzcoh-sqz)");
  optimum_cmd->add_flag("--degrees", optimum_degrees,
                        "Interpret input angles as degrees");
  std::string optimum_config;
  optimum_cmd->add_option("--config", optimum_config,
                          "Read options from a key=value file; flags win");

  std::vector<std::string> args(argv + 1, argv + argc);
  merge_config_args(app, args);
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (sweep_cmd->parsed()) {
    convert_angles(sweep_degrees,
                   {&spec.base.alpha_phase, &spec.base.beta_phase,
                    &spec.base.theta, &spec.base.phi_sqz,
                    &sweep_phi_internal});
    if (sweep_degrees && spec.var != "t2") {
      spec.from *= kPi / 180.0;
      spec.to *= kPi / 180.0;
    }
    if (*phi_flag) {
      spec.phi_internal = sweep_phi_internal;
      spec.want_diff_column = spec.base.is_dual();
    }
    if (spec.var == "phi-internal") {
      spec.want_diff_column = true;
    }
    for (const auto& text : overlay_strings) {
      const auto eq = text.find('=');
      if (eq == std::string::npos) {
        die_usage("overlay must have the form key=value, got '" + text +
                  "'");
      }
      const std::string key = text.substr(0, eq);
      const std::string value_text = text.substr(eq + 1);
      char* end = nullptr;
      double value = std::strtod(value_text.c_str(), &end);
      if (end == value_text.c_str() || *end != '\0') {
        die_usage("overlay value in '" + text + "' is not a number");
      }
      if (sweep_degrees &&
          (key == "delta-theta" || key == "theta" || key == "phi-sqz" ||
           key == "phi-internal")) {
        value *= kPi / 180.0;
      }
      spec.overlays.emplace_back(key, value);
    }
    auto rows = run_sweep(spec);
    emit_csv(spec, rows, sweep_output);
    return 0;
  }

  if (preset_cmd->parsed()) {
    SweepSpec preset = preset_spec(preset_name);
    auto rows = run_sweep(preset);
    if (preset_name == "fig6") {
      append_fig6_reference(preset, &rows);
    }
    emit_csv(preset, rows, preset_output);
    return 0;
  }

  if (verify_cmd->parsed()) {
    return run_verify(verify_args);
  }

  if (optimum_cmd->parsed()) {
    convert_angles(optimum_degrees,
                   {&optimum_base.alpha_phase, &optimum_base.beta_phase,
                    &optimum_base.theta, &optimum_base.phi_sqz,
                    &optimum_dtheta});
    std::optional<double> t2;
    std::optional<double> dtheta;
    if (*t2_flag) t2 = optimum_t2;
    if (*dtheta_flag) dtheta = optimum_dtheta;
    return run_optimum(optimum_base, t2, dtheta, optimum_kappa_root);
  }

  return 0;
}
