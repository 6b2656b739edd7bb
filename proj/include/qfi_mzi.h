/* Copyright 2026 The qfi-mzi developers.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License. */

/*
 * C API of libqfi_mzi: quantum Fisher information and phase sensitivity of
 * an unbalanced Mach-Zehnder interferometer with Gaussian inputs.
 *
 * Conventions:
 *   - The input beam splitter is parameterized by the mixing angle tau in
 *     [0, pi/2]; T = cos(tau) real, R = i sin(tau), so |T|^2 = cos^2(tau).
 *   - All angles are radians; amplitudes and squeezing factors are
 *     dimensionless.
 *   - Every function returns a qfi_status; outputs are written through
 *     pointers and are untouched on failure.
 *   - Input scenarios are opaque handles created by the qfi_scenario_*
 *     constructors and released with qfi_scenario_free.
 *   - All functions are thread-safe; scenario handles are immutable after
 *     creation and may be shared across threads.
 */

#ifndef QFI_MZI_H
#define QFI_MZI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qfi_status {
  QFI_OK = 0,
  QFI_ERR_INVALID_ARGUMENT = 1,
  QFI_ERR_NO_INFORMATION = 2,    /* zero-information input (e.g. vacuum)  */
  QFI_ERR_SINGULAR_SUM_BLOCK = 3,/* Fisher matrix ss element is zero      */
  QFI_ERR_NO_SOLUTION = 4,       /* requested optimum does not exist      */
  QFI_ERR_CUTOFF_TOO_SMALL = 5,  /* Fock tail mass above tolerance        */
  QFI_ERR_UNSUPPORTED = 6,       /* operation undefined for this scenario */
  QFI_ERR_INSENSITIVE_POINT = 7, /* detection slope vanishes at phi       */
  QFI_ERR_INTERNAL = 8
} qfi_status;

/* Static description of a status code. */
const char* qfi_status_message(qfi_status status);

const char* qfi_mzi_version(void);

/* ---- input scenarios (opaque) ---- */

typedef struct qfi_scenario qfi_scenario;

/* Coherent |beta> on port 0 and coherent |alpha> on port 1. */
qfi_status qfi_scenario_dual_coherent(double alpha_mag, double alpha_phase,
                                      double beta_mag, double beta_phase,
                                      qfi_scenario** out);

/* Squeezed vacuum S(r e^{i theta})|0> on port 0, coherent on port 1. */
qfi_status qfi_scenario_coherent_squeezed(double alpha_mag,
                                          double alpha_phase, double r,
                                          double theta, qfi_scenario** out);

/* S(r e^{i theta})|0> on port 0 and D(alpha) S(z e^{i phi})|0> on port 1. */
qfi_status qfi_scenario_squeezed_coherent_squeezed(
    double alpha_mag, double alpha_phase, double z, double phi, double r,
    double theta, qfi_scenario** out);

void qfi_scenario_free(qfi_scenario* scenario);

/* ---- Fisher information ---- */

typedef struct qfi_fisher_matrix {
  double ss;
  double sd;
  double ds;
  double dd;
} qfi_fisher_matrix;

typedef enum qfi_kappa_regime {
  QFI_KAPPA_BALANCED_OPTIMAL = 0,
  QFI_KAPPA_TRANSMISSION_INDEPENDENT = 1,
  QFI_KAPPA_DEGENERATE_OPTIMAL = 2
} qfi_kappa_regime;

/* 2x2 Fisher matrix over the sum/difference phases. */
qfi_status qfi_fisher_matrix_closed(const qfi_scenario* scenario, double tau,
                             qfi_fisher_matrix* out);

/* Reduced difference-phase Fisher information F = dd - sd*ds/ss. */
qfi_status qfi_fisher(const qfi_scenario* scenario, double tau, double* out);

/* F at the balanced splitter (tau = pi/4), closed form. */
qfi_status qfi_fisher_balanced(const qfi_scenario* scenario, double* out);

/* Maximum attainable F for the scenario's magnitudes. */
qfi_status qfi_fisher_max(const qfi_scenario* scenario, double* out);

qfi_status qfi_mean_photon_number(const qfi_scenario* scenario, double* out);

qfi_status qfi_reduce_fisher(const qfi_fisher_matrix* matrix, double* out);

/* Cramer-Rao sensitivity 1/sqrt(F); F must be positive. */
qfi_status qfi_qcrb_sensitivity(double fisher, double* out);

/* kappa (coefficient of 4|TR|^2 in F) and its sign regime; squeezed
   scenarios only (QFI_ERR_UNSUPPORTED for dual coherent). */
qfi_status qfi_kappa(const qfi_scenario* scenario, double* kappa,
                     qfi_kappa_regime* regime);

/* ---- derived optima (dual-coherent scenario) ---- */

/* Mismatch restoring the maximum at a fixed transmission; principal value.
   QFI_ERR_NO_SOLUTION when no compensating mismatch exists. */
qfi_status qfi_delta_theta_opt_dual(double tau, double varpi, double* out);

/* Transmission restoring the maximum at a fixed mismatch.  *degenerate is
   set to 1 when every T attains the maximum (varpi = 1, sin dtheta = 0). */
qfi_status qfi_t_opt_squared_dual(double delta_theta, double varpi,
                                  double* t_squared, int* degenerate);

/* Threshold mismatch in [0, pi] where F becomes T-independent
   (coherent x squeezed-vacuum scenario). */
qfi_status qfi_delta_theta_lim(double alpha_mag, double r, double* out);

/* First dtheta in [0, pi] with kappa = 0 for the squeezed-coherent
   scenario, all other parameters fixed (numeric root). */
qfi_status qfi_kappa_root_delta_theta(const qfi_scenario* scenario,
                                      double* out);

/* ---- difference-intensity detection (dual coherent) ---- */

qfi_status qfi_nd_mean_derivative(const qfi_scenario* scenario, double tau,
                                  double phi, double* out);

qfi_status qfi_nd_variance(const qfi_scenario* scenario, double* out);

qfi_status qfi_delta_phi_diff(const qfi_scenario* scenario, double tau,
                              double phi, double* out);

/* Optimal internal phase; *on_sin_fringe is set to 1 when
   varpi cos(dtheta) = 0 and phi = pi/2 is returned. */
qfi_status qfi_phi_opt(const qfi_scenario* scenario, double tau, double* out,
                       int* on_sin_fringe);

/* ---- truncated-Fock brute-force oracle ---- */

/* Fisher matrix from the Fock-space simulation; cutoff <= 0 selects a
   default suited to the small-amplitude envelope. */
qfi_status qfi_oracle_fisher_matrix(const qfi_scenario* scenario, double tau,
                                    int cutoff, qfi_fisher_matrix* out);

/* Mean and variance of the difference photo-current at internal phase phi. */
qfi_status qfi_oracle_nd_moments(const qfi_scenario* scenario, double tau,
                                 double phi, int cutoff, double* mean,
                                 double* variance);

#ifdef __cplusplus
}
#endif

#endif /* QFI_MZI_H */
