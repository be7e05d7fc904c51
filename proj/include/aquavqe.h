// Copyright 2026 The aquavqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to the aquavqe library.
 *
 * Objects are opaque handles created by aqv_*_create/load/run calls and
 * released with the matching aqv_*_free. Every fallible call returns an
 * aqv_status; on failure aqv_last_error() holds a one-line message for the
 * calling thread. Strings returned through char** are owned by the caller and
 * released with aqv_free_string. */
#ifndef AQUAVQE_H_
#define AQUAVQE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(AQV_BUILDING_LIBRARY)
#define AQV_API __declspec(dllexport)
#else
#define AQV_API __declspec(dllimport)
#endif
#else
#define AQV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum aqv_status {
  AQV_OK = 0,
  AQV_ERR_PARSE = 1,
  AQV_ERR_INDEX = 2,
  AQV_ERR_CONSISTENCY = 3,
  AQV_ERR_DOMAIN = 4,
  AQV_ERR_IO = 5,
  AQV_ERR_VALIDATION = 6,
  AQV_ERR_RESOURCE = 7,
  AQV_ERR_SECTOR = 8,
  AQV_ERR_FIT = 9,
  AQV_ERR_CALIBRATION = 10,
  AQV_ERR_OPTIMIZER = 11,
  AQV_ERR_INVALID_ARGUMENT = 12,
  AQV_ERR_INTERNAL = 13
} aqv_status;

typedef enum aqv_spin_ordering {
  AQV_ORDERING_BLOCKED = 0,
  AQV_ORDERING_INTERLEAVED = 1
} aqv_spin_ordering;

/* Snake-case identifier such as "parse_error" or "ok". */
AQV_API const char* aqv_status_name(aqv_status status);
AQV_API const char* aqv_last_error(void);
AQV_API const char* aqv_version(void);
AQV_API void aqv_free_string(char* s);
AQV_API void aqv_free_doubles(double* values);

/* Fermionic Hamiltonian in a spatial-orbital basis. */
typedef struct aqv_fermion_op aqv_fermion_op;

AQV_API aqv_status aqv_fermion_op_load(const char* fcidump_path,
                                       aqv_fermion_op** out);
AQV_API aqv_status aqv_fermion_op_parse(const char* fcidump_text,
                                        aqv_fermion_op** out);
AQV_API aqv_status aqv_fermion_op_info(const aqv_fermion_op* op,
                                       size_t* n_spatial, size_t* n_alpha,
                                       size_t* n_beta, double* e_core);
/* Freezes the listed doubly occupied orbitals into the core energy and drops
 * the listed empty ones. Indices are 0-based. */
AQV_API aqv_status aqv_fermion_op_reduce(const aqv_fermion_op* op,
                                         const size_t* frozen, size_t n_frozen,
                                         const size_t* removed,
                                         size_t n_removed,
                                         aqv_fermion_op** out);
AQV_API aqv_status aqv_fermion_op_to_fcidump(const aqv_fermion_op* op,
                                             char** out);
AQV_API void aqv_fermion_op_free(aqv_fermion_op* op);

/* Default water active space, written into caller buffers of at least 8
 * entries each. */
AQV_API void aqv_default_active_space(size_t* frozen, size_t* n_frozen,
                                      size_t* removed, size_t* n_removed);

/* Weighted sum of Pauli strings. */
typedef struct aqv_qubit_op aqv_qubit_op;

AQV_API aqv_status aqv_jordan_wigner(const aqv_fermion_op* op,
                                     aqv_spin_ordering ordering,
                                     aqv_qubit_op** out);
/* axes[i] is a string over IXYZ whose first character acts on qubit 0. */
AQV_API aqv_status aqv_qubit_op_from_terms(size_t n_qubits,
                                           const char* const* axes,
                                           const double* coefficients,
                                           size_t n_terms, aqv_qubit_op** out);
AQV_API aqv_status aqv_qubit_op_info(const aqv_qubit_op* op, size_t* n_qubits,
                                     size_t* n_terms);
AQV_API aqv_status aqv_qubit_op_to_text(const aqv_qubit_op* op, char** out);
AQV_API void aqv_qubit_op_free(aqv_qubit_op* op);

/* Lowest eigenvalue by dense diagonalization. A negative sector searches the
 * whole Fock space, otherwise only states with that many particles. */
AQV_API aqv_status aqv_ground_state(const aqv_qubit_op* op, int64_t sector,
                                    double* energy);

/* Hardware-efficient circuit acting on a closed-shell Hartree-Fock state. */
typedef struct aqv_ansatz aqv_ansatz;

AQV_API aqv_status aqv_ansatz_create(size_t n_qubits, size_t layers,
                                     size_t n_alpha, size_t n_beta,
                                     aqv_spin_ordering ordering,
                                     aqv_ansatz** out);
AQV_API size_t aqv_ansatz_n_params(const aqv_ansatz* ansatz);
AQV_API size_t aqv_ansatz_n_qubits(const aqv_ansatz* ansatz);
AQV_API aqv_status aqv_ansatz_to_text(const aqv_ansatz* ansatz, char** out);
AQV_API aqv_status aqv_ansatz_energy(const aqv_qubit_op* op,
                                     const aqv_ansatz* ansatz,
                                     const double* params, size_t n_params,
                                     double* energy);
/* Writes the 2^n amplitudes as interleaved (re, im) pairs. */
AQV_API aqv_status aqv_ansatz_state(const aqv_ansatz* ansatz,
                                    const double* params, size_t n_params,
                                    double* amplitudes, size_t capacity);
AQV_API void aqv_ansatz_free(aqv_ansatz* ansatz);

/* SPSA settings. A NaN in `a` or `A` requests the default rule (calibration
 * and 0.1 * max_iter respectively). */
typedef struct aqv_spsa_config {
  size_t max_iter;
  double a;
  double c;
  double A;
  double alpha;
  double gamma;
  uint64_t seed;
  double target_step;
  size_t calibration_probes;
} aqv_spsa_config;

AQV_API void aqv_spsa_config_init(aqv_spsa_config* config);

/* Uniform angles in [-pi, pi). */
AQV_API aqv_status aqv_random_angles(size_t n, uint64_t seed, double* out);

typedef struct aqv_vqe_run aqv_vqe_run;

/* x0 may be NULL for uniformly random starting angles drawn from the seed.
 * shots > 0 computes the probability diagnostics from sampled counts. */
AQV_API aqv_status aqv_vqe_run_create(const aqv_qubit_op* op,
                                      const aqv_ansatz* ansatz,
                                      const double* x0, size_t n_params,
                                      const aqv_spsa_config* config,
                                      uint64_t shots, aqv_vqe_run** out);
AQV_API double aqv_vqe_run_energy(const aqv_vqe_run* run);
AQV_API size_t aqv_vqe_run_params(const aqv_vqe_run* run, double* out,
                                  size_t capacity);
AQV_API aqv_status aqv_vqe_run_to_json(const aqv_vqe_run* run,
                                       double reference, char** out);
AQV_API aqv_status aqv_vqe_run_trace_csv(const aqv_vqe_run* run, char** out);
AQV_API void aqv_vqe_run_free(aqv_vqe_run* run);

typedef struct aqv_warm_start aqv_warm_start;

AQV_API aqv_status aqv_warm_start_create(const aqv_qubit_op* op,
                                         const aqv_ansatz* ansatz,
                                         const aqv_spsa_config* config,
                                         size_t n_restarts, double reference,
                                         uint64_t shots, size_t jobs,
                                         aqv_warm_start** out);
AQV_API size_t aqv_warm_start_n_runs(const aqv_warm_start* ws);
AQV_API size_t aqv_warm_start_best_index(const aqv_warm_start* ws);
AQV_API double aqv_warm_start_energy(const aqv_warm_start* ws, size_t run);
AQV_API double aqv_warm_start_delta(const aqv_warm_start* ws, size_t run);
AQV_API size_t aqv_warm_start_best_params(const aqv_warm_start* ws,
                                          double* out, size_t capacity);
AQV_API aqv_status aqv_warm_start_to_json(const aqv_warm_start* ws,
                                          char** out);
AQV_API aqv_status aqv_warm_start_to_csv(const aqv_warm_start* ws, char** out);
AQV_API void aqv_warm_start_free(aqv_warm_start* ws);

/* Reads best_params (or params) from a JSON result file into a malloc'd
 * array released with aqv_free_doubles. */
AQV_API aqv_status aqv_read_params(const char* json_path, double** out,
                                   size_t* n);

typedef struct aqv_scan_options {
  size_t layers;
  aqv_spsa_config spsa;
  int64_t sector; /* negative: unfiltered */
  int keep_going;
  size_t jobs;
  uint64_t shots;
  /* When use_active_space is zero the manifest default is used. */
  int use_active_space;
  const size_t* frozen;
  size_t n_frozen;
  const size_t* removed;
  size_t n_removed;
} aqv_scan_options;

typedef struct aqv_pes_record {
  double bond_angle;
  double bond_length;
  double vqe_energy;
  double exact_energy;
  double delta;
  double top_probability;
  double gap;
} aqv_pes_record;

typedef struct aqv_scan aqv_scan;

AQV_API void aqv_scan_options_init(aqv_scan_options* options);
AQV_API aqv_status aqv_scan_create(const char* manifest_path,
                                   const double* warm_params, size_t n_params,
                                   const aqv_scan_options* options,
                                   aqv_scan** out);
AQV_API size_t aqv_scan_n_records(const aqv_scan* scan);
AQV_API aqv_status aqv_scan_record(const aqv_scan* scan, size_t i,
                                   aqv_pes_record* out);
AQV_API size_t aqv_scan_n_failures(const aqv_scan* scan);
AQV_API const char* aqv_scan_failure(const aqv_scan* scan, size_t i);
AQV_API aqv_status aqv_scan_to_csv(const aqv_scan* scan, char** out);
AQV_API aqv_status aqv_scan_to_json(const aqv_scan* scan, char** out);
AQV_API void aqv_scan_free(aqv_scan* scan);

typedef struct aqv_surface_minimum {
  double angle_star;
  double length_star;
  double energy_star;
  int angle_at_boundary;
  int length_at_boundary;
} aqv_surface_minimum;

typedef struct aqv_fit aqv_fit;

AQV_API aqv_status aqv_fit_create(const double* angles, const double* lengths,
                                  const double* energies, size_t n,
                                  aqv_fit** out);
/* Fits the named energy column of a PES CSV. */
AQV_API aqv_status aqv_fit_from_csv(const char* csv_path,
                                    const char* energy_column, aqv_fit** out);
/* intercept, then angle terms for powers 2, 3, 4, 4.5, then length terms. */
AQV_API void aqv_fit_coefficients(const aqv_fit* fit, double out[9]);
AQV_API double aqv_fit_residual_rms(const aqv_fit* fit);
AQV_API double aqv_fit_evaluate(const aqv_fit* fit, double angle,
                                double length);
/* Minimizes over the fitted data's bounding box. */
AQV_API aqv_status aqv_fit_minimize(const aqv_fit* fit,
                                    aqv_surface_minimum* out);
AQV_API aqv_status aqv_fit_minimize_in(const aqv_fit* fit, double angle_lo,
                                       double angle_hi, double length_lo,
                                       double length_hi,
                                       aqv_surface_minimum* out);
AQV_API aqv_status aqv_fit_to_json(const aqv_fit* fit,
                                   const aqv_surface_minimum* minimum,
                                   char** out);
AQV_API void aqv_fit_free(aqv_fit* fit);

#ifdef __cplusplus
}
#endif

#endif  /* AQUAVQE_H_ */
