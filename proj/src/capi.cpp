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


#include "aquavqe.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aquavqe/ansatz.hpp"
#include "aquavqe/error.hpp"
#include "aquavqe/exact.hpp"
#include "aquavqe/fermion.hpp"
#include "aquavqe/geometry.hpp"
#include "aquavqe/pauli.hpp"
#include "aquavqe/pes.hpp"
#include "aquavqe/report.hpp"
#include "aquavqe/spsa.hpp"
#include "aquavqe/vqe.hpp"

struct aqv_fermion_op {
  aqv::FermionicHamiltonian value;
};
struct aqv_qubit_op {
  aqv::PauliOperatorSum value;
};
struct aqv_ansatz {
  aqv::AnsatzCircuit value;
};
struct aqv_vqe_run {
  aqv::VQERun value;
};
struct aqv_warm_start {
  aqv::WarmStartResult value;
};
struct aqv_scan {
  aqv::ScanResult value;
  aqv::ScanOptions options;
  std::vector<std::string> failure_text;
};
struct aqv_fit {
  aqv::SurfaceFit value;
};

namespace {

thread_local std::string last_error;

aqv_status status_of(aqv::ErrorKind kind) {
  using K = aqv::ErrorKind;
  switch (kind) {
    case K::kParse: return AQV_ERR_PARSE;
    case K::kIndex: return AQV_ERR_INDEX;
    case K::kConsistency: return AQV_ERR_CONSISTENCY;
    case K::kDomain: return AQV_ERR_DOMAIN;
    case K::kIo: return AQV_ERR_IO;
    case K::kValidation: return AQV_ERR_VALIDATION;
    case K::kResource: return AQV_ERR_RESOURCE;
    case K::kSector: return AQV_ERR_SECTOR;
    case K::kFit: return AQV_ERR_FIT;
    case K::kCalibration: return AQV_ERR_CALIBRATION;
    case K::kOptimizer: return AQV_ERR_OPTIMIZER;
  }
  return AQV_ERR_INTERNAL;
}

aqv_status set_error(aqv_status status, std::string message) {
  for (auto& ch : message)
    if (ch == '\n' || ch == '\r') ch = ' ';
  last_error = std::move(message);
  return status;
}

template <class F>
aqv_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return AQV_OK;
  } catch (const aqv::Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(AQV_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return set_error(AQV_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(AQV_ERR_INTERNAL, "unknown exception");
  }
}

template <class T>
void require(T* p, const char* name) {
  if (p == nullptr) throw aqv::Error(aqv::ErrorKind::kDomain,
                                     std::string(name) + " is null");
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

aqv::SpinOrdering ordering_of(aqv_spin_ordering o) {
  switch (o) {
    case AQV_ORDERING_BLOCKED: return aqv::SpinOrdering::kBlocked;
    case AQV_ORDERING_INTERLEAVED: return aqv::SpinOrdering::kInterleaved;
  }
  aqv::fail(aqv::ErrorKind::kDomain, "unknown spin ordering");
}

std::optional<std::size_t> sector_of(int64_t sector) {
  if (sector < 0) return std::nullopt;
  return static_cast<std::size_t>(sector);
}

aqv::SPSAConfig config_of(const aqv_spsa_config* c) {
  aqv::SPSAConfig out;
  if (c == nullptr) return out;
  out.max_iter = c->max_iter;
  if (!std::isnan(c->a)) out.a = c->a;
  out.c = c->c;
  if (!std::isnan(c->A)) out.A = c->A;
  out.alpha = c->alpha;
  out.gamma = c->gamma;
  out.seed = c->seed;
  out.target_step = c->target_step;
  out.calibration_probes = c->calibration_probes;
  return out;
}

std::vector<std::size_t> indices(const size_t* p, size_t n) {
  if (n > 0) require(p, "index list");
  return {p, p + n};
}

size_t copy_out(const std::vector<double>& v, double* out, size_t capacity) {
  if (out != nullptr)
    for (size_t i = 0; i < v.size() && i < capacity; ++i) out[i] = v[i];
  return v.size();
}

aqv_surface_minimum minimum_of(const aqv::SurfaceMinimum& m) {
  return {m.angle_star, m.length_star, m.energy_star, m.angle_at_boundary ? 1 : 0,
          m.length_at_boundary ? 1 : 0};
}

}  // namespace

extern "C" {

const char* aqv_status_name(aqv_status status) {
  switch (status) {
    case AQV_OK: return "ok";
    case AQV_ERR_PARSE: return "parse_error";
    case AQV_ERR_INDEX: return "index_error";
    case AQV_ERR_CONSISTENCY: return "consistency_error";
    case AQV_ERR_DOMAIN: return "domain_error";
    case AQV_ERR_IO: return "io_error";
    case AQV_ERR_VALIDATION: return "validation_error";
    case AQV_ERR_RESOURCE: return "resource_error";
    case AQV_ERR_SECTOR: return "sector_error";
    case AQV_ERR_FIT: return "fit_error";
    case AQV_ERR_CALIBRATION: return "calibration_error";
    case AQV_ERR_OPTIMIZER: return "optimizer_error";
    case AQV_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case AQV_ERR_INTERNAL: return "internal_error";
  }
  return "unknown_status";
}

const char* aqv_last_error(void) { return last_error.c_str(); }

const char* aqv_version(void) { return AQV_VERSION; }

void aqv_free_string(char* s) { std::free(s); }

void aqv_free_doubles(double* values) { std::free(values); }

aqv_status aqv_fermion_op_load(const char* fcidump_path, aqv_fermion_op** out) {
  return guarded([&] {
    require(fcidump_path, "path");
    require(out, "out");
    *out = new aqv_fermion_op{aqv::load_fcidump(fcidump_path)};
  });
}

aqv_status aqv_fermion_op_parse(const char* fcidump_text, aqv_fermion_op** out) {
  return guarded([&] {
    require(fcidump_text, "text");
    require(out, "out");
    *out = new aqv_fermion_op{aqv::parse_fcidump(fcidump_text)};
  });
}

aqv_status aqv_fermion_op_info(const aqv_fermion_op* op, size_t* n_spatial,
                               size_t* n_alpha, size_t* n_beta, double* e_core) {
  return guarded([&] {
    require(op, "operator");
    if (n_spatial) *n_spatial = op->value.n_spatial();
    if (n_alpha) *n_alpha = op->value.n_alpha();
    if (n_beta) *n_beta = op->value.n_beta();
    if (e_core) *e_core = op->value.e_core();
  });
}

aqv_status aqv_fermion_op_reduce(const aqv_fermion_op* op, const size_t* frozen,
                                 size_t n_frozen, const size_t* removed,
                                 size_t n_removed, aqv_fermion_op** out) {
  return guarded([&] {
    require(op, "operator");
    require(out, "out");
    aqv::ActiveSpaceSpec spec{indices(frozen, n_frozen),
                              indices(removed, n_removed)};
    *out = new aqv_fermion_op{aqv::reduce_active_space(op->value, spec)};
  });
}

aqv_status aqv_fermion_op_to_fcidump(const aqv_fermion_op* op, char** out) {
  return guarded([&] {
    require(op, "operator");
    require(out, "out");
    *out = dup_string(aqv::to_fcidump(op->value));
  });
}

void aqv_fermion_op_free(aqv_fermion_op* op) { delete op; }

void aqv_default_active_space(size_t* frozen, size_t* n_frozen, size_t* removed,
                              size_t* n_removed) {
  const auto spec = aqv::default_water_active_space();
  if (n_frozen) *n_frozen = spec.frozen.size();
  if (n_removed) *n_removed = spec.removed.size();
  for (size_t i = 0; frozen && i < spec.frozen.size(); ++i)
    frozen[i] = spec.frozen[i];
  for (size_t i = 0; removed && i < spec.removed.size(); ++i)
    removed[i] = spec.removed[i];
}

aqv_status aqv_jordan_wigner(const aqv_fermion_op* op, aqv_spin_ordering ordering,
                             aqv_qubit_op** out) {
  return guarded([&] {
    require(op, "operator");
    require(out, "out");
    *out = new aqv_qubit_op{aqv::jordan_wigner(op->value, ordering_of(ordering))};
  });
}

aqv_status aqv_qubit_op_from_terms(size_t n_qubits, const char* const* axes,
                                   const double* coefficients, size_t n_terms,
                                   aqv_qubit_op** out) {
  return guarded([&] {
    require(out, "out");
    if (n_terms > 0) {
      require(axes, "axes");
      require(coefficients, "coefficients");
    }
    aqv::PauliOperatorSum sum(n_qubits);
    for (size_t i = 0; i < n_terms; ++i) {
      require(axes[i], "axes entry");
      auto term = aqv::PauliTerm::from_string(axes[i], coefficients[i]);
      if (term.n_qubits() != n_qubits)
        aqv::fail(aqv::ErrorKind::kDomain,
                  "term " + std::string(axes[i]) + " does not act on " +
                      std::to_string(n_qubits) + " qubits");
      sum.add(term);
    }
    *out = new aqv_qubit_op{std::move(sum)};
  });
}

aqv_status aqv_qubit_op_info(const aqv_qubit_op* op, size_t* n_qubits,
                             size_t* n_terms) {
  return guarded([&] {
    require(op, "operator");
    if (n_qubits) *n_qubits = op->value.n_qubits();
    if (n_terms) *n_terms = op->value.size();
  });
}

aqv_status aqv_qubit_op_to_text(const aqv_qubit_op* op, char** out) {
  return guarded([&] {
    require(op, "operator");
    require(out, "out");
    *out = dup_string(aqv::to_text(op->value));
  });
}

void aqv_qubit_op_free(aqv_qubit_op* op) { delete op; }

aqv_status aqv_ground_state(const aqv_qubit_op* op, int64_t sector,
                            double* energy) {
  return guarded([&] {
    require(op, "operator");
    require(energy, "energy");
    *energy = aqv::ground_state(op->value, sector_of(sector)).ground_energy;
  });
}

aqv_status aqv_ansatz_create(size_t n_qubits, size_t layers, size_t n_alpha,
                             size_t n_beta, aqv_spin_ordering ordering,
                             aqv_ansatz** out) {
  return guarded([&] {
    require(out, "out");
    const auto hf = aqv::HFReference::closed_shell(n_qubits, n_alpha, n_beta,
                                                   ordering_of(ordering));
    *out = new aqv_ansatz{aqv::AnsatzCircuit(n_qubits, layers, hf)};
  });
}

size_t aqv_ansatz_n_params(const aqv_ansatz* ansatz) {
  return ansatz ? ansatz->value.n_params() : 0;
}

size_t aqv_ansatz_n_qubits(const aqv_ansatz* ansatz) {
  return ansatz ? ansatz->value.n_qubits() : 0;
}

aqv_status aqv_ansatz_to_text(const aqv_ansatz* ansatz, char** out) {
  return guarded([&] {
    require(ansatz, "ansatz");
    require(out, "out");
    *out = dup_string(aqv::to_text(ansatz->value));
  });
}

aqv_status aqv_ansatz_energy(const aqv_qubit_op* op, const aqv_ansatz* ansatz,
                             const double* params, size_t n_params,
                             double* energy) {
  return guarded([&] {
    require(op, "operator");
    require(ansatz, "ansatz");
    require(energy, "energy");
    if (n_params > 0) require(params, "params");
    *energy = aqv::ansatz_energy(ansatz->value, op->value,
                                 std::span<const double>(params, n_params));
  });
}

aqv_status aqv_ansatz_state(const aqv_ansatz* ansatz, const double* params,
                            size_t n_params, double* amplitudes,
                            size_t capacity) {
  return guarded([&] {
    require(ansatz, "ansatz");
    require(amplitudes, "amplitudes");
    if (n_params > 0) require(params, "params");
    const auto state = aqv::prepare_state(
        ansatz->value, std::span<const double>(params, n_params));
    const auto amps = state.amplitudes();
    if (capacity < 2 * amps.size())
      aqv::fail(aqv::ErrorKind::kDomain,
                "amplitude buffer holds " + std::to_string(capacity) +
                    " values, need " + std::to_string(2 * amps.size()));
    for (size_t i = 0; i < amps.size(); ++i) {
      amplitudes[2 * i] = amps[i].real();
      amplitudes[2 * i + 1] = amps[i].imag();
    }
  });
}

void aqv_ansatz_free(aqv_ansatz* ansatz) { delete ansatz; }

void aqv_spsa_config_init(aqv_spsa_config* config) {
  if (config == nullptr) return;
  const aqv::SPSAConfig d;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  *config = {d.max_iter, nan,  d.c, nan, d.alpha, d.gamma, d.seed, d.target_step,
             d.calibration_probes};
}

aqv_status aqv_random_angles(size_t n, uint64_t seed, double* out) {
  return guarded([&] {
    if (n > 0) require(out, "out");
    const auto v = aqv::random_angles(n, seed);
    copy_out(v, out, n);
  });
}

aqv_status aqv_vqe_run_create(const aqv_qubit_op* op, const aqv_ansatz* ansatz,
                              const double* x0, size_t n_params,
                              const aqv_spsa_config* config, uint64_t shots,
                              aqv_vqe_run** out) {
  return guarded([&] {
    require(op, "operator");
    require(ansatz, "ansatz");
    require(out, "out");
    const auto cfg = config_of(config);
    std::vector<double> start =
        x0 ? std::vector<double>(x0, x0 + n_params)
           : aqv::random_angles(ansatz->value.n_params(), cfg.seed);
    *out = new aqv_vqe_run{
        aqv::vqe_energy(op->value, ansatz->value, start, cfg, {shots})};
  });
}

double aqv_vqe_run_energy(const aqv_vqe_run* run) {
  return run ? run->value.energy : std::numeric_limits<double>::quiet_NaN();
}

size_t aqv_vqe_run_params(const aqv_vqe_run* run, double* out, size_t capacity) {
  return run ? copy_out(run->value.params, out, capacity) : 0;
}

aqv_status aqv_vqe_run_to_json(const aqv_vqe_run* run, double reference,
                               char** out) {
  return guarded([&] {
    require(run, "run");
    require(out, "out");
    *out = dup_string(aqv::to_json(run->value, reference).dump(2) + "\n");
  });
}

aqv_status aqv_vqe_run_trace_csv(const aqv_vqe_run* run, char** out) {
  return guarded([&] {
    require(run, "run");
    require(out, "out");
    std::ostringstream csv;
    aqv::write_trace_csv(csv, run->value.trace);
    *out = dup_string(csv.str());
  });
}

void aqv_vqe_run_free(aqv_vqe_run* run) { delete run; }

aqv_status aqv_warm_start_create(const aqv_qubit_op* op, const aqv_ansatz* ansatz,
                                 const aqv_spsa_config* config,
                                 size_t n_restarts, double reference,
                                 uint64_t shots, size_t jobs,
                                 aqv_warm_start** out) {
  return guarded([&] {
    require(op, "operator");
    require(ansatz, "ansatz");
    require(out, "out");
    aqv::WarmStartOptions options;
    options.n_restarts = n_restarts;
    options.vqe.shots = shots;
    options.jobs = jobs;
    *out = new aqv_warm_start{aqv::warm_start_search(
        op->value, ansatz->value, config_of(config), reference, options)};
  });
}

size_t aqv_warm_start_n_runs(const aqv_warm_start* ws) {
  return ws ? ws->value.runs.size() : 0;
}

size_t aqv_warm_start_best_index(const aqv_warm_start* ws) {
  return ws ? ws->value.best_run_index : 0;
}

double aqv_warm_start_energy(const aqv_warm_start* ws, size_t run) {
  if (ws == nullptr || run >= ws->value.runs.size())
    return std::numeric_limits<double>::quiet_NaN();
  return ws->value.runs[run].energy;
}

double aqv_warm_start_delta(const aqv_warm_start* ws, size_t run) {
  if (ws == nullptr || run >= ws->value.deltas.size())
    return std::numeric_limits<double>::quiet_NaN();
  return ws->value.deltas[run];
}

size_t aqv_warm_start_best_params(const aqv_warm_start* ws, double* out,
                                  size_t capacity) {
  return ws ? copy_out(ws->value.best_params, out, capacity) : 0;
}

aqv_status aqv_warm_start_to_json(const aqv_warm_start* ws, char** out) {
  return guarded([&] {
    require(ws, "warm start");
    require(out, "out");
    *out = dup_string(aqv::to_json(ws->value).dump(2) + "\n");
  });
}

aqv_status aqv_warm_start_to_csv(const aqv_warm_start* ws, char** out) {
  return guarded([&] {
    require(ws, "warm start");
    require(out, "out");
    *out = dup_string(aqv::warm_start_csv(ws->value));
  });
}

void aqv_warm_start_free(aqv_warm_start* ws) { delete ws; }

aqv_status aqv_read_params(const char* json_path, double** out, size_t* n) {
  return guarded([&] {
    require(json_path, "path");
    require(out, "out");
    require(n, "n");
    const auto v = aqv::read_params_json(json_path);
    auto* buf = static_cast<double*>(std::malloc(sizeof(double) * (v.empty() ? 1 : v.size())));
    if (buf == nullptr) throw std::bad_alloc();
    copy_out(v, buf, v.size());
    *out = buf;
    *n = v.size();
  });
}

void aqv_scan_options_init(aqv_scan_options* options) {
  if (options == nullptr) return;
  const aqv::ScanOptions d;
  *options = {};
  options->layers = d.layers;
  aqv_spsa_config_init(&options->spsa);
  options->sector = -1;
  options->keep_going = 0;
  options->jobs = 1;
  options->shots = 0;
  options->use_active_space = 0;
}

aqv_status aqv_scan_create(const char* manifest_path, const double* warm_params,
                           size_t n_params, const aqv_scan_options* options,
                           aqv_scan** out) {
  return guarded([&] {
    require(manifest_path, "manifest path");
    require(out, "out");
    if (n_params > 0) require(warm_params, "warm params");
    aqv_scan_options defaults;
    aqv_scan_options_init(&defaults);
    const auto& o = options ? *options : defaults;
    auto manifest = aqv::load_manifest(manifest_path);
    if (o.use_active_space)
      manifest.active_space = {indices(o.frozen, o.n_frozen),
                               indices(o.removed, o.n_removed)};
    aqv::ScanOptions so;
    so.layers = o.layers;
    so.spsa = config_of(&o.spsa);
    so.sector = sector_of(o.sector);
    so.keep_going = o.keep_going != 0;
    so.jobs = o.jobs;
    so.vqe.shots = o.shots;
    auto result = std::make_unique<aqv_scan>();
    result->options = so;
    result->value = aqv::scan(
        manifest, std::span<const double>(warm_params, n_params), so);
    for (const auto& f : result->value.failures) {
      char label[64];
      std::snprintf(label, sizeof label, "%.6g deg %.6g A: ",
                    f.geometry.bond_angle, f.geometry.bond_length);
      result->failure_text.push_back(label + f.message);
    }
    *out = result.release();
  });
}

size_t aqv_scan_n_records(const aqv_scan* scan) {
  return scan ? scan->value.records.size() : 0;
}

aqv_status aqv_scan_record(const aqv_scan* scan, size_t i, aqv_pes_record* out) {
  return guarded([&] {
    require(scan, "scan");
    require(out, "out");
    if (i >= scan->value.records.size())
      aqv::fail(aqv::ErrorKind::kIndex, "record " + std::to_string(i) +
                                            " out of range");
    const auto& r = scan->value.records[i];
    *out = {r.geometry.bond_angle, r.geometry.bond_length, r.vqe_energy,
            r.exact_energy,        r.delta,
            r.diagnostics.top_probability, r.diagnostics.gap};
  });
}

size_t aqv_scan_n_failures(const aqv_scan* scan) {
  return scan ? scan->failure_text.size() : 0;
}

const char* aqv_scan_failure(const aqv_scan* scan, size_t i) {
  if (scan == nullptr || i >= scan->failure_text.size()) return nullptr;
  return scan->failure_text[i].c_str();
}

aqv_status aqv_scan_to_csv(const aqv_scan* scan, char** out) {
  return guarded([&] {
    require(scan, "scan");
    require(out, "out");
    *out = dup_string(aqv::pes_csv(scan->value.records));
  });
}

aqv_status aqv_scan_to_json(const aqv_scan* scan, char** out) {
  return guarded([&] {
    require(scan, "scan");
    require(out, "out");
    *out = dup_string(aqv::scan_json(scan->value, scan->options));
  });
}

void aqv_scan_free(aqv_scan* scan) { delete scan; }

aqv_status aqv_fit_create(const double* angles, const double* lengths,
                          const double* energies, size_t n, aqv_fit** out) {
  return guarded([&] {
    require(out, "out");
    if (n > 0) {
      require(angles, "angles");
      require(lengths, "lengths");
      require(energies, "energies");
    }
    std::vector<aqv::SurfacePoint> points(n);
    for (size_t i = 0; i < n; ++i) points[i] = {angles[i], lengths[i], energies[i]};
    *out = new aqv_fit{aqv::fit_surface(points)};
  });
}

aqv_status aqv_fit_from_csv(const char* csv_path, const char* energy_column,
                            aqv_fit** out) {
  return guarded([&] {
    require(csv_path, "path");
    require(out, "out");
    const auto points = aqv::read_pes_csv(
        csv_path, energy_column ? energy_column : "exact_energy");
    *out = new aqv_fit{aqv::fit_surface(points)};
  });
}

void aqv_fit_coefficients(const aqv_fit* fit, double out[9]) {
  if (fit == nullptr || out == nullptr) return;
  out[0] = fit->value.intercept;
  for (size_t k = 0; k < 4; ++k) {
    out[1 + k] = fit->value.angle_coefficients[k];
    out[5 + k] = fit->value.length_coefficients[k];
  }
}

double aqv_fit_residual_rms(const aqv_fit* fit) {
  return fit ? fit->value.residual_rms : std::numeric_limits<double>::quiet_NaN();
}

double aqv_fit_evaluate(const aqv_fit* fit, double angle, double length) {
  return fit ? fit->value.evaluate(angle, length)
             : std::numeric_limits<double>::quiet_NaN();
}

aqv_status aqv_fit_minimize(const aqv_fit* fit, aqv_surface_minimum* out) {
  return guarded([&] {
    require(fit, "fit");
    require(out, "out");
    *out = minimum_of(aqv::minimize_surface(fit->value));
  });
}

aqv_status aqv_fit_minimize_in(const aqv_fit* fit, double angle_lo,
                               double angle_hi, double length_lo,
                               double length_hi, aqv_surface_minimum* out) {
  return guarded([&] {
    require(fit, "fit");
    require(out, "out");
    *out = minimum_of(aqv::minimize_surface(fit->value, {angle_lo, angle_hi},
                                            {length_lo, length_hi}));
  });
}

aqv_status aqv_fit_to_json(const aqv_fit* fit, const aqv_surface_minimum* minimum,
                           char** out) {
  return guarded([&] {
    require(fit, "fit");
    require(out, "out");
    std::optional<aqv::SurfaceMinimum> m;
    if (minimum)
      m = aqv::SurfaceMinimum{minimum->angle_star, minimum->length_star,
                              minimum->energy_star, minimum->angle_at_boundary != 0,
                              minimum->length_at_boundary != 0};
    *out = dup_string(aqv::fit_json(fit->value, m ? &*m : nullptr) + "\n");
  });
}

void aqv_fit_free(aqv_fit* fit) { delete fit; }

}  // extern "C"
