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


// aqv: command-line front end over the aquavqe C interface.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aquavqe.h"

namespace {

constexpr std::uint64_t kDefaultSeed = 7;

// Carries a library status out of a subcommand.
struct Failure {
  aqv_status status;
  std::string message;
};

void check(aqv_status s) {
  if (s != AQV_OK) throw Failure{s, aqv_last_error()};
}

[[noreturn]] void usage_error(const std::string& message) {
  throw Failure{AQV_ERR_INVALID_ARGUMENT, message};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using FermionPtr =
    std::unique_ptr<aqv_fermion_op, Deleter<aqv_fermion_op, aqv_fermion_op_free>>;
using QubitPtr =
    std::unique_ptr<aqv_qubit_op, Deleter<aqv_qubit_op, aqv_qubit_op_free>>;
using AnsatzPtr = std::unique_ptr<aqv_ansatz, Deleter<aqv_ansatz, aqv_ansatz_free>>;
using RunPtr = std::unique_ptr<aqv_vqe_run, Deleter<aqv_vqe_run, aqv_vqe_run_free>>;
using WarmPtr =
    std::unique_ptr<aqv_warm_start, Deleter<aqv_warm_start, aqv_warm_start_free>>;
using ScanPtr = std::unique_ptr<aqv_scan, Deleter<aqv_scan, aqv_scan_free>>;
using FitPtr = std::unique_ptr<aqv_fit, Deleter<aqv_fit, aqv_fit_free>>;

std::string take_string(char* s) {
  std::string out(s);
  aqv_free_string(s);
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{AQV_ERR_IO, "cannot write '" + path + "'"};
  out << content;
  if (!out) throw Failure{AQV_ERR_IO, "write failed for '" + path + "'"};
}

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// "0,1,2", "" or "none".
std::vector<size_t> parse_index_list(const std::string& text,
                                     const std::string& flag) {
  std::vector<size_t> out;
  if (text.empty() || text == "none") return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<size_t>(v));
    } catch (const std::exception&) {
      usage_error(flag + ": '" + item + "' is not a non-negative index");
    }
  }
  return out;
}

struct ActiveSpaceArgs {
  std::string freeze;
  std::string remove;
  std::string ordering = "blocked";
  bool set = false;

  void add(CLI::App* app) {
    app->add_option("--freeze", freeze,
                    "Comma-separated 0-based orbitals to freeze into the core, "
                    "or 'none' (default: 0,1,2)");
    app->add_option("--remove", remove,
                    "Comma-separated 0-based virtual orbitals to drop, or 'none' "
                    "(default: 6)");
  }
  void add_ordering(CLI::App* app) {
    app->add_option("--ordering", ordering,
                    "Spin-orbital to qubit layout")
        ->check(CLI::IsMember({"blocked", "interleaved"}))
        ->capture_default_str();
  }
  aqv_spin_ordering spin_ordering() const {
    return ordering == "interleaved" ? AQV_ORDERING_INTERLEAVED
                                     : AQV_ORDERING_BLOCKED;
  }
  bool given(const CLI::App* app) const {
    return app->count("--freeze") + app->count("--remove") > 0;
  }
  void resolve(const CLI::App* app, std::vector<size_t>& frozen,
               std::vector<size_t>& removed) const {
    size_t f[8], r[8], nf = 0, nr = 0;
    aqv_default_active_space(f, &nf, r, &nr);
    frozen.assign(f, f + nf);
    removed.assign(r, r + nr);
    if (app->count("--freeze")) frozen = parse_index_list(freeze, "--freeze");
    if (app->count("--remove")) removed = parse_index_list(remove, "--remove");
  }
};

struct SpsaArgs {
  aqv_spsa_config config{};
  double a = 0.0;
  double A = 0.0;

  SpsaArgs() { aqv_spsa_config_init(&config); config.seed = kDefaultSeed; }

  void add(CLI::App* app) {
    app->add_option("--max-iter", config.max_iter, "SPSA iterations")
        ->capture_default_str();
    app->add_option("--spsa-a", a,
                    "SPSA learning-rate scale a (default: calibrated)");
    app->add_option("--spsa-c", config.c, "SPSA perturbation scale c")
        ->capture_default_str();
    app->add_option("--spsa-A", A,
                    "SPSA stability constant A (default: 0.1 * max-iter)");
    app->add_option("--alpha", config.alpha, "Learning-rate decay exponent")
        ->capture_default_str();
    app->add_option("--gamma", config.gamma, "Perturbation decay exponent")
        ->capture_default_str();
    app->add_option("--target-step", config.target_step,
                    "First-step size in radians targeted by calibration")
        ->capture_default_str();
    app->add_option("--calibration-probes", config.calibration_probes,
                    "Probe pairs used to calibrate a")
        ->capture_default_str();
    app->add_option("--seed", config.seed, "Master seed")->capture_default_str();
  }
  aqv_spsa_config resolve(const CLI::App* app) const {
    auto c = config;
    if (app->count("--spsa-a")) c.a = a;
    if (app->count("--spsa-A")) c.A = A;
    return c;
  }
};

struct Loaded {
  FermionPtr reduced;
  QubitPtr hamiltonian;
  size_t n_spatial = 0, n_alpha = 0, n_beta = 0;
};

Loaded load_reduced(const std::string& path, const std::vector<size_t>& frozen,
                    const std::vector<size_t>& removed, aqv_spin_ordering ordering) {
  aqv_fermion_op* raw = nullptr;
  check(aqv_fermion_op_load(path.c_str(), &raw));
  FermionPtr full(raw);
  aqv_fermion_op* reduced = nullptr;
  check(aqv_fermion_op_reduce(full.get(), frozen.data(), frozen.size(),
                              removed.data(), removed.size(), &reduced));
  Loaded out;
  out.reduced.reset(reduced);
  check(aqv_fermion_op_info(reduced, &out.n_spatial, &out.n_alpha, &out.n_beta,
                            nullptr));
  aqv_qubit_op* h = nullptr;
  check(aqv_jordan_wigner(reduced, ordering, &h));
  out.hamiltonian.reset(h);
  return out;
}

AnsatzPtr make_ansatz(const Loaded& l, size_t layers, aqv_spin_ordering ordering) {
  aqv_ansatz* a = nullptr;
  check(aqv_ansatz_create(2 * l.n_spatial, layers, l.n_alpha, l.n_beta, ordering,
                          &a));
  return AnsatzPtr(a);
}

std::vector<double> read_params(const std::string& path) {
  double* values = nullptr;
  size_t n = 0;
  check(aqv_read_params(path.c_str(), &values, &n));
  std::vector<double> out(values, values + n);
  aqv_free_doubles(values);
  return out;
}

// Applies `key = value` lines to options the command line left unset.
void apply_config(CLI::App* app, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{AQV_ERR_IO, "cannot open config '" + path + "'"};
  std::string line;
  for (size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Failure{AQV_ERR_PARSE, path + ":" + std::to_string(lineno) +
                                       ": expected 'key = value'"};
    auto key = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    for (auto& ch : key)
      if (ch == '_') ch = '-';
    if (key == "config") continue;
    auto* opt = app->get_option_no_throw("--" + key);
    if (opt == nullptr)
      throw Failure{AQV_ERR_PARSE, path + ":" + std::to_string(lineno) +
                                       ": unknown key '" + key + "' for " +
                                       app->get_name()};
    if (opt->count() > 0) continue;
    try {
      opt->add_result(value);
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw Failure{AQV_ERR_PARSE, path + ":" + std::to_string(lineno) + ": " +
                                       key + ": " + e.what()};
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Water ground-state energies by VQE and exact diagonalization"};
  app.require_subcommand(1);
  app.set_version_flag("--version", aqv_version());

  std::string config_path;
  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", config_path,
                    "File of 'key = value' lines; flags take precedence");
  };

  ActiveSpaceArgs space;
  SpsaArgs spsa;
  std::string fcidump, out_prefix, params_path, manifest, csv_path;
  std::string column = "exact_energy";
  size_t layers = 2, restarts = 10, jobs = 1;
  long sector = -1;
  std::uint64_t shots = 0;
  bool keep_going = false;
  std::vector<double> angle_range, length_range;

  auto* ed = app.add_subcommand("ed", "Print the exact ground-state energy");
  ed->add_option("--fcidump", fcidump, "Integral file")->required();
  space.add(ed);
  space.add_ordering(ed);
  ed->add_option("--sector", sector,
                 "Restrict to this particle number (default: whole Fock space)");
  add_config(ed);

  auto add_vqe_common = [&](CLI::App* sub) {
    sub->add_option("--fcidump", fcidump, "Integral file")->required();
    space.add(sub);
    space.add_ordering(sub);
    sub->add_option("--layers", layers, "Entangling layers in the ansatz")
        ->capture_default_str();
    sub->add_option("--sector", sector,
                    "Particle number for the reference energy (default: none)");
    sub->add_option("--shots", shots,
                    "Sample this many shots for the probability diagnostics "
                    "(default: exact probabilities)");
    spsa.add(sub);
    add_config(sub);
  };

  auto* vqe = app.add_subcommand("vqe", "Run one VQE optimization");
  add_vqe_common(vqe);
  vqe->add_option("--params", params_path,
                  "JSON file whose best_params or params start the run "
                  "(default: random angles from the seed)");
  vqe->add_option("--out", out_prefix,
                  "Writes <out>.json and <out>_trace.csv (default: vqe)");

  auto* warm = app.add_subcommand(
      "warmstart", "Repeat VQE from random angles and keep the closest run");
  add_vqe_common(warm);
  warm->add_option("--restarts", restarts, "Number of VQE runs")
      ->capture_default_str();
  warm->add_option("--jobs", jobs, "Worker threads (no effect on results)")
      ->capture_default_str();
  warm->add_option("--out", out_prefix,
                   "Writes <out>.json and <out>.csv (default: warmstart)");

  auto* scan = app.add_subcommand(
      "scan", "Warm-started VQE and exact energies over a geometry manifest");
  scan->add_option("--manifest", manifest, "Geometry manifest")->required();
  scan->add_option("--params", params_path,
                   "Warm-start JSON providing best_params")
      ->required();
  space.add(scan);
  scan->add_option("--layers", layers, "Entangling layers in the ansatz")
      ->capture_default_str();
  scan->add_option("--sector", sector,
                   "Particle number for the exact energies (default: none)");
  scan->add_option("--shots", shots,
                   "Sample this many shots for the probability diagnostics");
  scan->add_flag("--keep-going", keep_going,
                 "Record failing geometries instead of stopping");
  scan->add_option("--jobs", jobs, "Worker threads (no effect on results)")
      ->capture_default_str();
  scan->add_option("--out", out_prefix,
                   "Writes <out>.csv and <out>.json (default: pes)");
  spsa.add(scan);
  add_config(scan);

  auto* fit = app.add_subcommand(
      "fit", "Fit the inverse-power surface to a PES CSV and minimize it");
  fit->add_option("--csv", csv_path, "PES CSV from scan")->required();
  fit->add_option("--column", column, "Energy column to fit")
      ->check(CLI::IsMember({"exact_energy", "vqe_energy"}))
      ->capture_default_str();
  fit->add_option("--angle-range", angle_range,
                  "Angle search interval LO HI in degrees (default: data hull)")
      ->expected(2);
  fit->add_option("--length-range", length_range,
                  "Length search interval LO HI in Angstrom (default: data hull)")
      ->expected(2);
  fit->add_option("--out", out_prefix, "Writes <out>.json (default: fit)");
  add_config(fit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    for (auto& ch : message)
      if (ch == '\n') ch = ' ';
    std::cerr << "error invalid_argument: " << message << '\n'
              << "Run with --help for usage.\n";
    return 2;
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    if (!config_path.empty()) apply_config(active, config_path);
    if (layers > 64) usage_error("--layers must be at most 64");
    const std::string name = active->get_name();

    if (name == "ed") {
      std::vector<size_t> frozen, removed;
      space.resolve(active, frozen, removed);
      auto l = load_reduced(fcidump, frozen, removed, space.spin_ordering());
      double e = 0.0;
      check(aqv_ground_state(l.hamiltonian.get(), sector, &e));
      std::cout << format17(e) << '\n';
    } else if (name == "vqe" || name == "warmstart") {
      std::vector<size_t> frozen, removed;
      space.resolve(active, frozen, removed);
      const auto ordering = space.spin_ordering();
      auto l = load_reduced(fcidump, frozen, removed, ordering);
      auto ansatz = make_ansatz(l, layers, ordering);
      const auto config = spsa.resolve(active);
      double reference = 0.0;
      check(aqv_ground_state(l.hamiltonian.get(), sector, &reference));
      if (name == "vqe") {
        if (out_prefix.empty()) out_prefix = "vqe";
        std::vector<double> x0;
        if (!params_path.empty()) x0 = read_params(params_path);
        aqv_vqe_run* raw = nullptr;
        check(aqv_vqe_run_create(l.hamiltonian.get(), ansatz.get(),
                                 x0.empty() ? nullptr : x0.data(), x0.size(),
                                 &config, shots, &raw));
        RunPtr run(raw);
        char* text = nullptr;
        check(aqv_vqe_run_to_json(run.get(), reference, &text));
        write_output(out_prefix + ".json", take_string(text));
        check(aqv_vqe_run_trace_csv(run.get(), &text));
        write_output(out_prefix + "_trace.csv", take_string(text));
        const double e = aqv_vqe_run_energy(run.get());
        std::cout << "energy " << format12(e) << " exact " << format12(reference)
                  << " delta " << format12(std::abs(e - reference)) << '\n';
      } else {
        if (out_prefix.empty()) out_prefix = "warmstart";
        aqv_warm_start* raw = nullptr;
        check(aqv_warm_start_create(l.hamiltonian.get(), ansatz.get(), &config,
                                    restarts, reference, shots, jobs, &raw));
        WarmPtr ws(raw);
        char* text = nullptr;
        check(aqv_warm_start_to_json(ws.get(), &text));
        write_output(out_prefix + ".json", take_string(text));
        check(aqv_warm_start_to_csv(ws.get(), &text));
        write_output(out_prefix + ".csv", take_string(text));
        const size_t best = aqv_warm_start_best_index(ws.get());
        std::cout << "best_run " << best << " energy "
                  << format12(aqv_warm_start_energy(ws.get(), best)) << " exact "
                  << format12(reference) << " delta "
                  << format12(aqv_warm_start_delta(ws.get(), best)) << '\n';
      }
    } else if (name == "scan") {
      if (out_prefix.empty()) out_prefix = "pes";
      const auto warm = read_params(params_path);
      std::vector<size_t> frozen, removed;
      space.resolve(active, frozen, removed);
      aqv_scan_options options;
      aqv_scan_options_init(&options);
      options.layers = layers;
      options.spsa = spsa.resolve(active);
      options.sector = sector;
      options.keep_going = keep_going ? 1 : 0;
      options.jobs = jobs;
      options.shots = shots;
      if (space.given(active)) {
        options.use_active_space = 1;
        options.frozen = frozen.data();
        options.n_frozen = frozen.size();
        options.removed = removed.data();
        options.n_removed = removed.size();
      }
      aqv_scan* raw = nullptr;
      check(aqv_scan_create(manifest.c_str(), warm.data(), warm.size(), &options,
                            &raw));
      ScanPtr result(raw);
      char* text = nullptr;
      check(aqv_scan_to_csv(result.get(), &text));
      write_output(out_prefix + ".csv", take_string(text));
      check(aqv_scan_to_json(result.get(), &text));
      write_output(out_prefix + ".json", take_string(text));
      double worst = 0.0;
      const size_t n = aqv_scan_n_records(result.get());
      for (size_t i = 0; i < n; ++i) {
        aqv_pes_record r;
        check(aqv_scan_record(result.get(), i, &r));
        worst = std::max(worst, r.delta);
      }
      for (size_t i = 0; i < aqv_scan_n_failures(result.get()); ++i)
        std::cerr << "skipped " << aqv_scan_failure(result.get(), i) << '\n';
      std::cout << "records " << n << " failures "
                << aqv_scan_n_failures(result.get()) << " max_delta "
                << format12(worst) << '\n';
    } else if (name == "fit") {
      if (out_prefix.empty()) out_prefix = "fit";
      aqv_fit* raw = nullptr;
      check(aqv_fit_from_csv(csv_path.c_str(), column.c_str(), &raw));
      FitPtr f(raw);
      aqv_surface_minimum m;
      if (angle_range.empty() && length_range.empty()) {
        check(aqv_fit_minimize(f.get(), &m));
      } else {
        if (angle_range.empty() || length_range.empty())
          usage_error("--angle-range and --length-range go together");
        check(aqv_fit_minimize_in(f.get(), angle_range[0], angle_range[1],
                                  length_range[0], length_range[1], &m));
      }
      char* text = nullptr;
      check(aqv_fit_to_json(f.get(), &m, &text));
      write_output(out_prefix + ".json", take_string(text));
      std::cout << "angle " << format12(m.angle_star) << " length "
                << format12(m.length_star) << " energy " << format12(m.energy_star)
                << (m.angle_at_boundary || m.length_at_boundary ? " boundary" : "")
                << '\n';
    }
  } catch (const Failure& f) {
    std::string message = f.message;
    for (auto& ch : message)
      if (ch == '\n') ch = ' ';
    std::cerr << "error " << aqv_status_name(f.status) << ": " << message << '\n';
    return 1;
  }
  return 0;
}
