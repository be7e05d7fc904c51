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

#include "aquavqe/fermion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "aquavqe/error.hpp"

namespace aqv {

namespace {

constexpr double kSymmetryTol = 1e-10;

}  // namespace

void TwoBodyTensor::set_symmetric(std::size_t p, std::size_t q, std::size_t r,
                                  std::size_t s, double value) noexcept {
  at(p, q, r, s) = value;
  at(q, p, r, s) = value;
  at(p, q, s, r) = value;
  at(q, p, s, r) = value;
  at(r, s, p, q) = value;
  at(s, r, p, q) = value;
  at(r, s, q, p) = value;
  at(s, r, q, p) = value;
}

double TwoBodyTensor::max_asymmetry() const noexcept {
  double worst = 0.0;
  for (std::size_t p = 0; p < n_; ++p)
    for (std::size_t q = 0; q < n_; ++q)
      for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t s = 0; s < n_; ++s) {
          const double v = (*this)(p, q, r, s);
          worst = std::max({worst, std::abs(v - (*this)(q, p, r, s)),
                            std::abs(v - (*this)(p, q, s, r)),
                            std::abs(v - (*this)(r, s, p, q))});
        }
  return worst;
}

FermionicHamiltonian::FermionicHamiltonian(std::size_t n_alpha,
                                           std::size_t n_beta, double e_core,
                                           Eigen::MatrixXd h1, TwoBodyTensor h2)
    : n_alpha_(n_alpha),
      n_beta_(n_beta),
      e_core_(e_core),
      h1_(std::move(h1)),
      h2_(std::move(h2)) {
  const auto n = h2_.size();
  if (static_cast<std::size_t>(h1_.rows()) != n ||
      static_cast<std::size_t>(h1_.cols()) != n)
    fail(ErrorKind::kDomain, "one-body and two-body orbital counts differ");
  if (n_alpha_ > n || n_beta_ > n)
    fail(ErrorKind::kDomain, "more electrons of one spin than orbitals");
  if (!std::isfinite(e_core_) || !h1_.allFinite())
    fail(ErrorKind::kDomain, "non-finite integrals");
  if ((h1_ - h1_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol)
    fail(ErrorKind::kConsistency, "one-body integrals are not symmetric");
  if (h2_.max_asymmetry() > kSymmetryTol)
    fail(ErrorKind::kConsistency,
         "two-body integrals lack 8-fold permutational symmetry");
}

namespace {

struct Header {
  std::optional<long> norb, nelec, ms2;
};

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return out;
}

long header_int(const std::string& value, std::size_t line) {
  char* end = nullptr;
  const long v = std::strtol(value.c_str(), &end, 10);
  if (end == value.c_str())
    fail(ErrorKind::kParse, "line " + std::to_string(line) +
                                ": expected integer header value, got '" +
                                value + "'");
  return v;
}

// Pulls KEY=VALUE pairs out of the namelist text. Values of keys such as
// ORBSYM span several comma-separated items, so a new key starts only where an
// identifier is followed by '='.
void scan_header_line(const std::string& raw, std::size_t line, Header& h) {
  std::string text = upper(raw);
  for (auto tag : {"&FCI", "&END", "/"}) {
    for (auto pos = text.find(tag); pos != std::string::npos;
         pos = text.find(tag))
      text.replace(pos, std::string_view(tag).size(), " ");
  }
  std::size_t i = 0;
  while (i < text.size()) {
    if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
      ++j;
    std::size_t k = j;
    while (k < text.size() && text[k] == ' ') ++k;
    if (k >= text.size() || text[k] != '=') {
      fail(ErrorKind::kParse, "line " + std::to_string(line) +
                                  ": malformed header near '" +
                                  raw.substr(std::min(i, raw.size())) + "'");
    }
    const std::string key = text.substr(i, j - i);
    std::size_t v = k + 1;
    std::size_t e = v;
    while (e < text.size() && text[e] != ',') ++e;
    std::string value = text.substr(v, e - v);
    if (key == "NORB") h.norb = header_int(value, line);
    if (key == "NELEC") h.nelec = header_int(value, line);
    if (key == "MS2") h.ms2 = header_int(value, line);
    // Skip the remaining comma-separated items of list-valued keys.
    i = e;
    while (i < text.size()) {
      if (text[i] == ',' || text[i] == ' ') {
        ++i;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(text[i]))) break;
      while (i < text.size() && text[i] != ',') ++i;
    }
  }
}

bool header_terminated(const std::string& raw) {
  const auto t = upper(raw);
  return t.find("&END") != std::string::npos ||
         t.find('/') != std::string::npos;
}

using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

Key canonical(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
  if (p < q) std::swap(p, q);
  if (r < s) std::swap(r, s);
  if (std::make_pair(p, q) < std::make_pair(r, s)) {
    std::swap(p, r);
    std::swap(q, s);
  }
  return {p, q, r, s};
}

}  // namespace

FermionicHamiltonian parse_fcidump(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  Header header;
  bool started = false;
  bool ended = false;
  while (!ended && std::getline(in, line)) {
    ++line_no;
    if (!started) {
      const auto t = upper(line);
      if (t.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (t.find("&FCI") == std::string::npos)
        fail(ErrorKind::kParse, "line " + std::to_string(line_no) +
                                    ": expected '&FCI' header");
      started = true;
    }
    ended = header_terminated(line);
    scan_header_line(line, line_no, header);
  }
  if (!started) fail(ErrorKind::kParse, "line 1: empty FCIDUMP input");
  if (!ended)
    fail(ErrorKind::kParse, "line " + std::to_string(line_no) +
                                ": header not terminated by &END or /");
  if (!header.norb || !header.nelec)
    fail(ErrorKind::kParse, "line " + std::to_string(line_no) +
                                ": header lacks NORB or NELEC");
  const long ms2 = header.ms2.value_or(0);
  if (*header.norb <= 0 || *header.nelec < 0 ||
      (*header.nelec + ms2) % 2 != 0 || std::labs(ms2) > *header.nelec)
    fail(ErrorKind::kParse, "line " + std::to_string(line_no) +
                                ": inconsistent NORB/NELEC/MS2");

  const auto n = static_cast<std::size_t>(*header.norb);
  const auto n_alpha = static_cast<std::size_t>((*header.nelec + ms2) / 2);
  const auto n_beta = static_cast<std::size_t>((*header.nelec - ms2) / 2);

  std::optional<double> e_core;
  std::map<std::pair<std::size_t, std::size_t>, double> one_body;
  std::map<Key, double> two_body;

  auto record = [&](auto& table, const auto& key, double value,
                    std::size_t at) {
    auto [it, inserted] = table.emplace(key, value);
    if (!inserted && std::abs(it->second - value) > 1e-10)
      fail(ErrorKind::kConsistency,
           "line " + std::to_string(at) + ": conflicting duplicate integral");
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::string value_text;
    long idx[4];
    if (!(fields >> value_text >> idx[0] >> idx[1] >> idx[2] >> idx[3]))
      fail(ErrorKind::kParse, "line " + std::to_string(line_no) +
                                  ": expected '<value> i j k l'");
    // Fortran writers sometimes emit D exponents.
    std::replace(value_text.begin(), value_text.end(), 'D', 'E');
    std::replace(value_text.begin(), value_text.end(), 'd', 'e');
    char* end = nullptr;
    const double value = std::strtod(value_text.c_str(), &end);
    if (end != value_text.c_str() + value_text.size())
      fail(ErrorKind::kParse, "line " + std::to_string(line_no) +
                                  ": bad numeric value '" + value_text + "'");
    for (long v : idx)
      if (v < 0 || v > static_cast<long>(n))
        fail(ErrorKind::kIndex, "line " + std::to_string(line_no) +
                                    ": index " + std::to_string(v) +
                                    " outside [1, " + std::to_string(n) + "]");
    const bool i0 = idx[0] == 0, j0 = idx[1] == 0, k0 = idx[2] == 0,
               l0 = idx[3] == 0;
    if (i0 && j0 && k0 && l0) {
      if (e_core && std::abs(*e_core - value) > 1e-10)
        fail(ErrorKind::kConsistency, "line " + std::to_string(line_no) +
                                          ": conflicting core energy");
      e_core = value;
    } else if (k0 && l0) {
      if (i0 || j0)
        fail(ErrorKind::kIndex, "line " + std::to_string(line_no) +
                                    ": one-body index 0");
      auto p = static_cast<std::size_t>(idx[0] - 1);
      auto q = static_cast<std::size_t>(idx[1] - 1);
      record(one_body, std::make_pair(std::max(p, q), std::min(p, q)), value,
             line_no);
    } else if (i0 || j0 || k0 || l0) {
      // Orbital-energy records (i 0 0 0) carry no Hamiltonian information.
      if (!(j0 && k0 && l0))
        fail(ErrorKind::kIndex, "line " + std::to_string(line_no) +
                                    ": partially zero index record");
    } else {
      record(two_body,
             canonical(static_cast<std::size_t>(idx[0] - 1),
                       static_cast<std::size_t>(idx[1] - 1),
                       static_cast<std::size_t>(idx[2] - 1),
                       static_cast<std::size_t>(idx[3] - 1)),
             value, line_no);
    }
  }

  Eigen::MatrixXd h1 = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [pq, v] : one_body) {
    h1(pq.first, pq.second) = v;
    h1(pq.second, pq.first) = v;
  }
  TwoBodyTensor h2(n);
  for (const auto& [k, v] : two_body) {
    const auto [p, q, r, s] = k;
    h2.set_symmetric(p, q, r, s, v);
  }
  return FermionicHamiltonian(n_alpha, n_beta, e_core.value_or(0.0),
                              std::move(h1), std::move(h2));
}

FermionicHamiltonian load_fcidump(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kIo, "cannot open FCIDUMP file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_fcidump(buffer.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

void write_fcidump(std::ostream& out, const FermionicHamiltonian& h) {
  const auto n = h.n_spatial();
  const long ms2 = static_cast<long>(h.n_alpha()) - static_cast<long>(h.n_beta());
  out << "&FCI NORB=" << n << ",NELEC=" << h.n_electrons() << ",MS2=" << ms2
      << ",\n&END\n";
  out << std::setprecision(17) << std::scientific;
  auto line = [&](double v, std::size_t i, std::size_t j, std::size_t k,
                  std::size_t l) {
    out << v << ' ' << i << ' ' << j << ' ' << k << ' ' << l << '\n';
  };
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q)
      for (std::size_t r = 0; r <= p; ++r)
        for (std::size_t s = 0; s <= r; ++s) {
          if (p * (p + 1) / 2 + q < r * (r + 1) / 2 + s) continue;
          const double v = h.h2()(p, q, r, s);
          if (v != 0.0) line(v, p + 1, q + 1, r + 1, s + 1);
        }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q)
      if (h.h1()(p, q) != 0.0) line(h.h1()(p, q), p + 1, q + 1, 0, 0);
  line(h.e_core(), 0, 0, 0, 0);
}

std::string to_fcidump(const FermionicHamiltonian& h) {
  std::ostringstream out;
  write_fcidump(out, h);
  return out.str();
}

FermionicHamiltonian reduce_active_space(const FermionicHamiltonian& h,
                                         const ActiveSpaceSpec& spec) {
  const auto n = h.n_spatial();
  std::vector<char> role(n, 'a');
  for (auto i : spec.frozen) {
    if (i >= n)
      fail(ErrorKind::kDomain, "frozen orbital " + std::to_string(i) +
                                   " out of range");
    if (role[i] != 'a')
      fail(ErrorKind::kDomain,
           "orbital " + std::to_string(i) + " listed twice");
    role[i] = 'f';
  }
  for (auto i : spec.removed) {
    if (i >= n)
      fail(ErrorKind::kDomain, "removed orbital " + std::to_string(i) +
                                   " out of range");
    if (role[i] != 'a')
      fail(ErrorKind::kDomain, "orbital " + std::to_string(i) +
                                   " is both frozen and removed or repeated");
    role[i] = 'r';
  }
  // Aufbau filling by index: orbital i holds an alpha electron when
  // i < n_alpha and a beta electron when i < n_beta.
  for (auto i : spec.frozen)
    if (i >= h.n_alpha() || i >= h.n_beta())
      fail(ErrorKind::kDomain, "frozen orbital " + std::to_string(i) +
                                   " is not doubly occupied in the HF filling");
  for (auto i : spec.removed)
    if (i < h.n_alpha() || i < h.n_beta())
      fail(ErrorKind::kDomain, "removed orbital " + std::to_string(i) +
                                   " is occupied in the HF filling");

  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < n; ++i)
    if (role[i] == 'a') active.push_back(i);
  const auto nf = spec.frozen.size();
  const auto n_alpha = h.n_alpha() - nf;
  const auto n_beta = h.n_beta() - nf;
  if (n_alpha > active.size() || n_beta > active.size())
    fail(ErrorKind::kDomain,
         std::to_string(n_alpha + n_beta) + " active electrons exceed " +
             std::to_string(2 * active.size()) + " active spin orbitals");

  const auto& g = h.h2();
  double e_core = h.e_core();
  for (auto i : spec.frozen) {
    e_core += 2.0 * h.h1()(i, i);
    for (auto j : spec.frozen) e_core += 2.0 * g(i, i, j, j) - g(i, j, j, i);
  }
  const auto m = active.size();
  Eigen::MatrixXd h1(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const auto p = active[a], q = active[b];
      double v = h.h1()(p, q);
      for (auto i : spec.frozen) v += 2.0 * g(p, q, i, i) - g(p, i, i, q);
      h1(a, b) = v;
    }
  // Symmetrize away round-off from the summation order.
  h1 = 0.5 * (h1 + h1.transpose()).eval();
  TwoBodyTensor h2(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b <= a; ++b)
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t d = 0; d <= c; ++d)
          h2.set_symmetric(a, b, c, d,
                           g(active[a], active[b], active[c], active[d]));
  return FermionicHamiltonian(n_alpha, n_beta, e_core, std::move(h1),
                              std::move(h2));
}

ActiveSpaceSpec default_water_active_space() { return {{0, 1, 2}, {6}}; }

}  // namespace aqv
