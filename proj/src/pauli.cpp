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

#include "aquavqe/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>
#include <vector>

#include "aquavqe/error.hpp"

namespace aqv {

namespace {

constexpr double kHermitianTol = 1e-10;

std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// i^k for k mod 4.
Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

PauliTerm::PauliTerm(std::size_t n_qubits, std::uint64_t x_mask,
                     std::uint64_t z_mask, Complex coefficient)
    : n_qubits_(n_qubits), x_(x_mask), z_(z_mask), coeff_(coefficient) {
  if (n_qubits > kMaxQubits)
    fail(ErrorKind::kDomain, "Pauli terms support at most 64 qubits");
  if (((x_ | z_) & ~low_mask(n_qubits)) != 0)
    fail(ErrorKind::kDomain, "Pauli mask addresses a qubit beyond n_qubits");
  if (!std::isfinite(coeff_.real()) || !std::isfinite(coeff_.imag()))
    fail(ErrorKind::kDomain, "Pauli coefficient is not finite");
}

PauliTerm PauliTerm::from_string(std::string_view axes, Complex coefficient) {
  std::uint64_t x = 0, z = 0;
  for (std::size_t k = 0; k < axes.size(); ++k) {
    const std::uint64_t bit = std::uint64_t{1} << k;
    switch (axes[k]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default:
        fail(ErrorKind::kParse,
             "invalid Pauli label '" + std::string(1, axes[k]) + "'");
    }
  }
  return {axes.size(), x, z, coefficient};
}

Pauli PauliTerm::axis(std::size_t qubit) const noexcept {
  const bool x = (x_ >> qubit) & 1U, z = (z_ >> qubit) & 1U;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  return z ? Pauli::Z : Pauli::I;
}

std::string PauliTerm::axes() const {
  std::string s(n_qubits_, 'I');
  for (std::size_t k = 0; k < n_qubits_; ++k) s[k] = "IXYZ"[int(axis(k))];
  return s;
}

PauliTerm pauli_multiply(const PauliTerm& a, const PauliTerm& b) {
  if (a.n_qubits() != b.n_qubits())
    fail(ErrorKind::kDomain, "cannot multiply Pauli terms on " +
                                 std::to_string(a.n_qubits()) + " and " +
                                 std::to_string(b.n_qubits()) + " qubits");
  // Cyclic order X->Y->Z->X contributes +i, the reverse order -i.
  int phase = 0;
  for (std::size_t k = 0; k < a.n_qubits(); ++k) {
    const int pa = int(a.axis(k)), pb = int(b.axis(k));
    if (pa == 0 || pb == 0 || pa == pb) continue;
    phase += ((pb - pa + 3) % 3 == 1) ? 1 : -1;
  }
  return {a.n_qubits(), a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask(),
          a.coefficient() * b.coefficient() * i_power(phase)};
}

PauliOperatorSum::PauliOperatorSum(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits > PauliTerm::kMaxQubits)
    fail(ErrorKind::kDomain, "Pauli sums support at most 64 qubits");
}

PauliOperatorSum::PauliOperatorSum(std::size_t n_qubits,
                                   Complex identity_coefficient)
    : PauliOperatorSum(n_qubits) {
  add(PauliTerm(n_qubits, 0, 0, identity_coefficient));
}

Complex PauliOperatorSum::coefficient(std::string_view axes) const {
  const auto t = PauliTerm::from_string(axes);
  auto it = terms_.find({t.x_mask(), t.z_mask()});
  return it == terms_.end() ? Complex{} : it->second;
}

PauliOperatorSum& PauliOperatorSum::add(const PauliTerm& t) {
  if (t.n_qubits() != n_qubits_)
    fail(ErrorKind::kDomain, "term qubit count differs from the sum");
  terms_[{t.x_mask(), t.z_mask()}] += t.coefficient();
  return *this;
}

PauliOperatorSum& PauliOperatorSum::operator+=(const PauliOperatorSum& other) {
  if (other.n_qubits_ != n_qubits_)
    fail(ErrorKind::kDomain, "operator sums act on different qubit counts");
  for (const auto& [k, c] : other.terms_) terms_[k] += c;
  return *this;
}

PauliOperatorSum& PauliOperatorSum::operator-=(const PauliOperatorSum& other) {
  if (other.n_qubits_ != n_qubits_)
    fail(ErrorKind::kDomain, "operator sums act on different qubit counts");
  for (const auto& [k, c] : other.terms_) terms_[k] -= c;
  return *this;
}

PauliOperatorSum& PauliOperatorSum::operator*=(Complex scale) {
  for (auto& [k, c] : terms_) c *= scale;
  return *this;
}

PauliOperatorSum& PauliOperatorSum::prune(double threshold) {
  std::erase_if(terms_,
                [&](const auto& kv) { return std::abs(kv.second) < threshold; });
  return *this;
}

PauliOperatorSum PauliOperatorSum::adjoint() const {
  PauliOperatorSum out(n_qubits_);
  for (const auto& [k, c] : terms_) out.terms_[k] = std::conj(c);
  return out;
}

double PauliOperatorSum::max_imaginary() const noexcept {
  double worst = 0.0;
  for (const auto& [k, c] : terms_) worst = std::max(worst, std::abs(c.imag()));
  return worst;
}

double PauliOperatorSum::max_abs_coefficient() const noexcept {
  double worst = 0.0;
  for (const auto& [k, c] : terms_) worst = std::max(worst, std::abs(c));
  return worst;
}

double PauliOperatorSum::distance(const PauliOperatorSum& other) const {
  return (*this - other).max_abs_coefficient();
}

PauliOperatorSum operator+(PauliOperatorSum a, const PauliOperatorSum& b) {
  return a += b;
}

PauliOperatorSum operator-(PauliOperatorSum a, const PauliOperatorSum& b) {
  return a -= b;
}

PauliOperatorSum operator*(const PauliOperatorSum& a,
                           const PauliOperatorSum& b) {
  if (a.n_qubits() != b.n_qubits())
    fail(ErrorKind::kDomain, "operator sums act on different qubit counts");
  PauliOperatorSum out(a.n_qubits());
  for (const auto& ea : a.terms())
    for (const auto& eb : b.terms())
      out.add(pauli_multiply(a.term(ea), b.term(eb)));
  return out;
}

PauliOperatorSum operator*(Complex s, PauliOperatorSum a) { return a *= s; }

PauliOperatorSum jw_ladder(std::size_t n_qubits, std::size_t mode,
                           bool dagger) {
  if (mode >= n_qubits)
    fail(ErrorKind::kDomain, "mode index beyond qubit count");
  const std::uint64_t tail = low_mask(mode);
  const std::uint64_t bit = std::uint64_t{1} << mode;
  PauliOperatorSum op(n_qubits);
  op.add(PauliTerm(n_qubits, bit, tail, 0.5));
  op.add(PauliTerm(n_qubits, bit, tail | bit,
                   dagger ? Complex(0.0, -0.5) : Complex(0.0, 0.5)));
  return op;
}

PauliOperatorSum jordan_wigner(const FermionicHamiltonian& h,
                               SpinOrdering ordering) {
  const auto n = h.n_spatial();
  if (n > 16)
    fail(ErrorKind::kDomain, "Jordan-Wigner mapping limited to 16 spatial orbitals");
  const auto nq = 2 * n;
  std::vector<PauliOperatorSum> create, annihilate;
  for (std::size_t m = 0; m < nq; ++m) {
    create.push_back(jw_ladder(nq, m, true));
    annihilate.push_back(jw_ladder(nq, m, false));
  }
  auto so = [n, ordering](std::size_t p, int spin) {
    return spin_orbital_qubit(ordering, n, p, spin == 1);
  };

  PauliOperatorSum out(nq, h.e_core());
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const double v = h.h1()(p, q);
      if (v == 0.0) continue;
      for (int s = 0; s < 2; ++s)
        out += Complex(v) * (create[so(p, s)] * annihilate[so(q, s)]);
    }
  // 1/2 sum (pq|rs) a+_{p s} a+_{r t} a_{s t} a_{q s}
  const auto& g = h.h2();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          const double v = g(p, q, r, s);
          if (v == 0.0) continue;
          for (int sg = 0; sg < 2; ++sg)
            for (int tau = 0; tau < 2; ++tau) {
              const auto P = so(p, sg), Q = so(q, sg), R = so(r, tau),
                         S = so(s, tau);
              if (P == R || Q == S) continue;  // a+a+ or aa on one mode vanish
              out += Complex(0.5 * v) *
                     (create[P] * create[R] * annihilate[S] * annihilate[Q]);
            }
        }
  out.prune();
  if (out.max_imaginary() > kHermitianTol)
    fail(ErrorKind::kConsistency,
         "Jordan-Wigner image is not Hermitian (imaginary coefficient " +
             std::to_string(out.max_imaginary()) + ")");
  PauliOperatorSum real(nq);
  for (const auto& entry : out.terms()) {
    auto t = out.term(entry);
    real.add(PauliTerm(nq, t.x_mask(), t.z_mask(), t.coefficient().real()));
  }
  return real.prune();
}

PauliOperatorSum total_number_operator(std::size_t n_qubits) {
  if (n_qubits == 0) fail(ErrorKind::kDomain, "number operator needs a qubit");
  PauliOperatorSum op(n_qubits, 0.5 * static_cast<double>(n_qubits));
  for (std::size_t p = 0; p < n_qubits; ++p)
    op.add(PauliTerm(n_qubits, 0, std::uint64_t{1} << p, -0.5));
  return op;
}

void write_text(std::ostream& out, const PauliOperatorSum& op) {
  std::ostringstream num;
  num << std::setprecision(17);
  for (const auto& entry : op.terms()) {
    const auto t = op.term(entry);
    num.str("");
    if (t.coefficient().imag() == 0.0)
      num << t.coefficient().real();
    else
      num << '(' << t.coefficient().real() << ',' << t.coefficient().imag()
          << ')';
    out << num.str() << ' ' << t.axes() << '\n';
  }
}

std::string to_text(const PauliOperatorSum& op) {
  std::ostringstream out;
  write_text(out, op);
  return out.str();
}

PauliOperatorSum parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string coeff_text, axes, line;
  std::optional<PauliOperatorSum> op;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    if (!(fields >> coeff_text)) continue;
    if (!(fields >> axes))
      fail(ErrorKind::kParse,
           "line " + std::to_string(line_no) + ": expected '<coeff> <axes>'");
    Complex c;
    std::istringstream cin(coeff_text);
    if (coeff_text.front() == '(') {
      cin >> c;
    } else {
      double re = 0.0;
      cin >> re;
      c = re;
    }
    if (cin.fail())
      fail(ErrorKind::kParse, "line " + std::to_string(line_no) +
                                  ": bad coefficient '" + coeff_text + "'");
    if (!op) op.emplace(axes.size());
    op->add(PauliTerm::from_string(axes, c));
  }
  if (!op) fail(ErrorKind::kParse, "no Pauli terms in input");
  return *op;
}

}  // namespace aqv
