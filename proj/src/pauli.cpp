// Copyright 2026 The gibbsforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gibbsforge/pauli.hpp"

#include <cmath>
#include <sstream>

namespace gibbsforge {

namespace {

int mod4(long e) { return static_cast<int>(((e % 4) + 4) % 4); }

std::complex<double> i_pow(int e) {
  switch (e & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

void check_qubit(int q, int n) {
  if (q < 0 || q >= n) {
    throw InputError("qubit " + std::to_string(q) + " out of range [0, " + std::to_string(n) + ")");
  }
}

PauliTerm key_term(const PauliKey& key) { return PauliTerm(key.first, key.second, 0); }

}  // namespace

PauliTerm::PauliTerm(BitMask x, BitMask z, int phase) : x_(std::move(x)), z_(std::move(z)), phase_(mod4(phase)) {
  if (x_.size() != z_.size()) throw InputError("PauliTerm x and z masks differ in length");
}

PauliTerm PauliTerm::identity(int n) { return PauliTerm(BitMask(n), BitMask(n), 0); }

PauliTerm PauliTerm::single(int n, int q, char pauli) {
  check_qubit(q, n);
  BitMask x(n), z(n);
  switch (pauli) {
    case 'I': break;
    case 'X': x.set(q); break;
    case 'Z': z.set(q); break;
    case 'Y':
      x.set(q);
      z.set(q);
      break;
    default: throw InputError(std::string("unknown Pauli '") + pauli + "'");
  }
  return PauliTerm(std::move(x), std::move(z), 0);
}

PauliTerm PauliTerm::parse(const std::string& text) {
  std::size_t pos = 0;
  int phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  const std::string body = text.substr(pos);
  const int n = static_cast<int>(body.size());
  BitMask x(n), z(n);
  for (int q = 0; q < n; ++q) {
    switch (body[q]) {
      case 'I':
      case '_': break;
      case 'X': x.set(q); break;
      case 'Z': z.set(q); break;
      case 'Y':
        x.set(q);
        z.set(q);
        break;
      default: throw InputError("bad Pauli label: " + text);
    }
  }
  return PauliTerm(std::move(x), std::move(z), phase);
}

std::complex<double> PauliTerm::phase_value() const { return i_pow(phase_); }

char PauliTerm::pauli_at(int q) const {
  const bool xb = x_.test(q), zb = z_.test(q);
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

bool PauliTerm::commutes_with(const PauliTerm& other) const {
  return ((overlap(x_, other.z_) + overlap(z_, other.x_)) & 1u) == 0;
}

std::string PauliTerm::str() const {
  static const char* kPrefix[] = {"+", "+i", "-", "-i"};
  std::string s = kPrefix[phase_];
  for (int q = 0; q < num_qubits(); ++q) s.push_back(pauli_at(q));
  return s;
}

PauliTerm multiply(const PauliTerm& a, const PauliTerm& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw InputError("multiply: size mismatch " + std::to_string(a.num_qubits()) + " vs " +
                     std::to_string(b.num_qubits()));
  }
  BitMask x = a.x() ^ b.x();
  BitMask z = a.z() ^ b.z();
  // i^{ea} i^{|xa za|} X^xa Z^za · i^{eb} i^{|xb zb|} X^xb Z^zb, then Z^za X^xb = (-1)^{|za xb|} X^xb Z^za.
  const long e = static_cast<long>(a.phase()) + b.phase() + overlap(a.x(), a.z()) + overlap(b.x(), b.z()) +
                 2 * static_cast<long>(overlap(a.z(), b.x())) - static_cast<long>(overlap(x, z));
  return PauliTerm(std::move(x), std::move(z), mod4(e));
}

PauliSum PauliSum::from_term(const PauliTerm& term, double coeff) {
  PauliSum s(term.num_qubits());
  s.add(term, coeff);
  return s;
}

PauliSum PauliSum::excited_projector(int n, int q) {
  check_qubit(q, n);
  PauliSum s(n);
  s.add(PauliTerm::identity(n), 0.5);
  s.add(PauliTerm::single(n, q, 'Z'), -0.5);
  return s;
}

PauliSum PauliSum::non_interacting(int n) {
  PauliSum s(n);
  for (int q = 0; q < n; ++q) s += excited_projector(n, q);
  return s;
}

double PauliSum::coefficient(const PauliKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? 0.0 : it->second;
}

double PauliSum::coefficient(const std::string& label) const {
  const PauliTerm t = PauliTerm::parse(label);
  if (t.num_qubits() != n_) throw InputError("label length does not match qubit count: " + label);
  const double sign = t.phase() == 2 ? -1.0 : 1.0;
  if (t.phase() & 1) throw InputError("label must be Hermitian: " + label);
  return sign * coefficient(PauliKey{t.x(), t.z()});
}

void PauliSum::add(const PauliKey& key, double coeff) {
  if (static_cast<int>(key.first.size()) != n_ || static_cast<int>(key.second.size()) != n_) {
    throw InputError("PauliSum::add: mask length does not match qubit count");
  }
  if (!std::isfinite(coeff)) throw InputError("PauliSum::add: non-finite coefficient");
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) it->second += coeff;
  if (std::abs(it->second) <= kPruneTol) terms_.erase(it);
}

void PauliSum::add(const PauliTerm& term, double coeff) {
  if (term.phase() & 1) throw InputError("PauliSum::add: anti-Hermitian term " + term.str());
  add(PauliKey{term.x(), term.z()}, term.phase() == 2 ? -coeff : coeff);
}

BitMask PauliSum::support() const {
  BitMask s(n_);
  for (const auto& [key, c] : terms_) {
    s |= key.first;
    s |= key.second;
  }
  return s;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_ != n_) throw InputError("PauliSum size mismatch");
  for (const auto& [key, c] : other.terms_) add(key, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  if (other.n_ != n_) throw InputError("PauliSum size mismatch");
  for (const auto& [key, c] : other.terms_) add(key, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(double s) {
  std::map<PauliKey, double> scaled;
  for (auto& [key, c] : terms_) {
    if (std::abs(c * s) > kPruneTol) scaled.emplace(key, c * s);
  }
  terms_ = std::move(scaled);
  return *this;
}

double PauliSum::max_abs_diff(const PauliSum& other) const {
  const PauliSum d = *this - other;
  double m = 0;
  for (const auto& [key, c] : d.terms_) m = std::max(m, std::abs(c));
  return m;
}

std::string PauliSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*" << key_term(key).str().substr(1);
  }
  return os.str();
}

void PauliAccumulator::add(const PauliTerm& term, std::complex<double> coeff) {
  if (term.num_qubits() != n_) throw InputError("PauliAccumulator: size mismatch");
  acc_[PauliKey{term.x(), term.z()}] += coeff * i_pow(term.phase());
}

PauliSum PauliAccumulator::finish() const {
  PauliSum out(n_);
  for (const auto& [key, c] : acc_) {
    if (std::abs(c.imag()) > kPruneTol) {
      throw InternalError("non-Hermitian residue " + std::to_string(c.imag()) + " on " + key_term(key).str());
    }
    if (std::abs(c.real()) > kPruneTol) out.add(key, c.real());
  }
  return out;
}

PauliSum product(const PauliSum& a, const PauliSum& b) {
  if (a.num_qubits() != b.num_qubits()) throw InputError("product: size mismatch");
  PauliAccumulator acc(a.num_qubits());
  for (const auto& [ka, ca] : a.terms()) {
    const PauliTerm ta = key_term(ka);
    for (const auto& [kb, cb] : b.terms()) acc.add(multiply(ta, key_term(kb)), ca * cb);
  }
  return acc.finish();
}

std::pair<double, double> eighth_turn_cos_sin(int k) {
  static const double r = std::sqrt(0.5);
  static const double kCos[8] = {1, r, 0, -r, -1, -r, 0, r};
  static const double kSin[8] = {0, r, 1, r, 0, -r, -1, -r};
  const int m = ((k % 8) + 8) % 8;
  return {kCos[m], kSin[m]};
}

PauliSum conjugate_by_phase_gate(const PauliSum& op, const std::vector<int>& support, int angle_k) {
  const int n = op.num_qubits();
  if (support.empty()) throw InputError("conjugate_by_phase_gate: empty support");
  BitMask zs(n);
  for (int q : support) {
    check_qubit(q, n);
    zs.set(q);
  }
  const PauliTerm gate(BitMask(n), zs, 0);
  // e^{iθZ_S} P e^{-iθZ_S} = cos(2θ) P + i sin(2θ) Z_S P when P anticommutes with Z_S.
  const auto [c2, s2] = eighth_turn_cos_sin(angle_k);
  PauliAccumulator acc(n);
  for (const auto& [key, c] : op.terms()) {
    const PauliTerm p = key_term(key);
    if (p.commutes_with(gate)) {
      acc.add(p, c);
      continue;
    }
    if (c2 != 0.0) acc.add(p, c * c2);
    if (s2 != 0.0) acc.add(multiply(gate, p), std::complex<double>(0.0, c * s2));
  }
  return acc.finish();
}

PauliSum conjugate_by_hadamard_layer(const PauliSum& op, const std::vector<int>& qubits) {
  const int n = op.num_qubits();
  for (int q : qubits) check_qubit(q, n);
  PauliSum out(n);
  for (const auto& [key, c] : op.terms()) {
    BitMask x = key.first, z = key.second;
    double coeff = c;
    for (int q : qubits) {
      const bool xb = x.test(q), zb = z.test(q);
      if (xb && zb) coeff = -coeff;
      x.set(q, zb);
      z.set(q, xb);
    }
    out.add(PauliKey{std::move(x), std::move(z)}, coeff);
  }
  return out;
}

PauliSum conjugate_by_cnot(const PauliSum& op, int control, int target) {
  const int n = op.num_qubits();
  check_qubit(control, n);
  check_qubit(target, n);
  if (control == target) throw InputError("conjugate_by_cnot: control equals target");
  PauliSum out(n);
  for (const auto& [key, c] : op.terms()) {
    BitMask x = key.first, z = key.second;
    const long before = static_cast<long>(overlap(x, z));
    // X_c -> X_c X_t, Z_t -> Z_c Z_t on the X^x Z^z form, which carries no sign.
    if (x.test(control)) x.flip(target);
    if (z.test(target)) z.flip(control);
    const int e = mod4(before - static_cast<long>(overlap(x, z)));
    if (e & 1) throw InternalError("conjugate_by_cnot: odd phase");
    out.add(PauliKey{std::move(x), std::move(z)}, e == 2 ? -c : c);
  }
  return out;
}

}  // namespace gibbsforge
