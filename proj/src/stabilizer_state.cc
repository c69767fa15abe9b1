// Copyright 2026 The mbqr Authors
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

#include "mbqr/stabilizer_state.h"

#include <random>
#include <stdexcept>

namespace mbqr {

namespace {

// Symplectic row: x bits then z bits.
std::vector<bool> row_bits(const PauliString& p) {
  std::size_t n = p.size();
  std::vector<bool> r(2 * n);
  for (std::size_t q = 0; q < n; ++q) {
    r[q] = x_bit(p[q]);
    r[n + q] = z_bit(p[q]);
  }
  return r;
}

// Rank of a set of Pauli strings over GF(2), ignoring phases.
std::size_t symplectic_rank(const std::vector<PauliString>& ps, std::size_t n) {
  std::vector<std::vector<bool>> rows;
  for (const auto& p : ps) {
    rows.push_back(row_bits(p));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 2 * n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && !rows[piv][col]) {
      ++piv;
    }
    if (piv == rows.size()) {
      continue;
    }
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][col]) {
        for (std::size_t c = 0; c < 2 * n; ++c) {
          rows[r][c] = rows[r][c] != rows[rank][c];
        }
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

void conjugate_cnot(std::size_t c, std::size_t t, PauliString* p) {
  // Letter = i^(xz) X^x Z^z. X_c -> X_c X_t and Z_t -> Z_c Z_t; the factors
  // on each qubit stay in X-then-Z order so only the letter phases change.
  bool xc = x_bit((*p)[c]), zc = z_bit((*p)[c]);
  bool xt = x_bit((*p)[t]), zt = z_bit((*p)[t]);
  bool nzc = zc != zt, nxt = xt != xc;
  int k = p->phase_power() + (xc && zc) + (xt && zt) - (xc && nzc) - (nxt && zt);
  p->set(c, pauli_from_bits(xc, nzc));
  p->set(t, pauli_from_bits(nxt, zt));
  p->set_phase_power(k);
}

void conjugate_cz(std::size_t a, std::size_t b, PauliString* p) {
  static const LocalClifford h = LocalClifford::from_name("H");
  conjugate_in_place(h, b, p);
  conjugate_cnot(a, b, p);
  conjugate_in_place(h, b, p);
}

void conjugate_zz(std::size_t a, std::size_t b, int sign, PauliString* p) {
  // P -> P (i sign Z_a Z_b) when P anticommutes with Z_a Z_b.
  if (x_bit((*p)[a]) != x_bit((*p)[b])) {
    PauliString zz(p->size());
    zz.set(a, Pauli::kZ);
    zz.set(b, Pauli::kZ);
    zz.set_phase_power(sign > 0 ? 1 : 3);
    *p *= zz;
  }
}

StabilizerState::StabilizerState(std::size_t n) : n_(n) {
  for (std::size_t q = 0; q < n; ++q) {
    gens_.push_back(PauliString::single(n, q, Pauli::kZ));
  }
}

StabilizerState::StabilizerState(std::vector<PauliString> generators)
    : n_(generators.empty() ? 0 : generators[0].size()), gens_(std::move(generators)) {
  if (gens_.size() != n_) {
    throw std::invalid_argument("need exactly one generator per qubit, got " +
                                std::to_string(gens_.size()) + " for " + std::to_string(n_) +
                                " qubits");
  }
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].size() != n_) {
      throw std::invalid_argument("generator length mismatch");
    }
    if (!gens_[i].is_hermitian()) {
      throw std::invalid_argument("generator " + gens_[i].str() + " is not Hermitian");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!gens_[i].commutes_with(gens_[j])) {
        throw std::invalid_argument("generators " + gens_[j].str() + " and " + gens_[i].str() +
                                    " anticommute");
      }
    }
  }
  if (symplectic_rank(gens_, n_) != n_) {
    throw std::invalid_argument("generators are not independent (rank-deficient tableau)");
  }
}

void StabilizerState::check_qubit(std::size_t q) const {
  if (q >= n_) {
    throw std::out_of_range("qubit " + std::to_string(q) + " out of range");
  }
}

void StabilizerState::apply(std::size_t q, const LocalClifford& c) {
  check_qubit(q);
  for (auto& g : gens_) {
    conjugate_in_place(c, q, &g);
  }
}

void StabilizerState::apply_cz(std::size_t a, std::size_t b) {
  check_qubit(a);
  check_qubit(b);
  for (auto& g : gens_) {
    conjugate_cz(a, b, &g);
  }
}

void StabilizerState::apply_cnot(std::size_t c, std::size_t t) {
  check_qubit(c);
  check_qubit(t);
  for (auto& g : gens_) {
    conjugate_cnot(c, t, &g);
  }
}

void StabilizerState::apply_zz_rotation(std::size_t a, std::size_t b, int sign) {
  check_qubit(a);
  check_qubit(b);
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("ZZ rotation sign must be +1 or -1");
  }
  for (auto& g : gens_) {
    conjugate_zz(a, b, sign, &g);
  }
}

void StabilizerState::apply_pauli(const PauliString& p) {
  for (auto& g : gens_) {
    if (!g.commutes_with(p)) {
      g.set_phase_power(g.phase_power() + 2);
    }
  }
}

double StabilizerState::postselect_z(std::size_t q, int bit) {
  check_qubit(q);
  PauliString z = PauliString::single(n_, q, Pauli::kZ);
  if (bit) {
    z.set_phase_power(2);
  }
  std::size_t anti = gens_.size();
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (x_bit(gens_[i][q])) {
      anti = i;
      break;
    }
  }
  if (anti == gens_.size()) {
    auto k = group_phase(z);
    return (k && *k == z.phase_power()) ? 1.0 : 0.0;
  }
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i != anti && x_bit(gens_[i][q])) {
      gens_[i] *= gens_[anti];
    }
  }
  gens_[anti] = z;
  return 0.5;
}

void StabilizerState::remove_qubit(std::size_t q) {
  check_qubit(q);
  if (!group_phase(PauliString::single(n_, q, Pauli::kZ))) {
    throw std::invalid_argument("qubit " + std::to_string(q) + " is not in a Z eigenstate");
  }
  std::size_t piv = gens_.size();
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i][q] != Pauli::kI) {
      piv = i;
      break;
    }
  }
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i != piv && gens_[i][q] != Pauli::kI) {
      gens_[i] *= gens_[piv];
    }
  }
  std::vector<PauliString> out;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i == piv) {
      continue;
    }
    std::vector<Pauli> letters;
    for (std::size_t r = 0; r < n_; ++r) {
      if (r != q) {
        letters.push_back(gens_[i][r]);
      }
    }
    out.emplace_back(std::move(letters), gens_[i].phase_power());
  }
  --n_;
  gens_ = std::move(out);
}

void StabilizerState::permute(const std::vector<std::size_t>& order) {
  if (order.size() != n_) {
    throw std::invalid_argument("permutation size mismatch");
  }
  std::vector<bool> used(n_);
  for (std::size_t v : order) {
    if (v >= n_ || used[v]) {
      throw std::invalid_argument("not a permutation");
    }
    used[v] = true;
  }
  for (auto& g : gens_) {
    std::vector<Pauli> letters(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      letters[i] = g[order[i]];
    }
    g = PauliString(std::move(letters), g.phase_power());
  }
}

std::optional<int> StabilizerState::group_phase(const PauliString& p) const {
  if (p.size() != n_) {
    throw std::invalid_argument("Pauli string size does not match state");
  }
  // Gaussian elimination on [generators | target], tracking the products.
  std::vector<PauliString> rows = gens_;
  PauliString target = p;
  target.set_phase_power(0);
  PauliString acc(n_);
  std::vector<bool> used(rows.size());
  for (std::size_t col = 0; col < 2 * n_; ++col) {
    auto has = [&](const PauliString& s) {
      return col < n_ ? x_bit(s[col]) : z_bit(s[col - n_]);
    };
    std::size_t piv = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!used[r] && has(rows[r])) {
        piv = r;
        break;
      }
    }
    if (piv == rows.size()) {
      continue;
    }
    used[piv] = true;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != piv && has(rows[r])) {
        rows[r] *= rows[piv];
      }
    }
    if (has(target)) {
      target *= rows[piv];
      acc *= rows[piv];
    }
  }
  if (!target.is_identity()) {
    return std::nullopt;
  }
  // acc is a group element with the same letters as p.
  return acc.phase_power();
}

bool StabilizerState::contains(const PauliString& p) const {
  auto k = group_phase(p);
  return k && *k == p.phase_power();
}

bool StabilizerState::same_state(const StabilizerState& other) const {
  if (other.n_ != n_) {
    return false;
  }
  for (const auto& g : other.gens_) {
    if (!contains(g)) {
      return false;
    }
  }
  return true;
}

StateVector StabilizerState::to_statevector() const {
  if (n_ > StateVector::kMaxQubits) {
    throw std::invalid_argument("state vector limited to 12 qubits");
  }
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> gauss;
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Complex> amps(std::size_t{1} << n_);
    for (auto& a : amps) {
      a = Complex(gauss(rng), gauss(rng));
    }
    StateVector s(n_, std::move(amps));
    for (const auto& g : gens_) {
      StateVector t = s;
      t.apply(g);
      auto& sa = s.mutable_amplitudes();
      for (std::size_t i = 0; i < sa.size(); ++i) {
        sa[i] = 0.5 * (sa[i] + t[i]);
      }
    }
    if (s.normalize() > 1e-6) {
      return s;
    }
  }
  throw std::logic_error("failed to project onto stabilizer state");
}

}  // namespace mbqr
