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

#include "mbqr/state_vector.h"

#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace mbqr {

namespace {

constexpr Complex kI{0.0, 1.0};

Mat2 matmul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 dagger(const Mat2& a) {
  return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

double distance(const Mat2& a, const Mat2& b) {
  double d = 0;
  for (int i = 0; i < 4; ++i) {
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return d;
}

SignedPauli identify(const Mat2& m) {
  for (Pauli p : {Pauli::kX, Pauli::kY, Pauli::kZ}) {
    Mat2 ref = pauli_matrix(p);
    if (distance(m, ref) < 1e-9) {
      return {p, false};
    }
    for (auto& v : ref) {
      v = -v;
    }
    if (distance(m, ref) < 1e-9) {
      return {p, true};
    }
  }
  throw std::logic_error("matrix is not a signed Pauli");
}

LocalClifford tableau_of(const Mat2& u) {
  Mat2 ud = dagger(u);
  return LocalClifford(identify(matmul(matmul(u, pauli_matrix(Pauli::kX)), ud)),
                       identify(matmul(matmul(u, pauli_matrix(Pauli::kZ)), ud)));
}

}  // namespace

Mat2 pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::kI:
      return {1, 0, 0, 1};
    case Pauli::kX:
      return {0, 1, 1, 0};
    case Pauli::kY:
      return {0, -kI, kI, 0};
    case Pauli::kZ:
      return {1, 0, 0, -1};
  }
  return {};
}

const Mat2& clifford_matrix(const LocalClifford& c) {
  // Breadth-first search over words in H and S; the first word reaching each
  // tableau supplies its matrix.
  static const std::array<Mat2, 24> table = [] {
    const double r = 1.0 / std::sqrt(2.0);
    const Mat2 h{r, r, r, -r};
    const Mat2 s{1, 0, 0, kI};
    std::array<Mat2, 24> out;
    std::array<bool, 24> seen{};
    std::deque<Mat2> queue{Mat2{1, 0, 0, 1}};
    int found = 0;
    while (!queue.empty() && found < 24) {
      Mat2 u = queue.front();
      queue.pop_front();
      int idx = tableau_of(u).index();
      if (seen[idx]) {
        continue;
      }
      seen[idx] = true;
      out[idx] = u;
      ++found;
      queue.push_back(matmul(h, u));
      queue.push_back(matmul(s, u));
    }
    return out;
  }();
  return table[c.index()];
}

StateVector::StateVector(std::size_t n) : n_(n) {
  if (n > kMaxQubits) {
    throw std::invalid_argument("state vector limited to " + std::to_string(kMaxQubits) +
                                " qubits, got " + std::to_string(n));
  }
  amp_.assign(std::size_t{1} << n, 0.0);
  amp_[0] = 1.0;
}

StateVector::StateVector(std::size_t n, std::vector<Complex> amplitudes) : StateVector(n) {
  if (amplitudes.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("amplitude count does not match qubit count");
  }
  amp_ = std::move(amplitudes);
}

StateVector StateVector::plus_state(std::size_t n) {
  StateVector s(n);
  double a = std::pow(2.0, -0.5 * static_cast<double>(n));
  for (auto& v : s.amp_) {
    v = a;
  }
  return s;
}

void StateVector::check_qubit(std::size_t q) const {
  if (q >= n_) {
    throw std::out_of_range("qubit " + std::to_string(q) + " out of range");
  }
}

void StateVector::apply(std::size_t q, const Mat2& m) {
  check_qubit(q);
  std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    if (i & bit) {
      continue;
    }
    Complex a0 = amp_[i], a1 = amp_[i | bit];
    amp_[i] = m[0] * a0 + m[1] * a1;
    amp_[i | bit] = m[2] * a0 + m[3] * a1;
  }
}

void StateVector::apply_cz(std::size_t a, std::size_t b) {
  check_qubit(a);
  check_qubit(b);
  std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    if ((i & mask) == mask) {
      amp_[i] = -amp_[i];
    }
  }
}

void StateVector::apply_cnot(std::size_t c, std::size_t t) {
  check_qubit(c);
  check_qubit(t);
  std::size_t cb = std::size_t{1} << c, tb = std::size_t{1} << t;
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    if ((i & cb) && !(i & tb)) {
      std::swap(amp_[i], amp_[i | tb]);
    }
  }
}

void StateVector::apply(const PauliString& p) {
  if (p.size() != n_) {
    throw std::invalid_argument("Pauli string size does not match state");
  }
  for (std::size_t q = 0; q < n_; ++q) {
    if (p[q] != Pauli::kI) {
      apply(q, pauli_matrix(p[q]));
    }
  }
  Complex phase = std::pow(kI, p.phase_power());
  for (auto& v : amp_) {
    v *= phase;
  }
}

double StateVector::norm_squared() const {
  double s = 0;
  for (const auto& v : amp_) {
    s += std::norm(v);
  }
  return s;
}

double StateVector::normalize() {
  double nrm = std::sqrt(norm_squared());
  if (nrm > 0) {
    for (auto& v : amp_) {
      v /= nrm;
    }
  }
  return nrm;
}

Complex StateVector::inner(const StateVector& other) const {
  if (other.n_ != n_) {
    throw std::invalid_argument("state size mismatch");
  }
  Complex s = 0;
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    s += std::conj(amp_[i]) * other.amp_[i];
  }
  return s;
}

Complex StateVector::expectation(const PauliString& p) const {
  StateVector t = *this;
  t.apply(p);
  return inner(t);
}

StateVector StateVector::contract(std::size_t q, const std::array<Complex, 2>& v) const {
  check_qubit(q);
  StateVector out(n_ - 1);
  std::size_t low = (std::size_t{1} << q) - 1;
  for (std::size_t j = 0; j < out.amp_.size(); ++j) {
    std::size_t i0 = (j & low) | ((j & ~low) << 1);
    std::size_t i1 = i0 | (std::size_t{1} << q);
    out.amp_[j] = std::conj(v[0]) * amp_[i0] + std::conj(v[1]) * amp_[i1];
  }
  return out;
}

StateVector StateVector::contract(std::size_t q, int bit) const {
  std::array<Complex, 2> v{bit == 0 ? 1.0 : 0.0, bit == 0 ? 0.0 : 1.0};
  return contract(q, v);
}

std::array<Complex, 2> pauli_eigenvector(Pauli p, int sign) {
  const double r = 1.0 / std::sqrt(2.0);
  bool plus = sign > 0;
  switch (p) {
    case Pauli::kX:
      return {r, plus ? r : -r};
    case Pauli::kY:
      return {r, plus ? kI * r : -kI * r};
    case Pauli::kZ:
      return plus ? std::array<Complex, 2>{1, 0} : std::array<Complex, 2>{0, 1};
    case Pauli::kI:
      break;
  }
  throw std::invalid_argument("eigenvector requested for identity");
}

double deviation_up_to_phase(const StateVector& a, const StateVector& b) {
  if (a.qubit_count() != b.qubit_count()) {
    return std::numeric_limits<double>::infinity();
  }
  StateVector x = a, y = b;
  if (x.normalize() == 0 || y.normalize() == 0) {
    return std::numeric_limits<double>::infinity();
  }
  std::size_t best = 0;
  for (std::size_t i = 0; i < x.amplitudes().size(); ++i) {
    if (std::abs(x[i]) > std::abs(x[best])) {
      best = i;
    }
  }
  if (std::abs(y[best]) < 1e-14) {
    return std::numeric_limits<double>::infinity();
  }
  Complex phase = x[best] / y[best];
  phase /= std::abs(phase);
  double dev = 0;
  for (std::size_t i = 0; i < x.amplitudes().size(); ++i) {
    dev = std::max(dev, std::abs(x[i] - phase * y[i]));
  }
  return dev;
}

}  // namespace mbqr
