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

#include "mbqr/dense.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace mbqr {

DensityMatrix pure_density(const StateVector& s) {
  Eigen::VectorXcd v(s.amplitudes().size());
  for (std::size_t i = 0; i < s.amplitudes().size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = s[i];
  }
  return v * v.adjoint();
}

DensityMatrix tensor(const DensityMatrix& low, const DensityMatrix& high) {
  const Eigen::Index dl = low.rows(), dh = high.rows();
  DensityMatrix out(dl * dh, dl * dh);
  for (Eigen::Index hr = 0; hr < dh; ++hr) {
    for (Eigen::Index hc = 0; hc < dh; ++hc) {
      out.block(hr * dl, hc * dl, dl, dl) = high(hr, hc) * low;
    }
  }
  return out;
}

std::size_t qubit_count(const DensityMatrix& rho) {
  auto d = static_cast<std::size_t>(rho.rows());
  if (d == 0 || (d & (d - 1)) != 0 || rho.cols() != rho.rows()) {
    throw std::invalid_argument("density matrix dimension is not a power of two");
  }
  return static_cast<std::size_t>(std::countr_zero(d));
}

namespace {

void check(const DensityMatrix& rho, std::size_t q) {
  if (q >= qubit_count(rho)) {
    throw std::out_of_range("qubit " + std::to_string(q) + " out of range");
  }
}

}  // namespace

void apply_unitary(DensityMatrix* rho, std::size_t q, const Mat2& u) {
  check(*rho, q);
  const Eigen::Index d = rho->rows(), bit = Eigen::Index{1} << q;
  DensityMatrix& r = *rho;
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index i = 0; i < d; ++i) {
      if (i & bit) continue;
      Complex a0 = r(i, c), a1 = r(i | bit, c);
      r(i, c) = u[0] * a0 + u[1] * a1;
      r(i | bit, c) = u[2] * a0 + u[3] * a1;
    }
  }
  for (Eigen::Index j = 0; j < d; ++j) {
    if (j & bit) continue;
    for (Eigen::Index row = 0; row < d; ++row) {
      Complex a0 = r(row, j), a1 = r(row, j | bit);
      r(row, j) = a0 * std::conj(u[0]) + a1 * std::conj(u[1]);
      r(row, j | bit) = a0 * std::conj(u[2]) + a1 * std::conj(u[3]);
    }
  }
}

void apply_cnot(DensityMatrix* rho, std::size_t c, std::size_t t) {
  check(*rho, c);
  check(*rho, t);
  const Eigen::Index d = rho->rows(), cb = Eigen::Index{1} << c, tb = Eigen::Index{1} << t;
  auto perm = [&](Eigen::Index i) { return (i & cb) ? (i ^ tb) : i; };
  DensityMatrix out(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      out(perm(i), perm(j)) = (*rho)(i, j);
    }
  }
  *rho = std::move(out);
}

void apply_zz(DensityMatrix* rho, std::size_t a, std::size_t b, int sign) {
  check(*rho, a);
  check(*rho, b);
  const Eigen::Index d = rho->rows();
  const Complex even = std::exp(Complex(0, -sign * M_PI / 4));
  auto phase = [&](Eigen::Index i) {
    bool odd = ((i >> a) & 1) != ((i >> b) & 1);
    return odd ? std::conj(even) : even;
  };
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) {
      (*rho)(i, j) *= phase(i) * std::conj(phase(j));
    }
  }
}

void apply_lwn(DensityMatrix* rho, std::size_t q, double p) {
  check(*rho, q);
  if (!(p >= 0 && p <= 1)) {
    throw std::invalid_argument("noise parameter p must lie in [0, 1]");
  }
  const Eigen::Index d = rho->rows(), bit = Eigen::Index{1} << q;
  DensityMatrix& r = *rho;
  for (Eigen::Index j = 0; j < d; ++j) {
    if (j & bit) continue;
    for (Eigen::Index i = 0; i < d; ++i) {
      if (i & bit) continue;
      // Reduced element of tr_q rho, then spread as I/2 on q.
      Complex reduced = r(i, j) + r(i | bit, j | bit);
      Complex mixed = 0.5 * (1.0 - p) * reduced;
      r(i, j) = p * r(i, j) + mixed;
      r(i | bit, j | bit) = p * r(i | bit, j | bit) + mixed;
      r(i | bit, j) *= p;
      r(i, j | bit) *= p;
    }
  }
}

void apply_pauli_channel(DensityMatrix* rho, std::size_t q, const std::array<double, 4>& probs) {
  check(*rho, q);
  // sigma rho sigma for a Pauli on q permutes rows and columns by its X part
  // and multiplies by +-1 from its Z part.
  const Eigen::Index d = rho->rows(), bit = Eigen::Index{1} << q;
  DensityMatrix out = DensityMatrix::Zero(d, d);
  for (int label = 0; label < 4; ++label) {
    if (probs[label] == 0) continue;
    const Eigen::Index flip = (label & 2) ? bit : 0;
    const bool zpart = label & 1;
    for (Eigen::Index j = 0; j < d; ++j) {
      for (Eigen::Index i = 0; i < d; ++i) {
        bool negative = zpart && (((i ^ j) & bit) != 0);
        double f = negative ? -probs[label] : probs[label];
        out(i, j) += f * (*rho)(i ^ flip, j ^ flip);
      }
    }
  }
  *rho = std::move(out);
}

DensityMatrix project_out(const DensityMatrix& rho, std::size_t q, int bit) {
  check(rho, q);
  const Eigen::Index d = rho.rows() / 2;
  const Eigen::Index low = (Eigen::Index{1} << q) - 1;
  auto expand = [&](Eigen::Index j) {
    return (j & low) | ((j & ~low) << 1) | (bit ? (Eigen::Index{1} << q) : 0);
  };
  DensityMatrix out(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      out(i, j) = rho(expand(i), expand(j));
    }
  }
  return out;
}

std::array<Complex, 4> bell_vector(int label) {
  const double r = 1.0 / std::sqrt(2.0);
  Mat2 s = pauli_matrix(label_pauli(label));
  // (s (x) I) sum_x |x>|x> / sqrt 2: amplitude at (a, b) is s[a][b] / sqrt 2.
  std::array<Complex, 4> v{};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      v[a + 2 * b] = r * s[2 * a + b];
    }
  }
  return v;
}

DensityMatrix bell_density(const BellDiagonalState& s) {
  DensityMatrix rho = DensityMatrix::Zero(4, 4);
  for (int label = 0; label < 4; ++label) {
    auto v = bell_vector(label);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        rho(i, j) += s.w[label] * v[i] * std::conj(v[j]);
      }
    }
  }
  return rho;
}

namespace {

Complex bell_element(const DensityMatrix& rho2, int a, int b) {
  auto va = bell_vector(a), vb = bell_vector(b);
  Complex s = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      s += std::conj(va[i]) * rho2(i, j) * vb[j];
    }
  }
  return s;
}

}  // namespace

std::array<double, 4> bell_weights(const DensityMatrix& rho2) {
  if (rho2.rows() != 4) {
    throw std::invalid_argument("bell_weights needs a two-qubit state");
  }
  std::array<double, 4> w{};
  for (int label = 0; label < 4; ++label) {
    w[label] = bell_element(rho2, label, label).real();
  }
  return w;
}

double bell_offdiagonal(const DensityMatrix& rho2) {
  double m = 0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      if (a != b) m = std::max(m, std::abs(bell_element(rho2, a, b)));
    }
  }
  return m;
}

}  // namespace mbqr
