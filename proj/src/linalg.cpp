// Copyright 2026 The telroute Authors
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

#include "telroute/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace telroute {

CMatrix::CMatrix(std::size_t n, std::initializer_list<cplx> row_major)
    : n_(n), data_(row_major) {
  if (data_.size() != n * n) {
    throw std::invalid_argument("CMatrix: initializer size mismatch");
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(const std::vector<double>& diag) {
  CMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMatrix CMatrix::outer(const std::vector<cplx>& ket) {
  CMatrix m(ket.size());
  for (std::size_t r = 0; r < ket.size(); ++r) {
    for (std::size_t c = 0; c < ket.size(); ++c) {
      m(r, c) = ket[r] * std::conj(ket[c]);
    }
  }
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

cplx CMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  if (other.n_ != n_) throw std::invalid_argument("CMatrix: dim mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("CMatrix: dim mismatch");
  const std::size_t n = a.n_;
  CMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx v = a(r, k);
      if (v == cplx{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += v * b(k, c);
    }
  }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  CMatrix out(na * nb);
  for (std::size_t ar = 0; ar < na; ++ar) {
    for (std::size_t ac = 0; ac < na; ++ac) {
      const cplx v = a(ar, ac);
      for (std::size_t br = 0; br < nb; ++br) {
        for (std::size_t bc = 0; bc < nb; ++bc) {
          out(ar * nb + br, ac * nb + bc) = v * b(br, bc);
        }
      }
    }
  }
  return out;
}

double hermiticity_defect(const CMatrix& m) {
  double worst = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = r; c < m.dim(); ++c) {
      worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
    }
  }
  return worst;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m, double tolerance) {
  const std::size_t n = m.dim();
  const std::size_t dim = 2 * n;
  // Real embedding of the Hermitian part; each eigenvalue appears twice.
  std::vector<double> a(dim * dim);
  auto at = [&](std::size_t r, std::size_t c) -> double& {
    return a[r * dim + c];
  };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const cplx h = 0.5 * (m(r, c) + std::conj(m(c, r)));
      at(r, c) = h.real();
      at(r + n, c + n) = h.real();
      at(r, c + n) = -h.imag();
      at(r + n, c) = h.imag();
    }
  }

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        if (r != c) s += at(r, c) * at(r, c);
      }
    }
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() > tolerance; ++sweep) {
    for (std::size_t p = 0; p + 1 < dim; ++p) {
      for (std::size_t q = p + 1; q < dim; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < dim; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < dim; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> doubled(dim);
  for (std::size_t i = 0; i < dim; ++i) doubled[i] = at(i, i);
  std::sort(doubled.begin(), doubled.end());
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) {
    eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  }
  return eig;
}

std::pair<double, double> hermitian_eigenvalues_2x2(double a, cplx b,
                                                    double d) {
  const double mean = 0.5 * (a + d);
  const double half_gap = 0.5 * (a - d);
  const double radius = std::sqrt(half_gap * half_gap + std::norm(b));
  return {mean - radius, mean + radius};
}

}  // namespace telroute
