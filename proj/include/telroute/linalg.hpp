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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace telroute {

using cplx = std::complex<double>;

/// Small dense row-major complex matrix. Sized for qubit work (dimension
/// up to 16), not for performance at scale.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t n) : n_(n), data_(n * n) {}
  CMatrix(std::size_t n, std::initializer_list<cplx> row_major);

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(const std::vector<double>& diag);
  static CMatrix outer(const std::vector<cplx>& ket);  // |v><v|

  std::size_t dim() const noexcept { return n_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * n_ + c];
  }

  CMatrix adjoint() const;
  cplx trace() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator*=(cplx scale);

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }

 private:
  std::size_t n_ = 0;
  std::vector<cplx> data_;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Largest |m(i,j) - conj(m(j,i))|.
double hermiticity_defect(const CMatrix& m);

/// Eigenvalues of a Hermitian matrix in ascending order. Only the Hermitian
/// part (m + m^dagger)/2 is used. Cyclic Jacobi on the real symmetric
/// embedding [[Re, -Im], [Im, Re]], iterated until the off-diagonal norm
/// drops below `tolerance`.
std::vector<double> hermitian_eigenvalues(const CMatrix& m,
                                          double tolerance = 1e-13);

/// Eigenvalues of the 2x2 Hermitian block [[a, b], [conj(b), d]], ascending.
std::pair<double, double> hermitian_eigenvalues_2x2(double a, cplx b,
                                                    double d);

}  // namespace telroute
