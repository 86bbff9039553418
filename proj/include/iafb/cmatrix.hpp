// SPDX-License-Identifier: Apache-2.0
//
// iafb: interference alignment with partial CSI feedback
// Copyright (C) 2026 The iafb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace iafb {

using cd = std::complex<double>;

class Rng;

/// Dense complex matrix with row-major storage.
///
/// A default-constructed matrix is 0x0. Matrices with one zero extent are
/// valid (e.g. an m x 0 null-space basis).
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cd> entries);

  static CMatrix identity(std::size_t n);
  static CMatrix from_rows(std::initializer_list<std::initializer_list<cd>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  cd& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cd& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<cd> data() noexcept { return data_; }
  std::span<const cd> data() const noexcept { return data_; }

  CMatrix adjoint() const;
  /// Copy of the nr x nc block whose top-left corner is (r0, c0).
  CMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  CMatrix leading_cols(std::size_t n) const { return block(0, 0, rows_, n); }
  void set_block(std::size_t r0, std::size_t c0, const CMatrix& src);

  double squared_norm() const;
  double frobenius_norm() const;
  bool all_finite() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(cd scale);

  bool operator==(const CMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cd> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(cd scale, CMatrix a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);

/// a^H * b without forming the adjoint.
CMatrix adjoint_times(const CMatrix& a, const CMatrix& b);
/// a * b^H without forming the adjoint.
CMatrix times_adjoint(const CMatrix& a, const CMatrix& b);
/// Accumulates x * x^H into acc (acc must be x.rows() square).
void add_outer_gram(CMatrix& acc, const CMatrix& x);

CMatrix hstack(std::span<const CMatrix> blocks);
/// Pads with zero rows at the bottom up to `rows`.
CMatrix zero_pad_rows(const CMatrix& a, std::size_t rows);

/// Largest absolute entrywise difference; shapes must match.
double max_abs_diff(const CMatrix& a, const CMatrix& b);
/// Frobenius norm of X^H X - I.
double semi_unitary_error(const CMatrix& x);
/// Frobenius norm of a - a^H.
double hermitian_asymmetry(const CMatrix& a);

struct HermitianEig {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // unitary, column i pairs with values[i]
};

/// Eigendecomposition of a Hermitian matrix. Each eigenvector column is
/// rotated so its largest-magnitude entry is real and positive.
HermitianEig hermitian_eig(const CMatrix& a);

/// The d eigenvectors of the d smallest eigenvalues, ascending.
CMatrix smallest_eigvecs(const CMatrix& a, std::size_t d);

/// Orthonormal basis of {u : u^H a = 0}. Numerical rank uses the threshold
/// 1e-10 * sigma_max * max(m, n). Returns m x 0 when a has full row rank.
CMatrix left_null_space(const CMatrix& a);

/// Singular values in descending order.
std::vector<double> singular_values(const CMatrix& a);

/// i.i.d. CN(0, 1) entries.
CMatrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-distributed semi-unitary matrix (QR of a Gaussian draw with the
/// R-diagonal phases removed).
CMatrix random_semi_unitary(std::size_t rows, std::size_t cols, Rng& rng);

/// Column-stacked vectorisation.
std::vector<cd> vec(const CMatrix& a);
CMatrix unvec(std::span<const cd> v, std::size_t rows, std::size_t cols);

struct NormalizedVector {
  std::vector<cd> direction;
  double norm = 0.0;
};

/// vec(h) / ||h||_F together with ||h||_F. Throws on a zero matrix.
NormalizedVector vec_normalize(const CMatrix& h);

/// sum conj(a_i) b_i
cd inner(std::span<const cd> a, std::span<const cd> b);

/// log2 det(a) for Hermitian positive definite a (Cholesky).
double log2_det_hpd(const CMatrix& a);

}  // namespace iafb
