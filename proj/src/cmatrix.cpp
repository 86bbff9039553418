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

#include "iafb/cmatrix.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "iafb/kernels.hpp"
#include "iafb/rng.hpp"

namespace iafb {

namespace {

using EigenMat = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic>;
using RowMajorMap = Eigen::Map<const Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

EigenMat to_eigen(const CMatrix& a) {
  return RowMajorMap(a.data().data(), static_cast<Eigen::Index>(a.rows()),
                     static_cast<Eigen::Index>(a.cols()));
}

CMatrix from_eigen(const EigenMat& m) {
  CMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = m(r, c);
    }
  }
  return out;
}

// Rotates every column so that its largest-magnitude entry is real positive.
void canonicalize_phases(CMatrix& v) {
  for (std::size_t c = 0; c < v.cols(); ++c) {
    std::size_t pivot = 0;
    double best = -1.0;
    for (std::size_t r = 0; r < v.rows(); ++r) {
      const double mag = std::abs(v(r, c));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best <= 0.0) {
      continue;
    }
    const cd phase = std::conj(v(pivot, c)) / best;
    for (std::size_t r = 0; r < v.rows(); ++r) {
      v(r, c) *= phase;
    }
    v(pivot, c) = cd(v(pivot, c).real(), 0.0);
  }
}

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
  }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cd(0.0, 0.0)) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cd> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("CMatrix: entry count does not match rows*cols");
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = 1.0;
  }
  return out;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<cd>> rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
  std::vector<cd> entries;
  entries.reserve(nr * nc);
  for (const auto& row : rows) {
    if (row.size() != nc) {
      throw std::invalid_argument("CMatrix::from_rows: ragged rows");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return CMatrix(nr, nc, std::move(entries));
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(c, r) = std::conj((*this)(r, c));
    }
  }
  return out;
}

CMatrix CMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw std::out_of_range("CMatrix::block: block exceeds matrix");
  }
  CMatrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>((r0 + r) * cols_ + c0), nc,
                out.data_.begin() + static_cast<std::ptrdiff_t>(r * nc));
  }
  return out;
}

void CMatrix::set_block(std::size_t r0, std::size_t c0, const CMatrix& src) {
  if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_) {
    throw std::out_of_range("CMatrix::set_block: block exceeds matrix");
  }
  for (std::size_t r = 0; r < src.rows(); ++r) {
    for (std::size_t c = 0; c < src.cols(); ++c) {
      (*this)(r0 + r, c0 + c) = src(r, c);
    }
  }
}

double CMatrix::squared_norm() const { return kernels::sum_abs2(data_); }

double CMatrix::frobenius_norm() const { return std::sqrt(squared_norm()); }

bool CMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const cd& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] += other.data_[i];
  }
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] -= other.data_[i];
  }
  return *this;
}

CMatrix& CMatrix::operator*=(cd scale) {
  for (auto& z : data_) {
    z *= scale;
  }
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(cd scale, CMatrix a) { return a *= scale; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("operator*: inner dimensions differ");
  }
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cd aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

CMatrix adjoint_times(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows()) {
    throw std::invalid_argument("adjoint_times: row counts differ");
  }
  CMatrix out(a.cols(), b.cols());
  for (std::size_t k = 0; k < a.rows(); ++k) {
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const cd aki = std::conj(a(k, i));
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aki * b(k, j);
      }
    }
  }
  return out;
}

CMatrix times_adjoint(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("times_adjoint: column counts differ");
  }
  CMatrix out(a.rows(), b.rows());
  const std::size_t n = a.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto a_row = a.data().subspan(i * n, n);
    for (std::size_t j = 0; j < b.rows(); ++j) {
      out(i, j) = kernels::dotc(b.data().subspan(j * n, n), a_row);
    }
  }
  return out;
}

void add_outer_gram(CMatrix& acc, const CMatrix& x) {
  if (acc.rows() != x.rows() || acc.cols() != x.rows()) {
    throw std::invalid_argument("add_outer_gram: accumulator shape mismatch");
  }
  const std::size_t n = x.cols();
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const auto xi = x.data().subspan(i * n, n);
    for (std::size_t j = 0; j <= i; ++j) {
      const cd v = kernels::dotc(x.data().subspan(j * n, n), xi);
      acc(i, j) += v;
      if (j != i) {
        acc(j, i) += std::conj(v);
      }
    }
  }
}

CMatrix hstack(std::span<const CMatrix> blocks) {
  if (blocks.empty()) {
    return {};
  }
  const std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) {
      throw std::invalid_argument("hstack: row counts differ");
    }
    cols += b.cols();
  }
  CMatrix out(rows, cols);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    out.set_block(0, c0, b);
    c0 += b.cols();
  }
  return out;
}

CMatrix zero_pad_rows(const CMatrix& a, std::size_t rows) {
  if (rows < a.rows()) {
    throw std::invalid_argument("zero_pad_rows: target smaller than source");
  }
  CMatrix out(rows, a.cols());
  out.set_block(0, 0, a);
  return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  }
  return worst;
}

double semi_unitary_error(const CMatrix& x) {
  return (adjoint_times(x, x) - CMatrix::identity(x.cols())).frobenius_norm();
}

double hermitian_asymmetry(const CMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("hermitian_asymmetry: matrix is not square");
  }
  return (a - a.adjoint()).frobenius_norm();
}

HermitianEig hermitian_eig(const CMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("hermitian_eig: matrix is not square (" + std::to_string(a.rows()) +
                                "x" + std::to_string(a.cols()) + ")");
  }
  const double asym = hermitian_asymmetry(a);
  if (asym > 1e-10 * a.frobenius_norm()) {
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian (asymmetry " +
                                std::to_string(asym) + ")");
  }
  if (a.rows() == 0) {
    return {};
  }
  const EigenMat m = to_eigen(a);
  const EigenMat herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<EigenMat> solver(herm);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver did not converge");
  }
  HermitianEig out;
  out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + a.rows());
  out.vectors = from_eigen(solver.eigenvectors());
  canonicalize_phases(out.vectors);
  return out;
}

CMatrix smallest_eigvecs(const CMatrix& a, std::size_t d) {
  if (d > a.rows()) {
    throw std::invalid_argument("smallest_eigvecs: requested " + std::to_string(d) +
                                " vectors from a " + std::to_string(a.rows()) + "-dim matrix");
  }
  return hermitian_eig(a).vectors.leading_cols(d);
}

CMatrix left_null_space(const CMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (n == 0) {
    return CMatrix::identity(m);
  }
  if (m == 0) {
    return {};
  }
  const EigenMat em = to_eigen(a);
  Eigen::JacobiSVD<EigenMat> svd(em, Eigen::ComputeFullU);
  const auto& sigma = svd.singularValues();
  const double tol = 1e-10 * (sigma.size() > 0 ? sigma(0) : 0.0) * static_cast<double>(std::max(m, n));
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > tol) {
      ++rank;
    }
  }
  CMatrix basis = from_eigen(svd.matrixU()).block(0, rank, m, m - rank);
  canonicalize_phases(basis);
  return basis;
}

std::vector<double> singular_values(const CMatrix& a) {
  if (a.empty()) {
    return {};
  }
  Eigen::JacobiSVD<EigenMat> svd(to_eigen(a));
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

CMatrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng) {
  CMatrix out(rows, cols);
  for (auto& z : out.data()) {
    z = rng.complex_normal();
  }
  return out;
}

CMatrix random_semi_unitary(std::size_t rows, std::size_t cols, Rng& rng) {
  if (rows < cols) {
    throw std::invalid_argument("random_semi_unitary: rows (" + std::to_string(rows) +
                                ") < cols (" + std::to_string(cols) + ")");
  }
  const EigenMat g = to_eigen(random_gaussian(rows, cols, rng));
  Eigen::HouseholderQR<EigenMat> qr(g);
  EigenMat q = qr.householderQ() * EigenMat::Identity(static_cast<Eigen::Index>(rows),
                                                      static_cast<Eigen::Index>(cols));
  const EigenMat& r = qr.matrixQR();
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(cols); ++i) {
    const cd rii = r(i, i);
    const double mag = std::abs(rii);
    if (mag > 0.0) {
      q.col(i) *= rii / mag;
    }
  }
  return from_eigen(q);
}

std::vector<cd> vec(const CMatrix& a) {
  std::vector<cd> out(a.size());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      out[c * a.rows() + r] = a(r, c);
    }
  }
  return out;
}

CMatrix unvec(std::span<const cd> v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) {
    throw std::invalid_argument("unvec: length does not match rows*cols");
  }
  CMatrix out(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) {
      out(r, c) = v[c * rows + r];
    }
  }
  return out;
}

NormalizedVector vec_normalize(const CMatrix& h) {
  const double norm = h.frobenius_norm();
  if (!(norm > 0.0)) {
    throw std::invalid_argument("vec_normalize: zero matrix has no direction");
  }
  NormalizedVector out{vec(h), norm};
  for (auto& z : out.direction) {
    z /= norm;
  }
  return out;
}

cd inner(std::span<const cd> a, std::span<const cd> b) { return kernels::dotc(a, b); }

double log2_det_hpd(const CMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("log2_det_hpd: matrix is not square");
  }
  Eigen::LLT<EigenMat> llt(to_eigen(a));
  if (llt.info() != Eigen::Success) {
    throw std::domain_error("log2_det_hpd: matrix is not positive definite");
  }
  double acc = 0.0;
  const EigenMat& l = llt.matrixLLT();
  for (Eigen::Index i = 0; i < l.rows(); ++i) {
    acc += 2.0 * std::log2(l(i, i).real());
  }
  return acc;
}

}  // namespace iafb
