// Copyright 2026 The Authors.
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

#include "hlcert/matrix.hpp"

#include <stdexcept>

namespace hlcert {

Matrix::Matrix(
    std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::Identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1L;
  return m;
}

Matrix Matrix::Diagonal(std::span<const GaussianRational> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::FromColumns(std::size_t rows, std::span<const Vector> cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::Column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::Principal(std::span<const std::size_t> idx) const {
  Matrix m(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) {
      m(a, b) = (*this)(idx[a], idx[b]);
    }
  }
  return m;
}

Matrix Matrix::ConjugateTranspose() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c).Conj();
  }
  return m;
}

Matrix Matrix::Transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  }
  return m;
}

bool Matrix::IsZero() const {
  for (const auto& x : data_) {
    if (!x.IsZero()) return false;
  }
  return true;
}

bool Matrix::IsHermitian() const {
  if (!IsSquare()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r).Conj()) return false;
    }
  }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const GaussianRational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(r, k);
      if (x.IsZero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (!b(k, c).IsZero()) m(r, c) += x * b(k, c);
      }
    }
  }
  return m;
}

Vector operator*(const Matrix& a, std::span<const GaussianRational> x) {
  if (a.cols_ != x.size()) throw std::invalid_argument("shape mismatch");
  Vector y(a.rows_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) {
      if (!x[c].IsZero() && !a(r, c).IsZero()) y[r] += a(r, c) * x[c];
    }
  }
  return y;
}

HermitianMatrix::HermitianMatrix(Matrix m) : m_(std::move(m)) {
  if (!m_.IsSquare() || m_.rows() == 0) {
    throw std::invalid_argument("Hermitian matrix must be square and nonempty");
  }
  if (!m_.IsHermitian()) {
    throw std::invalid_argument("matrix is not Hermitian");
  }
}

HermitianMatrix HermitianMatrix::Diagonal(std::span<const Rational> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::Diagonal(std::initializer_list<long> diag) {
  Matrix m(diag.size(), diag.size());
  std::size_t i = 0;
  for (long d : diag) {
    m(i, i) = d;
    ++i;
  }
  return HermitianMatrix(std::move(m));
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
  m_ += o.m_;
  return *this;
}

HermitianMatrix HermitianMatrix::Congruence(const Matrix& t) const {
  return HermitianMatrix(t.ConjugateTranspose() * m_ * t);
}

HermitianMatrix GramOf(const Matrix& b) {
  return HermitianMatrix(b * b.ConjugateTranspose());
}

HermitianMatrix SubsetSum(std::span<const HermitianMatrix> mats,
                          std::size_t n, unsigned long mask) {
  Matrix sum(n, n);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (mask >> i & 1UL) sum += mats[i].matrix();
  }
  return HermitianMatrix(std::move(sum));
}

HermitianFormOnSpace::HermitianFormOnSpace(Matrix g) : gram(std::move(g)) {
  if (!gram.IsHermitian()) {
    throw std::invalid_argument("Gram matrix is not Hermitian");
  }
}

}  // namespace hlcert
