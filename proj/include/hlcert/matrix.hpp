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

#ifndef HLCERT_MATRIX_HPP_
#define HLCERT_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hlcert/scalar.hpp"

namespace hlcert {

using Vector = std::vector<GaussianRational>;

// Dense row-major matrix over the Gaussian rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static Matrix Identity(std::size_t n);
  static Matrix Diagonal(std::span<const GaussianRational> diag);
  // Columns of the result are the given vectors.
  static Matrix FromColumns(std::size_t rows, std::span<const Vector> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool IsSquare() const { return rows_ == cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector Column(std::size_t c) const;
  // Principal submatrix on the given (sorted) index set.
  Matrix Principal(std::span<const std::size_t> idx) const;

  Matrix ConjugateTranspose() const;
  Matrix Transpose() const;
  bool IsZero() const;
  bool IsHermitian() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const GaussianRational& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const GaussianRational& s) {
    return a *= s;
  }
  friend Matrix operator*(const GaussianRational& s, Matrix a) {
    return a *= s;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, std::span<const GaussianRational> x);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

// An n x n Hermitian matrix; the coordinate form of a real (1,1)-form
// i * sum a_jk dz_j ^ dzbar_k. Hermitian symmetry is checked on construction.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Matrix m);
  HermitianMatrix(
      std::initializer_list<std::initializer_list<GaussianRational>> rows)
      : HermitianMatrix(Matrix(rows)) {}

  static HermitianMatrix Zero(std::size_t n) {
    return HermitianMatrix(Matrix(n, n));
  }
  static HermitianMatrix Identity(std::size_t n) {
    return HermitianMatrix(Matrix::Identity(n));
  }
  static HermitianMatrix Diagonal(std::span<const Rational> diag);
  static HermitianMatrix Diagonal(std::initializer_list<long> diag);

  std::size_t n() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const {
    return m_(r, c);
  }

  HermitianMatrix& operator+=(const HermitianMatrix& o);
  friend HermitianMatrix operator+(HermitianMatrix a,
                                   const HermitianMatrix& b) {
    return a += b;
  }
  friend HermitianMatrix operator-(const HermitianMatrix& a,
                                   const HermitianMatrix& b) {
    return HermitianMatrix(a.m_ - b.m_);
  }
  friend HermitianMatrix operator*(const Rational& s, const HermitianMatrix& a) {
    return HermitianMatrix(GaussianRational(s) * a.m_);
  }
  friend bool operator==(const HermitianMatrix& a, const HermitianMatrix& b) {
    return a.m_ == b.m_;
  }

  // T* A T, which is again Hermitian.
  HermitianMatrix Congruence(const Matrix& t) const;

 private:
  Matrix m_;
};

// B B* for any rectangular B.
HermitianMatrix GramOf(const Matrix& b);

// Sum of the matrices selected by `mask` (bit i selects mats[i]).
HermitianMatrix SubsetSum(std::span<const HermitianMatrix> mats,
                          std::size_t n, unsigned long mask);

// A Hermitian sesquilinear form on a dim-dimensional space, given by its Gram
// matrix: F(x, y) = sum_ab x_a conj(y_b) gram(a, b).
struct HermitianFormOnSpace {
  explicit HermitianFormOnSpace(Matrix g);
  std::size_t dim() const { return gram.rows(); }
  Matrix gram;
};

}  // namespace hlcert

#endif  // HLCERT_MATRIX_HPP_
