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

// Exact linear algebra over Q(i). Nothing here touches floating point.

#ifndef HLCERT_LINALG_HPP_
#define HLCERT_LINALG_HPP_

#include <optional>
#include <span>
#include <vector>

#include "hlcert/matrix.hpp"

namespace hlcert {

// Rank by fraction-free (Bareiss) elimination after clearing denominators.
int Rank(const Matrix& m);
inline int Rank(const HermitianMatrix& m) { return Rank(m.matrix()); }

// Bareiss determinant of a square matrix; 1 for the empty matrix.
GaussianRational Determinant(const Matrix& m);

// Coefficients c_1..c_n of det(t I - M) = t^n + c_1 t^(n-1) + ... + c_n, via
// Hessenberg reduction. Works for any square matrix.
std::vector<GaussianRational> CharacteristicPolynomial(const Matrix& m);

// (e_1, ..., e_n): the elementary symmetric functions of the eigenvalues, i.e.
// e_k is the sum of the k x k principal minors. Throws InternalError if any
// e_k comes out non-real.
std::vector<Rational> CharPolyCoefficients(const HermitianMatrix& m);

// True iff every e_k >= 0. For a Hermitian matrix the eigenvalues are real,
// and prod (t + lambda_i) with nonnegative coefficients has no positive root.
bool IsPsd(const HermitianMatrix& m);

// omega = L D L* with L unit lower triangular, when omega is positive
// definite (all pivots positive, no pivoting needed); nullopt otherwise.
struct LdlFactorization {
  Matrix l;
  std::vector<Rational> d;
};
std::optional<LdlFactorization> LdlPositiveDefinite(const HermitianMatrix& m);

// alpha^k ^ omega^(n-k) > 0 for all 1 <= k <= m. Evaluated in coordinates
// where omega is diagonal: with omega = L D L*, the sign of alpha^k ^
// omega^(n-k) is that of e_k(D^-1 L^-1 alpha L^-*).
// Throws std::invalid_argument unless omega is positive definite and
// 1 <= m <= n.
bool IsMPositive(const HermitianMatrix& alpha, const HermitianMatrix& omega,
                 int m);

// Basis of the right kernel via reduced row echelon form. Each vector has a 1
// in its free coordinate. Empty iff the map is injective.
std::vector<Vector> KernelBasis(const Matrix& m);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Sylvester inertia by conjugate-congruence diagonalization. When every
// remaining diagonal entry vanishes but the block does not, a 2x2 hyperbolic
// pair is split off, contributing (+1, -1).
Inertia HermitianSignature(const HermitianFormOnSpace& form);

// Gram matrix of the form restricted to span(basis):
// R(a, b) = F(basis[a], basis[b]).
Matrix RestrictGram(const HermitianFormOnSpace& form,
                    std::span<const Vector> basis);

enum class Definiteness { kPositiveDefinite, kNotPositiveDefinite };

// Leading principal minors of the restricted Gram matrix, all > 0.
// Throws std::invalid_argument when the basis is linearly dependent.
Definiteness DefinitenessOnSubspace(const HermitianFormOnSpace& form,
                                    std::span<const Vector> basis);

}  // namespace hlcert

#endif  // HLCERT_LINALG_HPP_
