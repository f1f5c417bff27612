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

#ifndef HLCERT_MIXED_DISCRIMINANT_HPP_
#define HLCERT_MIXED_DISCRIMINANT_HPP_

#include <optional>
#include <span>
#include <vector>

#include "hlcert/matrix.hpp"

namespace hlcert {

// Mixed discriminant D(A_1, ..., A_n) of n Hermitian n x n matrices, by
// inclusion-exclusion over the 2^n subset sums:
//   D = (1/n!) sum_S (-1)^(n-|S|) det(sum_{i in S} A_i).
// Throws std::invalid_argument on arity or size mismatch.
Rational MixedDiscriminant(std::span<const HermitianMatrix> mats);

// Torus intersection number alpha_1 ... alpha_n, i.e. the volume scalar of
// the wedge of the associated (1,1)-forms. Equals n! * MixedDiscriminant.
Rational IntersectionNumber(std::span<const HermitianMatrix> mats);

// Outcome of the positivity test D(A_1..A_n) > 0 for PSD matrices.
struct PositivityCertificate {
  bool positive = false;
  // First subset (size, then lexicographic order) with rank(A_I) < |I|.
  std::optional<std::vector<int>> witness;  // 1-based
  int witness_rank = 0;
  Rational mixed_discriminant;
};

// Decides D > 0 by the subset rank criterion rank(A_I) >= |I| and cross
// checks the verdict against the value of D (InternalError on mismatch).
// Throws std::invalid_argument on non-PSD input.
PositivityCertificate PanovPositivity(std::span<const HermitianMatrix> mats);

// Both sides of
//   C(n,k) (A_1..A_k B^(n-k)) (B^k C_1..C_(n-k)) >= (B^n) (A_1..A_k C_1..C_(n-k)).
struct ReverseKtSides {
  Rational lhs;
  Rational rhs;
  bool Holds() const { return lhs >= rhs; }
};
ReverseKtSides ReverseKtSidesOf(std::span<const HermitianMatrix> a,
                                const HermitianMatrix& b,
                                std::span<const HermitianMatrix> c);
bool ReverseKtCheck(std::span<const HermitianMatrix> a,
                    const HermitianMatrix& b,
                    std::span<const HermitianMatrix> c);

}  // namespace hlcert

#endif  // HLCERT_MIXED_DISCRIMINANT_HPP_
