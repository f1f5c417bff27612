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

// Hard Lefschetz and Hodge-Riemann certification for complete intersections
// Omega = alpha_1 ^ ... ^ alpha_{n-p-q} of semi-positive (1,1)-forms.
//
// Two independent routes decide HL:
//   * CriterionHl: rank(A_I) >= |I| + p + q for every nonempty I;
//   * DirectHl:    Omega ^ . : Lambda^{p,q} -> Lambda^{n-q,n-p} is bijective.
// HrCertify decides positivity of Q(Phi, Psi) = c_{p,q} Omega ^ Phi ^ conj(Psi)
// on the primitive space ker(Omega ^ eta ^ .) directly.

#ifndef HLCERT_HODGE_HPP_
#define HLCERT_HODGE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "hlcert/exterior.hpp"
#include "hlcert/linalg.hpp"
#include "hlcert/matrix.hpp"

namespace hlcert {

struct HLInstance {
  int n = 0;
  int p = 0;
  int q = 0;
  std::vector<HermitianMatrix> forms;  // n - p - q PSD matrices
  std::optional<HermitianMatrix> eta;

  // Throws std::invalid_argument on bad bidegree, arity, sizes, or non-PSD
  // input.
  void Validate() const;
  // alpha_1 ^ ... ^ alpha_{n-p-q}.
  PQForm Omega() const;
};

enum class Verdict { kHolds, kFails };

struct Certificate {
  Verdict verdict = Verdict::kHolds;
  // 1-based subset I with rank(A_I) < |I| + p + q.
  std::optional<std::vector<int>> failing_subset;
  int failing_rank = 0;
  int required_rank = 0;
  // Nonzero Phi with Omega ^ Phi = 0.
  std::optional<PQForm> kernel_witness;

  bool holds() const { return verdict == Verdict::kHolds; }
};

// Subset numerical-dimension criterion. The failing subset reported is the
// first in size-then-lexicographic order.
Certificate CriterionHl(const HLInstance& inst);

// Bijectivity of the multiplication map, decided by its determinant. On
// failure a kernel vector is returned and re-verified with Wedge.
Certificate DirectHl(const HLInstance& inst);

// c_{p,q} = i^(q-p) (-1)^((p+q)(p+q+1)/2).
GaussianRational HodgeRiemannConstant(int p, int q);

// Gram matrix of Q on the canonical basis of Lambda^{p,q}:
//   H(a, b) = c_{p,q} vol(Omega ^ e_a ^ conj(e_b)).
HermitianFormOnSpace HodgeRiemannForm(const PQForm& omega, int p, int q);

struct PrimitiveSpace {
  std::vector<PQForm> basis;
  HermitianFormOnSpace gram;  // Q restricted to `basis`
};

struct HrResult {
  Certificate certificate;
  PrimitiveSpace primitive;
};

// Requires inst.eta with rank(eta) >= p + q; throws std::invalid_argument
// (reporting the deficit) otherwise.
HrResult HrCertify(const HLInstance& inst);

struct LefschetzDecomposition {
  std::vector<PQForm> image_basis;      // eta ^ Lambda^{p-1,q-1}
  std::vector<PQForm> primitive_basis;  // ker(Omega ^ eta ^ .)
  std::size_t image_dim = 0;
  std::size_t primitive_dim = 0;
  std::size_t total_dim = 0;
  bool direct_sum = false;          // the two spans fill Lambda^{p,q}
  bool q_orthogonal = false;        // Q(image, primitive) = 0
  bool dimension_identity = false;  // C(n,p)C(n,q) - C(n,p-1)C(n,q-1)
};

// Requires HL for (p,q) and, when p,q >= 1, HL for (p-1,q-1) with the form
// list extended by eta twice; throws std::invalid_argument otherwise.
LefschetzDecomposition Lefschetz(const HLInstance& inst);

// Real basis of Herm_n: E_jj, then E_jk + E_kj, then i(E_jk - E_kj), j < k.
std::vector<HermitianMatrix> HermitianRealBasis(std::size_t n);

// Inertia of (A, B) -> D(A, B, A_1, ..., A_{n-2}) on Herm_n in the real basis
// above. `forms` must hold n - 2 PSD matrices.
Inertia LorentzianSignature(std::span<const HermitianMatrix> forms,
                            std::size_t n);

// With Q(A, B) = alpha_1..alpha_{n-2} . A . B on the torus: given
// Q(alpha, alpha) > 0 and Q(alpha, beta) = 0, returns whether Q(beta, beta) <= 0
// with equality exactly when Omega ^ beta = 0. Throws std::invalid_argument
// when the preconditions fail.
bool HodgeIndexCheck(std::span<const HermitianMatrix> forms,
                     const HermitianMatrix& alpha, const HermitianMatrix& beta);

// If Phi = ^forms_a and Psi = ^forms_b both have HL (on degrees n-k and n-l),
// returns whether Phi ^ Psi has HL, checked directly. Throws
// std::invalid_argument when a precondition fails.
bool ProductsPreserveHl(std::span<const HermitianMatrix> forms_a,
                        std::span<const HermitianMatrix> forms_b, int n);

}  // namespace hlcert

#endif  // HLCERT_HODGE_HPP_
