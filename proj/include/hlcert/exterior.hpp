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

// Constant-coefficient (p,q)-forms on C^n.
//
// Sign convention. The basis element attached to (I, J) is
//   dz_{i_1} ^ ... ^ dz_{i_p} ^ dzbar_{j_1} ^ ... ^ dzbar_{j_q}
// with I and J strictly increasing; bases are ordered lexicographically by
// (I, J). Every sign below is an inversion count against this ordering.
// The positive generator of the top degree is
//   vol = (i dz_1 ^ dzbar_1) ^ ... ^ (i dz_n ^ dzbar_n),
// so that omega^n = n! vol for omega = i sum dz_k ^ dzbar_k.

#ifndef HLCERT_EXTERIOR_HPP_
#define HLCERT_EXTERIOR_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hlcert/matrix.hpp"

namespace hlcert {

inline constexpr int kMaxDimension = 30;

// Strictly increasing sequence of indices in [1, n], stored as a bit set
// (bit k-1 set iff k is present).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::uint32_t mask) : mask_(mask) {}
  // Throws std::invalid_argument unless `seq` is strictly increasing with
  // entries in [1, n].
  static MultiIndex FromSequence(std::span<const int> seq, int n);
  static MultiIndex Range(int n) {  // {1, ..., n}
    return MultiIndex(n == 0 ? 0u : (~0u >> (32 - n)));
  }

  std::uint32_t mask() const { return mask_; }
  int size() const;
  std::vector<int> ToSequence() const;  // 1-based
  bool Intersects(MultiIndex o) const { return (mask_ & o.mask_) != 0; }
  MultiIndex Union(MultiIndex o) const { return MultiIndex(mask_ | o.mask_); }

  friend bool operator==(MultiIndex a, MultiIndex b) {
    return a.mask_ == b.mask_;
  }
  // Lexicographic order of the increasing sequences.
  friend bool operator<(MultiIndex a, MultiIndex b);

 private:
  std::uint32_t mask_ = 0;
};

// All k-subsets of [n] in lexicographic order.
std::vector<MultiIndex> Combinations(int n, int k);

std::uint64_t Binomial(int n, int k);

using BidegreeKey = std::pair<MultiIndex, MultiIndex>;

// Element of Lambda^{p,q}(C^n). Sparse: absent keys are zero and stored
// coefficients are never zero.
class PQForm {
 public:
  PQForm(int n, int p, int q);
  // The scalar c in Lambda^{0,0}.
  static PQForm Scalar(int n, GaussianRational c);
  // The basis element attached to (i, j), with coefficient c.
  static PQForm Monomial(int n, MultiIndex i, MultiIndex j,
                         GaussianRational c = GaussianRational(1L));

  int n() const { return n_; }
  int p() const { return p_; }
  int q() const { return q_; }
  const std::map<BidegreeKey, GaussianRational>& terms() const {
    return terms_;
  }
  bool IsZero() const { return terms_.empty(); }
  GaussianRational Coefficient(MultiIndex i, MultiIndex j) const;

  // Adds c to the coefficient of (i, j).
  void AddTerm(MultiIndex i, MultiIndex j, const GaussianRational& c);

  PQForm& operator+=(const PQForm& o);
  PQForm& operator-=(const PQForm& o);
  PQForm& operator*=(const GaussianRational& s);
  friend PQForm operator+(PQForm a, const PQForm& b) { return a += b; }
  friend PQForm operator-(PQForm a, const PQForm& b) { return a -= b; }
  friend PQForm operator*(const GaussianRational& s, PQForm a) {
    return a *= s;
  }
  friend bool operator==(const PQForm& a, const PQForm& b) {
    return a.n_ == b.n_ && a.p_ == b.p_ && a.q_ == b.q_ &&
           a.terms_ == b.terms_;
  }

 private:
  int n_;
  int p_;
  int q_;
  std::map<BidegreeKey, GaussianRational> terms_;
};

// i sum a_jk dz_j ^ dzbar_k.
PQForm FormFromMatrix(const HermitianMatrix& a);

// Sign of dz_{I1} dzbar_{J1} ^ dz_{I2} dzbar_{J2} relative to the canonical
// basis element of (I1 u I2, J1 u J2); 0 if the index sets overlap.
int WedgeSign(const BidegreeKey& left, const BidegreeKey& right);

// Bilinear wedge product. Degree overflow yields the zero form of the
// clamped bidegree (min(p1+p2, n), min(q1+q2, n)).
PQForm Wedge(const PQForm& a, const PQForm& b);

// Left fold of Wedge; the empty product is 1 in Lambda^{0,0}(C^n).
PQForm WedgeMany(std::span<const PQForm> forms, int n);

// Complex conjugation Lambda^{p,q} -> Lambda^{q,p}.
PQForm Conjugate(const PQForm& f);

// Real (p,p)-form: equal to its conjugate.
bool IsReal(const PQForm& f);

// The canonical positive generator vol of Lambda^{n,n}.
PQForm VolumeForm(int n);

// lambda with f = lambda vol, for f of bidegree (n, n).
GaussianRational VolumeScalar(const PQForm& f);

// Ordered basis of Lambda^{p,q}(C^n) with O(1) position lookup.
class FormBasis {
 public:
  FormBasis(int n, int p, int q);

  int n() const { return n_; }
  int p() const { return p_; }
  int q() const { return q_; }
  std::size_t size() const { return rows_.size() * cols_.size(); }
  BidegreeKey At(std::size_t pos) const;
  // Position of (i, j); both must have the right sizes.
  std::size_t IndexOf(MultiIndex i, MultiIndex j) const;

  Vector ToVector(const PQForm& f) const;
  PQForm FromVector(std::span<const GaussianRational> v) const;

 private:
  int n_, p_, q_;
  std::vector<MultiIndex> rows_;
  std::vector<MultiIndex> cols_;
  std::vector<std::uint32_t> row_pos_;  // mask -> position, by size p
  std::vector<std::uint32_t> col_pos_;  // mask -> position, by size q
};

// Matrix of Phi -> form ^ Phi from Lambda^{p,q} to Lambda^{p+a,q+b} where
// (a,b) is the bidegree of `form`. Zero rows if the target degree exceeds n.
Matrix WedgeOperator(const PQForm& form, int p, int q);

// Matrix of Phi -> Omega ^ Phi : Lambda^{p,q} -> Lambda^{n-q,n-p}. Square of
// size C(n,p) C(n,q). Throws std::invalid_argument unless Omega has bidegree
// (n-p-q, n-p-q).
Matrix MultiplicationMatrix(const PQForm& omega, int p, int q);

}  // namespace hlcert

#endif  // HLCERT_EXTERIOR_HPP_
