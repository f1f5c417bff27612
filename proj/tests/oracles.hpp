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


// Brute-force reference implementations used only by the tests. None of
// them calls into the algorithms they check: determinants by permutation
// expansion, ranks by plain field elimination, characteristic polynomials by
// Faddeev-LeVerrier, wedges in a generic Grassmann algebra on 2n generators.

#ifndef HLCERT_TESTS_ORACLES_HPP_
#define HLCERT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <vector>

#include "hlcert/exterior.hpp"
#include "hlcert/linalg.hpp"
#include "hlcert/matrix.hpp"
#include "hlcert/polymatroid.hpp"

namespace oracle {

using hlcert::GaussianRational;
using hlcert::HermitianMatrix;
using hlcert::Matrix;
using hlcert::Rational;

inline int PermutationSign(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) inv += perm[a] > perm[b];
  }
  return inv % 2 == 0 ? 1 : -1;
}

inline GaussianRational LeibnizDet(const Matrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  GaussianRational total;
  do {
    GaussianRational term(PermutationSign(perm));
    for (int r = 0; r < n; ++r) term *= m(r, perm[r]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline int NaiveRank(Matrix m) {
  int rank = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
    std::size_t piv = rank;
    while (piv < rows && m(piv, c).IsZero()) ++piv;
    if (piv == rows) continue;
    for (std::size_t k = 0; k < cols; ++k) std::swap(m(piv, k), m(rank, k));
    const GaussianRational inv = GaussianRational(1L) / m(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m(r, c).IsZero()) continue;
      const GaussianRational f = m(r, c) * inv;
      for (std::size_t k = c; k < cols; ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

// Coefficients of det(tI - M) = t^n + c[0] t^{n-1} + ... + c[n-1].
inline std::vector<GaussianRational> LeverrierCharPoly(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<GaussianRational> c(n);
  Matrix mk = Matrix::Identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const Matrix am = a * mk;
    GaussianRational tr;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[k - 1] = -tr / GaussianRational(static_cast<long>(k));
    mk = am;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[k - 1];
  }
  return c;
}

// e_k = sum of the k x k principal minors.
inline std::vector<Rational> PrincipalMinorSums(const HermitianMatrix& a) {
  const std::size_t n = a.n();
  std::vector<Rational> e(n, 0);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (s >> i & 1) idx.push_back(i);
    }
    e[idx.size() - 1] += LeibnizDet(a.matrix().Principal(idx)).re();
  }
  return e;
}

// Inertia of a Hermitian matrix by Descartes' rule on its (real-rooted)
// characteristic polynomial.
inline hlcert::Inertia DescartesInertia(const Matrix& h) {
  const int n = static_cast<int>(h.rows());
  std::vector<Rational> coeffs{Rational(1)};
  for (const auto& c : LeverrierCharPoly(h)) coeffs.push_back(c.re());
  int zero = 0;
  while (zero < n && sgn(coeffs[n - zero]) == 0) ++zero;
  int changes = 0, last = 0;
  for (int k = 0; k <= n - zero; ++k) {
    const int s = sgn(coeffs[k]);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return hlcert::Inertia{changes, n - zero - changes, zero};
}

inline bool IsPositiveDefinite(const Matrix& h) {
  return DescartesInertia(h).positive == static_cast<int>(h.rows());
}

inline Rational Factorial(int n) {
  Rational f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// (1/n!) sum over sigma of det(row k taken from A_sigma(k)).
inline Rational PermutationMixedDiscriminant(
    const std::vector<HermitianMatrix>& mats) {
  const int n = static_cast<int>(mats.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  GaussianRational total;
  do {
    Matrix m(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) m(r, c) = mats[perm[r]](r, c);
    }
    total += LeibnizDet(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total.re() / Factorial(n);
}

inline Rational Permanent(const std::vector<std::vector<Rational>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    Rational term = 1;
    for (int r = 0; r < n; ++r) term *= rows[r][perm[r]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline HermitianMatrix SumOf(const std::vector<HermitianMatrix>& mats,
                             std::size_t n, std::uint32_t mask) {
  HermitianMatrix s = HermitianMatrix::Zero(n);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (mask >> i & 1) s += mats[i];
  }
  return s;
}

// rank(A_I) >= |I| + extra for every nonempty I.
inline bool SubsetRankCriterion(const std::vector<HermitianMatrix>& mats,
                                std::size_t n, int extra) {
  for (std::uint32_t s = 1; s < (1u << mats.size()); ++s) {
    if (NaiveRank(SumOf(mats, n, s).matrix()) < std::popcount(s) + extra) {
      return false;
    }
  }
  return true;
}

// Generic Grassmann algebra on generators 0..2n-1, dz_k -> k-1 and
// dzbar_k -> n+k-1. Monomials are increasing generator lists.
struct GForm {
  int n = 0;
  std::map<std::vector<int>, GaussianRational> terms;
};

inline GForm FromPQ(const hlcert::PQForm& f) {
  GForm g{f.n(), {}};
  for (const auto& [key, c] : f.terms()) {
    std::vector<int> mono;
    for (int k : key.first.ToSequence()) mono.push_back(k - 1);
    for (int k : key.second.ToSequence()) mono.push_back(f.n() + k - 1);
    g.terms[mono] = c;
  }
  return g;
}

// Bubble sort; sign of the permutation, 0 on a repeated generator.
inline int SortMonomial(std::vector<int>& mono) {
  int sign = 1;
  for (std::size_t a = 0; a < mono.size(); ++a) {
    for (std::size_t b = 0; b + 1 < mono.size() - a; ++b) {
      if (mono[b] == mono[b + 1]) return 0;
      if (mono[b] > mono[b + 1]) {
        std::swap(mono[b], mono[b + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t b = 0; b + 1 < mono.size(); ++b) {
    if (mono[b] == mono[b + 1]) return 0;
  }
  return sign;
}

inline GForm GWedge(const GForm& a, const GForm& b) {
  GForm out{a.n, {}};
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      std::vector<int> mono = ma;
      mono.insert(mono.end(), mb.begin(), mb.end());
      const int sign = SortMonomial(mono);
      if (sign == 0) continue;
      out.terms[mono] += GaussianRational(static_cast<long>(sign)) * ca * cb;
      if (out.terms[mono].IsZero()) out.terms.erase(mono);
    }
  }
  return out;
}

inline GForm GConjugate(const GForm& a) {
  GForm out{a.n, {}};
  for (const auto& [m, c] : a.terms) {
    std::vector<int> mono;
    for (int g : m) mono.push_back(g < a.n ? g + a.n : g - a.n);
    const int sign = SortMonomial(mono);
    out.terms[mono] = GaussianRational(static_cast<long>(sign)) * c.Conj();
  }
  return out;
}

inline hlcert::PQForm ToPQ(const GForm& g, int p, int q) {
  hlcert::PQForm f(g.n, p, q);
  for (const auto& [mono, c] : g.terms) {
    std::uint32_t i = 0, j = 0;
    for (int gen : mono) {
      if (gen < g.n) {
        i |= 1u << gen;
      } else {
        j |= 1u << (gen - g.n);
      }
    }
    f.AddTerm(hlcert::MultiIndex(i), hlcert::MultiIndex(j), c);
  }
  return f;
}

// i dz_1 dzbar_1 ^ ... ^ i dz_n dzbar_n, expanded generically.
inline GForm GVolume(int n) {
  GForm v{n, {{{}, GaussianRational(1L)}}};
  for (int k = 0; k < n; ++k) {
    GForm f{n, {{{k, n + k}, GaussianRational::I()}}};
    v = GWedge(v, f);
  }
  return v;
}

inline GForm GFormOfMatrix(const HermitianMatrix& a) {
  const int n = static_cast<int>(a.n());
  GForm g{n, {}};
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (!a(j, k).IsZero()) g.terms[{j, n + k}] = GaussianRational::I() * a(j, k);
    }
  }
  return g;
}

inline GForm GProduct(const std::vector<HermitianMatrix>& forms, int n) {
  GForm out{n, {{{}, GaussianRational(1L)}}};
  for (const auto& a : forms) out = GWedge(out, GFormOfMatrix(a));
  return out;
}

// Coefficient of the expanded volume element in a top-degree form.
inline GaussianRational GVolumeScalar(const GForm& top) {
  const GForm vol = GVolume(top.n);
  const auto& [mono, unit] = *vol.terms.begin();
  auto it = top.terms.find(mono);
  if (it == top.terms.end()) return GaussianRational();
  return it->second / unit;
}

// Increasing k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<int>> KSubsets(int n, int k) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) != k) continue;
    std::vector<int> v;
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1) v.push_back(i);
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Multiplication by omega from Lambda^{p,q}, with generic-monomial bases.
inline Matrix GMultiplication(const GForm& omega, int n, int p, int q,
                              int target_p, int target_q) {
  std::vector<std::vector<int>> src, dst;
  for (const auto& i : KSubsets(n, p)) {
    for (const auto& j : KSubsets(n, q)) {
      std::vector<int> m = i;
      for (int x : j) m.push_back(n + x);
      src.push_back(m);
    }
  }
  for (const auto& i : KSubsets(n, target_p)) {
    for (const auto& j : KSubsets(n, target_q)) {
      std::vector<int> m = i;
      for (int x : j) m.push_back(n + x);
      dst.push_back(m);
    }
  }
  Matrix out(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    const GForm image = GWedge(omega, GForm{n, {{src[c], GaussianRational(1L)}}});
    for (std::size_t r = 0; r < dst.size(); ++r) {
      auto it = image.terms.find(dst[r]);
      if (it != image.terms.end()) out(r, c) = it->second;
    }
  }
  return out;
}

// HL by brute force: Omega ^ . is a bijection Lambda^{p,q} -> Lambda^{n-q,n-p}.
inline bool BruteForceHl(const std::vector<HermitianMatrix>& forms, int n,
                         int p, int q) {
  const Matrix m =
      GMultiplication(GProduct(forms, n), n, p, q, n - q, n - p);
  return m.rows() == m.cols() && NaiveRank(m) == static_cast<int>(m.cols());
}

// Compositions of `total` into `parts` parts, lexicographic.
inline std::vector<std::vector<int>> AllCompositions(int parts, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(parts, 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == parts - 1) {
      cur[k] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[k] = v;
      self(self, k + 1, left - v);
    }
  };
  if (parts > 0) rec(rec, 0, total);
  return out;
}

// Definition of the discrete polymatroid, checked pointwise.
inline std::vector<std::vector<int>> BruteForcePoints(
    const hlcert::RankFunction& r) {
  const int m = r.m();
  const std::uint32_t full = (1u << m) - 1;
  std::vector<std::vector<int>> out;
  if (r(full) < 0) return out;
  for (const auto& v : AllCompositions(m, r(full))) {
    bool ok = true;
    for (std::uint32_t s = 1; s < full && ok; ++s) {
      int sum = 0;
      for (int i = 0; i < m; ++i) {
        if (s >> i & 1) sum += v[i];
      }
      ok = sum <= r(s);
    }
    if (ok) out.push_back(v);
  }
  return out;
}

inline bool NaiveSubmodular(const hlcert::RankFunction& r) {
  const std::uint32_t total = 1u << r.m();
  for (std::uint32_t a = 0; a < total; ++a) {
    for (std::uint32_t b = 0; b < total; ++b) {
      if (r(a | b) + r(a & b) > r(a) + r(b)) return false;
    }
  }
  return true;
}

inline bool NaiveMonotone(const hlcert::RankFunction& r) {
  const std::uint32_t total = 1u << r.m();
  for (std::uint32_t a = 0; a < total; ++a) {
    for (std::uint32_t b = 0; b < total; ++b) {
      if ((a & b) == a && r(a) > r(b)) return false;
    }
  }
  return true;
}

}  // namespace oracle

#endif  // HLCERT_TESTS_ORACLES_HPP_
