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

#include "hlcert/linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace hlcert {
namespace {

// Element of Z[i], used only inside the fraction-free elimination.
struct GaussianInt {
  Integer re;
  Integer im;

  bool IsZero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussianInt Mul(const GaussianInt& a, const GaussianInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianInt Sub(const GaussianInt& a, const GaussianInt& b) {
  return {a.re - b.re, a.im - b.im};
}

// a / b where b divides a exactly in Z[i].
GaussianInt DivExact(const GaussianInt& a, const GaussianInt& b) {
  const Integer norm = b.re * b.re + b.im * b.im;
  GaussianInt num{a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
  GaussianInt q;
  mpz_divexact(q.re.get_mpz_t(), num.re.get_mpz_t(), norm.get_mpz_t());
  mpz_divexact(q.im.get_mpz_t(), num.im.get_mpz_t(), norm.get_mpz_t());
  return q;
}

// Rows scaled by the lcm of their denominators. `scale` collects the product
// of all row multipliers.
std::vector<std::vector<GaussianInt>> ClearDenominators(const Matrix& m,
                                                        Integer* scale) {
  std::vector<std::vector<GaussianInt>> rows(m.rows());
  *scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).im().get_den_mpz_t());
    }
    *scale *= l;
    rows[r].resize(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational re = m(r, c).re() * l;
      const Rational im = m(r, c).im() * l;
      rows[r][c] = {re.get_num(), im.get_num()};
    }
  }
  return rows;
}

struct BareissResult {
  int rank = 0;
  int swaps = 0;
  GaussianInt last_pivot{1, 0};
};

// In-place fraction-free row echelon form. Every intermediate entry is a
// minor of the input, so each division is exact.
BareissResult Bareiss(std::vector<std::vector<GaussianInt>>& a,
                      std::size_t cols) {
  BareissResult res;
  const std::size_t rows = a.size();
  GaussianInt prev{1, 0};
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].IsZero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      ++res.swaps;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] =
            DivExact(Sub(Mul(a[r][c], a[i][j]), Mul(a[i][c], a[r][j])), prev);
      }
      a[i][c] = {0, 0};
    }
    prev = a[r][c];
    ++r;
  }
  res.rank = static_cast<int>(r);
  res.last_pivot = prev;
  return res;
}

// Reduced row echelon form over Q(i); returns pivot columns.
std::vector<std::size_t> Rref(Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).IsZero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    }
    const GaussianRational inv = GaussianRational(1L) / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).IsZero()) continue;
      const GaussianRational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a(r, j).IsZero()) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Schur complement of g with respect to its leading k x k block b.
Matrix SchurComplement(const Matrix& g, std::size_t k, const Matrix& b_inv) {
  const std::size_t rest = g.rows() - k;
  Matrix s(rest, rest);
  // C = g[k:, :k], s = g[k:, k:] - C b^-1 C*.
  Matrix c(rest, k);
  for (std::size_t i = 0; i < rest; ++i) {
    for (std::size_t j = 0; j < k; ++j) c(i, j) = g(k + i, j);
  }
  const Matrix cb = c * b_inv;
  for (std::size_t i = 0; i < rest; ++i) {
    for (std::size_t j = 0; j < rest; ++j) {
      GaussianRational v = g(k + i, k + j);
      for (std::size_t t = 0; t < k; ++t) v -= cb(i, t) * g(t, k + j);
      s(i, j) = v;
    }
  }
  return s;
}

// Moves indices a and b of a square matrix to the front (symmetric
// permutation); b may equal a.
Matrix BringToFront(const Matrix& g, std::size_t a, std::size_t b) {
  std::vector<std::size_t> order{a};
  if (b != a) order.push_back(b);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (i != a && i != b) order.push_back(i);
  }
  return g.Principal(order);
}

}  // namespace

int Rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Integer scale;
  auto rows = ClearDenominators(m, &scale);
  return Bareiss(rows, m.cols()).rank;
}

GaussianRational Determinant(const Matrix& m) {
  if (!m.IsSquare()) throw std::invalid_argument("determinant of non-square");
  if (m.rows() == 0) return GaussianRational(1L);
  Integer scale;
  auto rows = ClearDenominators(m, &scale);
  const BareissResult res = Bareiss(rows, m.cols());
  if (res.rank < static_cast<int>(m.rows())) return GaussianRational();
  GaussianRational det(Rational(res.last_pivot.re), Rational(res.last_pivot.im));
  det /= GaussianRational(Rational(scale));
  return res.swaps % 2 == 0 ? det : -det;
}

std::vector<GaussianRational> CharacteristicPolynomial(const Matrix& m) {
  if (!m.IsSquare()) throw std::invalid_argument("char poly of non-square");
  const std::size_t n = m.rows();
  Matrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t sub = col + 1;
    std::size_t piv = sub;
    while (piv < n && h(piv, col).IsZero()) ++piv;
    if (piv == n) continue;
    if (piv != sub) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(sub, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, sub));
    }
    for (std::size_t i = sub + 1; i < n; ++i) {
      if (h(i, col).IsZero()) continue;
      const GaussianRational u = h(i, col) / h(sub, col);
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(sub, j);
      for (std::size_t r = 0; r < n; ++r) h(r, sub) += u * h(r, i);
    }
  }
  // p_k(t) = det(t I - H_k) for leading blocks; stored low degree first.
  std::vector<std::vector<GaussianRational>> p(n + 1);
  p[0] = {GaussianRational(1L)};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t d = k - 1;  // 0-based index of the new row/column
    std::vector<GaussianRational> next(k + 1);
    for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
      next[i + 1] += p[k - 1][i];
      next[i] -= h(d, d) * p[k - 1][i];
    }
    GaussianRational prod(1L);
    for (std::size_t ii = d; ii-- > 0;) {
      prod *= h(ii + 1, ii);
      if (prod.IsZero()) break;
      const GaussianRational f = h(ii, d) * prod;
      for (std::size_t t = 0; t < p[ii].size(); ++t) next[t] -= f * p[ii][t];
    }
    p[k] = std::move(next);
  }
  std::vector<GaussianRational> coeffs(n);
  for (std::size_t k = 1; k <= n; ++k) coeffs[k - 1] = p[n][n - k];
  return coeffs;
}

std::vector<Rational> CharPolyCoefficients(const HermitianMatrix& m) {
  const auto c = CharacteristicPolynomial(m.matrix());
  std::vector<Rational> e(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!c[k].IsReal()) {
      throw InternalError("non-real characteristic coefficient of a "
                          "Hermitian matrix");
    }
    e[k] = (k % 2 == 0) ? Rational(-c[k].re()) : c[k].re();
  }
  return e;
}

bool IsPsd(const HermitianMatrix& m) {
  for (const auto& e : CharPolyCoefficients(m)) {
    if (sgn(e) < 0) return false;
  }
  return true;
}

std::optional<LdlFactorization> LdlPositiveDefinite(const HermitianMatrix& m) {
  const std::size_t n = m.n();
  Matrix a = m.matrix();
  LdlFactorization f{Matrix::Identity(n), std::vector<Rational>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    if (!a(k, k).IsReal()) throw InternalError("non-real LDL pivot");
    if (sgn(a(k, k).re()) <= 0) return std::nullopt;
    f.d[k] = a(k, k).re();
    for (std::size_t i = k + 1; i < n; ++i) {
      f.l(i, k) = a(i, k) / a(k, k);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) -= f.l(i, k) * a(k, j);
      }
    }
  }
  return f;
}

bool IsMPositive(const HermitianMatrix& alpha, const HermitianMatrix& omega,
                 int m) {
  const std::size_t n = alpha.n();
  if (omega.n() != n) throw std::invalid_argument("dimension mismatch");
  if (m < 1 || m > static_cast<int>(n)) {
    throw std::invalid_argument("m-positivity needs 1 <= m <= n");
  }
  const auto ldl = LdlPositiveDefinite(omega);
  if (!ldl) throw std::invalid_argument("omega is not positive definite");
  // Inverse of the unit lower triangular factor by forward substitution.
  Matrix linv = Matrix::Identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      GaussianRational s;
      for (std::size_t k = j; k < i; ++k) s -= ldl->l(i, k) * linv(k, j);
      linv(i, j) = s;
    }
  }
  Matrix adapted = linv * alpha.matrix() * linv.ConjugateTranspose();
  for (std::size_t i = 0; i < n; ++i) {
    const GaussianRational inv(Rational(1) / ldl->d[i]);
    for (std::size_t j = 0; j < n; ++j) adapted(i, j) *= inv;
  }
  const auto c = CharacteristicPolynomial(adapted);
  for (int k = 1; k <= m; ++k) {
    const auto& ck = c[k - 1];
    if (!ck.IsReal()) throw InternalError("non-real m-positivity coefficient");
    const int sign = (k % 2 == 0) ? sgn(ck.re()) : -sgn(ck.re());
    if (sign <= 0) return false;
  }
  return true;
}

std::vector<Vector> KernelBasis(const Matrix& m) {
  Matrix a = m;
  const auto pivots = Rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1L;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -a(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Inertia HermitianSignature(const HermitianFormOnSpace& form) {
  Inertia inertia;
  Matrix g = form.gram;
  while (g.rows() > 0) {
    const std::size_t k = g.rows();
    std::size_t diag = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (!g(i, i).IsZero()) {
        diag = i;
        break;
      }
    }
    if (diag < k) {
      g = BringToFront(g, diag, diag);
      const GaussianRational& d = g(0, 0);
      if (!d.IsReal()) throw InternalError("non-real diagonal in Hermitian form");
      (sgn(d.re()) > 0 ? inertia.positive : inertia.negative) += 1;
      Matrix inv(1, 1);
      inv(0, 0) = GaussianRational(1L) / d;
      g = SchurComplement(g, 1, inv);
      continue;
    }
    std::size_t a = k, b = k;
    for (std::size_t i = 0; i < k && a == k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!g(i, j).IsZero()) {
          a = i;
          b = j;
          break;
        }
      }
    }
    if (a == k) {
      inertia.zero += static_cast<int>(k);
      break;
    }
    // [[0, x], [conj(x), 0]] has eigenvalues +-|x|.
    g = BringToFront(g, a, b);
    const GaussianRational x = g(0, 1);
    Matrix inv(2, 2);
    inv(0, 1) = GaussianRational(1L) / x.Conj();
    inv(1, 0) = GaussianRational(1L) / x;
    inertia.positive += 1;
    inertia.negative += 1;
    g = SchurComplement(g, 2, inv);
  }
  return inertia;
}

Matrix RestrictGram(const HermitianFormOnSpace& form,
                    std::span<const Vector> basis) {
  const std::size_t d = basis.size();
  std::vector<Vector> gv;
  gv.reserve(d);
  // (G conj(v_b))
  for (const auto& v : basis) {
    if (v.size() != form.dim()) throw std::invalid_argument("basis length");
    Vector cv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) cv[i] = v[i].Conj();
    gv.push_back(form.gram * cv);
  }
  Matrix r(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      GaussianRational s;
      for (std::size_t i = 0; i < basis[a].size(); ++i) {
        if (!basis[a][i].IsZero()) s += basis[a][i] * gv[b][i];
      }
      r(a, b) = s;
    }
  }
  return r;
}

Definiteness DefinitenessOnSubspace(const HermitianFormOnSpace& form,
                                    std::span<const Vector> basis) {
  if (basis.empty()) return Definiteness::kPositiveDefinite;
  if (Rank(Matrix::FromColumns(form.dim(), basis)) !=
      static_cast<int>(basis.size())) {
    throw std::invalid_argument("subspace basis is linearly dependent");
  }
  const Matrix r = RestrictGram(form, basis);
  std::vector<std::size_t> lead;
  for (std::size_t k = 0; k < r.rows(); ++k) {
    lead.push_back(k);
    const GaussianRational minor = Determinant(r.Principal(lead));
    if (!minor.IsReal()) throw InternalError("non-real Hermitian minor");
    if (sgn(minor.re()) <= 0) return Definiteness::kNotPositiveDefinite;
  }
  return Definiteness::kPositiveDefinite;
}

}  // namespace hlcert
