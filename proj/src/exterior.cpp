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

#include "hlcert/exterior.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace hlcert {
namespace {

void CheckDimension(int n) {
  if (n < 0 || n > kMaxDimension) {
    throw std::invalid_argument("ambient dimension out of range: " +
                                std::to_string(n));
  }
}

// Parity of #{(a, b) : a in A, b in B, a > b}.
int InversionParity(std::uint32_t a, std::uint32_t b) {
  int count = 0;
  while (b != 0) {
    const std::uint32_t low = b & (~b + 1);
    // Elements of A strictly above the lowest remaining element of B.
    count += std::popcount(a & ~((low << 1) - 1));
    b &= b - 1;
  }
  return count & 1;
}

// Sign of the permutation sorting `seq` (distinct keys) into increasing order.
int SortSign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] > seq[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

void Combine(int n, int k, int start, std::uint32_t mask,
             std::vector<MultiIndex>& out) {
  if (k == 0) {
    out.emplace_back(mask);
    return;
  }
  for (int i = start; i <= n - k; ++i) {
    Combine(n, k - 1, i + 1, mask | (1u << i), out);
  }
}

// i^n (-1)^(n(n-1)/2): coefficient of dz_[n] ^ dzbar_[n] in vol.
GaussianRational VolumeCoefficient(int n) {
  static const GaussianRational kPowersOfI[4] = {
      GaussianRational(1L), GaussianRational::I(), GaussianRational(-1L),
      -GaussianRational::I()};
  GaussianRational c = kPowersOfI[n % 4];
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) c = -c;
  return c;
}

}  // namespace

MultiIndex MultiIndex::FromSequence(std::span<const int> seq, int n) {
  CheckDimension(n);
  std::uint32_t mask = 0;
  int last = 0;
  for (int k : seq) {
    if (k <= last || k > n) {
      throw std::invalid_argument(
          "multi-index must be strictly increasing within [1, " +
          std::to_string(n) + "]");
    }
    mask |= 1u << (k - 1);
    last = k;
  }
  return MultiIndex(mask);
}

int MultiIndex::size() const { return std::popcount(mask_); }

std::vector<int> MultiIndex::ToSequence() const {
  std::vector<int> seq;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
    seq.push_back(std::countr_zero(m) + 1);
  }
  return seq;
}

bool operator<(MultiIndex a, MultiIndex b) {
  std::uint32_t x = a.mask_, y = b.mask_;
  while (x != 0 && y != 0) {
    const int ex = std::countr_zero(x), ey = std::countr_zero(y);
    if (ex != ey) return ex < ey;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

std::vector<MultiIndex> Combinations(int n, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || k > n) return out;
  Combine(n, k, 0, 0, out);
  return out;
}

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

PQForm::PQForm(int n, int p, int q) : n_(n), p_(p), q_(q) {
  CheckDimension(n);
  if (p < 0 || q < 0 || p > n || q > n) {
    throw std::invalid_argument("bidegree out of range");
  }
}

PQForm PQForm::Scalar(int n, GaussianRational c) {
  PQForm f(n, 0, 0);
  f.AddTerm(MultiIndex(), MultiIndex(), c);
  return f;
}

PQForm PQForm::Monomial(int n, MultiIndex i, MultiIndex j,
                        GaussianRational c) {
  PQForm f(n, i.size(), j.size());
  f.AddTerm(i, j, c);
  return f;
}

GaussianRational PQForm::Coefficient(MultiIndex i, MultiIndex j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? GaussianRational() : it->second;
}

void PQForm::AddTerm(MultiIndex i, MultiIndex j, const GaussianRational& c) {
  if (i.size() != p_ || j.size() != q_ ||
      ((i.mask() | j.mask()) >> n_) != 0) {
    throw std::invalid_argument("term does not match the form's bidegree");
  }
  if (c.IsZero()) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.IsZero()) terms_.erase(it);
  }
}

PQForm& PQForm::operator+=(const PQForm& o) {
  if (n_ != o.n_ || p_ != o.p_ || q_ != o.q_) {
    throw std::invalid_argument("adding forms of different type");
  }
  for (const auto& [key, c] : o.terms_) AddTerm(key.first, key.second, c);
  return *this;
}

PQForm& PQForm::operator-=(const PQForm& o) {
  if (n_ != o.n_ || p_ != o.p_ || q_ != o.q_) {
    throw std::invalid_argument("subtracting forms of different type");
  }
  for (const auto& [key, c] : o.terms_) AddTerm(key.first, key.second, -c);
  return *this;
}

PQForm& PQForm::operator*=(const GaussianRational& s) {
  if (s.IsZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

PQForm FormFromMatrix(const HermitianMatrix& a) {
  const int n = static_cast<int>(a.n());
  PQForm f(n, 1, 1);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (a(j, k).IsZero()) continue;
      f.AddTerm(MultiIndex(1u << j), MultiIndex(1u << k),
                GaussianRational::I() * a(j, k));
    }
  }
  return f;
}

int WedgeSign(const BidegreeKey& left, const BidegreeKey& right) {
  const auto& [i1, j1] = left;
  const auto& [i2, j2] = right;
  if (i1.Intersects(i2) || j1.Intersects(j2)) return 0;
  // Move dz_{I2} past dzbar_{J1}, then merge both index sequences.
  int parity = (j1.size() * i2.size()) & 1;
  parity ^= InversionParity(i1.mask(), i2.mask());
  parity ^= InversionParity(j1.mask(), j2.mask());
  return parity ? -1 : 1;
}

PQForm Wedge(const PQForm& a, const PQForm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("wedge: dimension mismatch");
  const int n = a.n();
  PQForm out(n, std::min(a.p() + b.p(), n), std::min(a.q() + b.q(), n));
  if (a.p() + b.p() > n || a.q() + b.q() > n) return out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const int s = WedgeSign(ka, kb);
      if (s == 0) continue;
      GaussianRational c = ca * cb;
      if (s < 0) c = -c;
      out.AddTerm(ka.first.Union(kb.first), ka.second.Union(kb.second), c);
    }
  }
  return out;
}

PQForm WedgeMany(std::span<const PQForm> forms, int n) {
  PQForm acc = PQForm::Scalar(n, GaussianRational(1L));
  for (const auto& f : forms) acc = Wedge(acc, f);
  return acc;
}

PQForm Conjugate(const PQForm& f) {
  PQForm out(f.n(), f.q(), f.p());
  for (const auto& [key, c] : f.terms()) {
    const auto& [i, j] = key;
    // conj(dz_I ^ dzbar_J) = dzbar_I ^ dz_J; reorder to dz_J ^ dzbar_I.
    // Holomorphic symbols get key k, antiholomorphic ones k + 64, so sorting
    // puts every dz before every dzbar.
    std::vector<int> seq;
    for (int k : i.ToSequence()) seq.push_back(k + 64);
    for (int k : j.ToSequence()) seq.push_back(k);
    const int s = SortSign(seq);
    out.AddTerm(j, i, s > 0 ? c.Conj() : -c.Conj());
  }
  return out;
}

bool IsReal(const PQForm& f) { return f.p() == f.q() && Conjugate(f) == f; }

PQForm VolumeForm(int n) {
  const MultiIndex all = MultiIndex::Range(n);
  return PQForm::Monomial(n, all, all, VolumeCoefficient(n));
}

GaussianRational VolumeScalar(const PQForm& f) {
  const int n = f.n();
  if (f.p() != n || f.q() != n) {
    throw std::invalid_argument("volume scalar needs a top-degree form");
  }
  if (f.terms().size() > 1) {
    throw InternalError("top-degree form with more than one coefficient");
  }
  const MultiIndex all = MultiIndex::Range(n);
  return f.Coefficient(all, all) / VolumeCoefficient(n);
}

FormBasis::FormBasis(int n, int p, int q)
    : n_(n),
      p_(p),
      q_(q),
      rows_(Combinations(n, p)),
      cols_(Combinations(n, q)),
      row_pos_(std::size_t{1} << n),
      col_pos_(std::size_t{1} << n) {
  CheckDimension(n);
  if (n > 20) throw std::invalid_argument("form basis too large");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    row_pos_[rows_[k].mask()] = static_cast<std::uint32_t>(k);
  }
  for (std::size_t k = 0; k < cols_.size(); ++k) {
    col_pos_[cols_[k].mask()] = static_cast<std::uint32_t>(k);
  }
}

BidegreeKey FormBasis::At(std::size_t pos) const {
  return {rows_[pos / cols_.size()], cols_[pos % cols_.size()]};
}

std::size_t FormBasis::IndexOf(MultiIndex i, MultiIndex j) const {
  return static_cast<std::size_t>(row_pos_[i.mask()]) * cols_.size() +
         col_pos_[j.mask()];
}

Vector FormBasis::ToVector(const PQForm& f) const {
  if (f.n() != n_ || f.p() != p_ || f.q() != q_) {
    throw std::invalid_argument("form does not live in this space");
  }
  Vector v(size());
  for (const auto& [key, c] : f.terms()) v[IndexOf(key.first, key.second)] = c;
  return v;
}

PQForm FormBasis::FromVector(std::span<const GaussianRational> v) const {
  if (v.size() != size()) throw std::invalid_argument("vector length");
  PQForm f(n_, p_, q_);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].IsZero()) continue;
    const auto [i, j] = At(k);
    f.AddTerm(i, j, v[k]);
  }
  return f;
}

Matrix WedgeOperator(const PQForm& form, int p, int q) {
  const int n = form.n();
  const FormBasis source(n, p, q);
  const int tp = p + form.p(), tq = q + form.q();
  if (tp > n || tq > n) return Matrix(0, source.size());
  const FormBasis target(n, tp, tq);
  Matrix m(target.size(), source.size());
  for (std::size_t col = 0; col < source.size(); ++col) {
    const BidegreeKey e = source.At(col);
    for (const auto& [key, c] : form.terms()) {
      const int s = WedgeSign(key, e);
      if (s == 0) continue;
      const std::size_t row = target.IndexOf(key.first.Union(e.first),
                                             key.second.Union(e.second));
      if (s > 0) {
        m(row, col) += c;
      } else {
        m(row, col) -= c;
      }
    }
  }
  return m;
}

Matrix MultiplicationMatrix(const PQForm& omega, int p, int q) {
  const int n = omega.n();
  if (p < 0 || q < 0 || p + q > n || omega.p() != n - p - q ||
      omega.q() != n - p - q) {
    throw std::invalid_argument(
        "multiplication matrix needs Omega of bidegree (n-p-q, n-p-q)");
  }
  return WedgeOperator(omega, p, q);
}

}  // namespace hlcert
