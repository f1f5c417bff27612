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

#include "hlcert/mixed_discriminant.hpp"

#include <bit>
#include <stdexcept>

#include "hlcert/exterior.hpp"
#include "hlcert/linalg.hpp"
#include "hlcert/subsets.hpp"

namespace hlcert {
namespace {

void CheckTuple(std::span<const HermitianMatrix> mats) {
  if (mats.empty()) throw std::invalid_argument("empty matrix tuple");
  const std::size_t n = mats.front().n();
  if (mats.size() != n) {
    throw std::invalid_argument("mixed discriminant needs exactly n matrices");
  }
  for (const auto& a : mats) {
    if (a.n() != n) throw std::invalid_argument("matrix size mismatch");
  }
}

Integer Factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Rational RealPart(const GaussianRational& z, const char* what) {
  if (!z.IsReal()) throw InternalError(what);
  return z.re();
}

}  // namespace

Rational MixedDiscriminant(std::span<const HermitianMatrix> mats) {
  CheckTuple(mats);
  const int n = static_cast<int>(mats.size());
  if (n > kMaxGroundSet) throw std::invalid_argument("tuple too large");
  GaussianRational acc;
  Matrix sum(n, n);
  SubsetMask prev = 0;
  const std::size_t total = std::size_t{1} << n;
  for (std::size_t step = 1; step < total; ++step) {
    const auto gray = static_cast<SubsetMask>(step ^ (step >> 1));
    const SubsetMask flipped = gray ^ prev;
    const int i = std::countr_zero(flipped);
    if (gray & flipped) {
      sum += mats[i].matrix();
    } else {
      sum -= mats[i].matrix();
    }
    prev = gray;
    const GaussianRational det = Determinant(sum);
    if ((n - std::popcount(gray)) % 2 == 0) {
      acc += det;
    } else {
      acc -= det;
    }
  }
  return RealPart(acc, "non-real mixed discriminant") / Rational(Factorial(n));
}

Rational IntersectionNumber(std::span<const HermitianMatrix> mats) {
  CheckTuple(mats);
  const int n = static_cast<int>(mats.size());
  PQForm acc = PQForm::Scalar(n, GaussianRational(1L));
  for (const auto& a : mats) {
    acc = Wedge(acc, FormFromMatrix(a));
    if (acc.IsZero()) return Rational(0);
  }
  return RealPart(VolumeScalar(acc), "non-real intersection number");
}

PositivityCertificate PanovPositivity(std::span<const HermitianMatrix> mats) {
  CheckTuple(mats);
  for (const auto& a : mats) {
    if (!IsPsd(a)) throw std::invalid_argument("positivity test needs PSD input");
  }
  const int n = static_cast<int>(mats.size());
  const auto ranks = SubsetSumRanks(mats, n);
  PositivityCertificate cert;
  cert.positive = true;
  for (SubsetMask s : SubsetsBySizeThenLex(n)) {
    if (ranks[s] < std::popcount(s)) {
      cert.positive = false;
      cert.witness = SubsetToList(s);
      cert.witness_rank = ranks[s];
      break;
    }
  }
  cert.mixed_discriminant = MixedDiscriminant(mats);
  if ((sgn(cert.mixed_discriminant) > 0) != cert.positive) {
    throw InternalError("subset rank criterion disagrees with the sign of D");
  }
  return cert;
}

ReverseKtSides ReverseKtSidesOf(std::span<const HermitianMatrix> a,
                                const HermitianMatrix& b,
                                std::span<const HermitianMatrix> c) {
  const std::size_t n = b.n();
  const std::size_t k = a.size();
  if (k + c.size() != n) {
    throw std::invalid_argument("reverse KT needs k + (n-k) = n classes");
  }
  auto check = [n](const HermitianMatrix& x) {
    if (x.n() != n) throw std::invalid_argument("matrix size mismatch");
    if (!IsPsd(x)) throw std::invalid_argument("reverse KT needs PSD classes");
  };
  for (const auto& x : a) check(x);
  for (const auto& x : c) check(x);
  check(b);
  std::vector<HermitianMatrix> ab(a.begin(), a.end());
  ab.insert(ab.end(), n - k, b);
  std::vector<HermitianMatrix> bc(k, b);
  bc.insert(bc.end(), c.begin(), c.end());
  std::vector<HermitianMatrix> bn(n, b);
  std::vector<HermitianMatrix> ac(a.begin(), a.end());
  ac.insert(ac.end(), c.begin(), c.end());
  ReverseKtSides sides;
  sides.lhs = Rational(Integer(static_cast<unsigned long>(
                  Binomial(static_cast<int>(n), static_cast<int>(k))))) *
              IntersectionNumber(ab) * IntersectionNumber(bc);
  sides.rhs = IntersectionNumber(bn) * IntersectionNumber(ac);
  return sides;
}

bool ReverseKtCheck(std::span<const HermitianMatrix> a,
                    const HermitianMatrix& b,
                    std::span<const HermitianMatrix> c) {
  return ReverseKtSidesOf(a, b, c).Holds();
}

}  // namespace hlcert
