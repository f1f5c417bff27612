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

#include <gtest/gtest.h>

#include "hlcert/generator.hpp"
#include "oracles.hpp"

namespace hlcert {
namespace {

const GaussianRational kI = GaussianRational::I();

MultiIndex Idx(std::initializer_list<int> seq, int n) {
  return MultiIndex::FromSequence(std::vector<int>(seq), n);
}

PQForm RandomForm(Prng& rng, int n, int p, int q) {
  PQForm f(n, p, q);
  for (const auto& i : Combinations(n, p)) {
    for (const auto& j : Combinations(n, q)) {
      if (rng.UniformInt(0, 2) == 0) continue;
      f.AddTerm(i, j, GaussianRational(Rational(rng.UniformInt(-3, 3)),
                                       Rational(rng.UniformInt(-3, 3))));
    }
  }
  return f;
}

TEST(MultiIndexTest, ValidationAndOrder) {
  EXPECT_THROW(MultiIndex::FromSequence(std::vector<int>{2, 1}, 3),
               std::invalid_argument);
  EXPECT_THROW(MultiIndex::FromSequence(std::vector<int>{1, 4}, 3),
               std::invalid_argument);
  EXPECT_THROW(MultiIndex::FromSequence(std::vector<int>{1, 1}, 3),
               std::invalid_argument);
  EXPECT_EQ(Idx({1, 3}, 3).ToSequence(), (std::vector<int>{1, 3}));
  EXPECT_TRUE(Idx({1, 3}, 3) < Idx({2}, 3));
  EXPECT_TRUE(Idx({1}, 3) < Idx({1, 2}, 3));
  const auto c = Combinations(4, 2);
  ASSERT_EQ(c.size(), 6u);
  EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
  EXPECT_EQ(Binomial(5, 2), 10u);
  EXPECT_EQ(Binomial(3, 4), 0u);
}

TEST(FormFromMatrixTest, Examples) {
  const PQForm a = FormFromMatrix(HermitianMatrix::Identity(1));
  EXPECT_EQ(a.Coefficient(Idx({1}, 1), Idx({1}, 1)), kI);
  const PQForm b = FormFromMatrix(HermitianMatrix::Diagonal({1, 0}));
  EXPECT_EQ(b, PQForm::Monomial(2, Idx({1}, 2), Idx({1}, 2), kI));
  const GaussianRational c(Rational(2), Rational(-1));
  const PQForm d = FormFromMatrix(HermitianMatrix{{0, c}, {c.Conj(), 0}});
  EXPECT_EQ(d.terms().size(), 2u);
  EXPECT_EQ(d.Coefficient(Idx({1}, 2), Idx({2}, 2)), kI * c);
  EXPECT_EQ(d.Coefficient(Idx({2}, 2), Idx({1}, 2)), kI * c.Conj());
}

TEST(FormFromMatrixTest, LinearAndReal) {
  Prng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(1, 4));
    const auto a = RandomHermitian(rng, n, 3);
    const auto b = RandomHermitian(rng, n, 3);
    EXPECT_EQ(FormFromMatrix(a) + FormFromMatrix(b), FormFromMatrix(a + b));
    EXPECT_TRUE(IsReal(FormFromMatrix(a)));
  }
}

TEST(WedgeTest, Examples) {
  const PQForm dz1 = PQForm::Monomial(2, Idx({1}, 2), MultiIndex());
  EXPECT_TRUE(Wedge(dz1, dz1).IsZero());
  const PQForm a = FormFromMatrix(HermitianMatrix::Diagonal({1, 0}));
  const PQForm b = FormFromMatrix(HermitianMatrix::Diagonal({0, 1}));
  EXPECT_EQ(Wedge(a, b), VolumeForm(2));
  const PQForm omega = FormFromMatrix(HermitianMatrix::Identity(2));
  EXPECT_EQ(Wedge(omega, omega), GaussianRational(2L) * VolumeForm(2));
}

TEST(WedgeTest, VolumeMatchesGenericExpansion) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(oracle::FromPQ(VolumeForm(n)).terms, oracle::GVolume(n).terms) << n;
  }
}

TEST(WedgeTest, MatchesGenericGrassmannAlgebra) {
  Prng rng(22);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(1, 4));
    const int p1 = static_cast<int>(rng.UniformInt(0, n));
    const int q1 = static_cast<int>(rng.UniformInt(0, n));
    const int p2 = static_cast<int>(rng.UniformInt(0, n - p1));
    const int q2 = static_cast<int>(rng.UniformInt(0, n - q1));
    const PQForm a = RandomForm(rng, n, p1, q1);
    const PQForm b = RandomForm(rng, n, p2, q2);
    const PQForm w = Wedge(a, b);
    EXPECT_EQ(w, oracle::ToPQ(oracle::GWedge(oracle::FromPQ(a), oracle::FromPQ(b)),
                              p1 + p2, q1 + q2));
  }
}

TEST(WedgeTest, AssociativeAndGradedCommutative) {
  Prng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(1, 4));
    std::vector<PQForm> f;
    int p = 0, q = 0;
    for (int k = 0; k < 3; ++k) {
      const int dp = static_cast<int>(rng.UniformInt(0, std::min(1, n - p)));
      const int dq = static_cast<int>(rng.UniformInt(0, std::min(1, n - q)));
      f.push_back(RandomForm(rng, n, dp, dq));
      p += dp;
      q += dq;
    }
    EXPECT_EQ(Wedge(Wedge(f[0], f[1]), f[2]), Wedge(f[0], Wedge(f[1], f[2])));
    const int deg_a = f[0].p() + f[0].q(), deg_b = f[1].p() + f[1].q();
    const GaussianRational sign((deg_a * deg_b) % 2 == 0 ? 1L : -1L);
    EXPECT_EQ(Wedge(f[0], f[1]), sign * Wedge(f[1], f[0]));
  }
}

TEST(WedgeTest, WedgeSignMatchesSorting) {
  Prng rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5;
    const auto mask = [&] { return static_cast<std::uint32_t>(rng.UniformInt(0, 31)); };
    const BidegreeKey l{MultiIndex(mask()), MultiIndex(mask())};
    const BidegreeKey r{MultiIndex(mask()), MultiIndex(mask())};
    if (l.first.Intersects(r.first) || l.second.Intersects(r.second)) continue;
    const PQForm a = PQForm::Monomial(n, l.first, l.second);
    const PQForm b = PQForm::Monomial(n, r.first, r.second);
    const auto g = oracle::GWedge(oracle::FromPQ(a), oracle::FromPQ(b));
    ASSERT_EQ(g.terms.size(), 1u);
    EXPECT_EQ(GaussianRational(static_cast<long>(WedgeSign(l, r))), g.terms.begin()->second);
  }
}

TEST(WedgeManyTest, Examples) {
  EXPECT_EQ(WedgeMany({}, 3), PQForm::Scalar(3, 1L));
  const PQForm omega = FormFromMatrix(HermitianMatrix::Identity(3));
  EXPECT_EQ(WedgeMany(std::vector<PQForm>{omega}, 3), omega);
  EXPECT_EQ(WedgeMany(std::vector<PQForm>(3, omega), 3),
            GaussianRational(6L) * VolumeForm(3));
}

TEST(WedgeManyTest, PowerOfKaehlerFormIsFactorialVolume) {
  long fact = 1;
  for (int n = 1; n <= 5; ++n) {
    fact *= n;
    const PQForm omega = FormFromMatrix(HermitianMatrix::Identity(n));
    const PQForm top = WedgeMany(std::vector<PQForm>(n, omega), n);
    EXPECT_EQ(VolumeScalar(top), GaussianRational(fact));
  }
}

TEST(WedgeManyTest, PowersVanishExactlyAboveRank) {
  Prng rng(25);
  for (int n = 1; n <= 4; ++n) {
    for (int r = 0; r <= n; ++r) {
      const PQForm a = FormFromMatrix(RandomPsd(rng, n, r, 2));
      for (int k = 1; k <= n; ++k) {
        EXPECT_EQ(WedgeMany(std::vector<PQForm>(k, a), n).IsZero(), k > r);
      }
    }
  }
}

TEST(VolumeScalarTest, Examples) {
  EXPECT_EQ(VolumeScalar(VolumeForm(3)), GaussianRational(1L));
  EXPECT_EQ(VolumeScalar(PQForm(3, 3, 3)), GaussianRational());
  EXPECT_THROW(VolumeScalar(PQForm(3, 2, 3)), std::invalid_argument);
}

TEST(ConjugateTest, Examples) {
  const PQForm a = FormFromMatrix(HermitianMatrix::Diagonal({1}));
  EXPECT_EQ(Conjugate(a), a);
  const PQForm dz1 = PQForm::Monomial(1, Idx({1}, 1), MultiIndex());
  EXPECT_EQ(Conjugate(dz1), PQForm::Monomial(1, MultiIndex(), Idx({1}, 1)));
}

TEST(ConjugateTest, InvolutionMatchingGenericConjugation) {
  Prng rng(26);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(1, 4));
    const int p = static_cast<int>(rng.UniformInt(0, n));
    const int q = static_cast<int>(rng.UniformInt(0, n));
    const PQForm f = RandomForm(rng, n, p, q);
    EXPECT_EQ(Conjugate(Conjugate(f)), f);
    EXPECT_EQ(Conjugate(f), oracle::ToPQ(oracle::GConjugate(oracle::FromPQ(f)), q, p));
  }
}

TEST(FormBasisTest, RoundTripAndDimension) {
  Prng rng(27);
  for (int n = 1; n <= 4; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) {
        const FormBasis basis(n, p, q);
        EXPECT_EQ(basis.size(), Binomial(n, p) * Binomial(n, q));
        for (std::size_t k = 0; k < basis.size(); ++k) {
          const auto [i, j] = basis.At(k);
          EXPECT_EQ(basis.IndexOf(i, j), k);
          if (k > 0) EXPECT_TRUE(basis.At(k - 1) < basis.At(k));
        }
        const PQForm f = RandomForm(rng, n, p, q);
        EXPECT_EQ(basis.FromVector(basis.ToVector(f)), f);
      }
    }
  }
}

TEST(MultiplicationMatrixTest, Examples) {
  const PQForm one = PQForm::Scalar(2, 1L);
  EXPECT_EQ(MultiplicationMatrix(one, 1, 1), Matrix::Identity(4));
  const PQForm vol = GaussianRational(3L) * VolumeForm(2);
  const Matrix m = MultiplicationMatrix(vol, 0, 0);
  ASSERT_EQ(m.rows(), 1u);
  EXPECT_EQ(m(0, 0), VolumeScalar(vol) * VolumeForm(2).terms().begin()->second);
  const PQForm a = FormFromMatrix(HermitianMatrix::Diagonal({1, 0}));
  const Matrix w = WedgeOperator(a, 1, 0);
  ASSERT_EQ(w.rows(), 2u);
  ASSERT_EQ(w.cols(), 2u);
  int nonzero = 0;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) nonzero += !w(r, c).IsZero();
  }
  EXPECT_EQ(nonzero, 1);
}

TEST(MultiplicationMatrixTest, MatchesGenericMultiplication) {
  Prng rng(28);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(1, 4));
    const int k = static_cast<int>(rng.UniformInt(0, n));
    const int p = static_cast<int>(rng.UniformInt(0, n - k));
    const int q = static_cast<int>(rng.UniformInt(0, n - k));
    std::vector<HermitianMatrix> forms;
    for (int t = 0; t < k; ++t) forms.push_back(RandomHermitian(rng, n, 2));
    std::vector<PQForm> pq;
    for (const auto& a : forms) pq.push_back(FormFromMatrix(a));
    const Matrix lib = WedgeOperator(WedgeMany(pq, n), p, q);
    EXPECT_EQ(lib, oracle::GMultiplication(oracle::GProduct(forms, n), n, p, q,
                                           p + k, q + k));
  }
}

}  // namespace
}  // namespace hlcert
