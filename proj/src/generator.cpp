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

#include "hlcert/generator.hpp"

#include <algorithm>
#include <stdexcept>

#include "hlcert/exterior.hpp"
#include "hlcert/linalg.hpp"

namespace hlcert {
namespace {

constexpr int kMaxDraws = 1000;

GaussianRational RandomEntry(Prng& rng, int bound) {
  const long re = rng.UniformInt(-bound, bound);
  const long im = rng.UniformInt(-bound, bound);
  return GaussianRational(Rational(re), Rational(im));
}

// Full-column-rank n x r matrix whose nonzero rows lie in `rows`.
Matrix RandomFullRank(Prng& rng, int n, int r, int bound,
                      const std::vector<int>& rows) {
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    Matrix b(n, r);
    for (int row : rows) {
      for (int c = 0; c < r; ++c) b(row, c) = RandomEntry(rng, bound);
    }
    if (Rank(b) == r) return b;
  }
  throw std::runtime_error("generator: no full-rank draw after 1000 tries");
}

HermitianMatrix CheckedGram(const Matrix& b, int rank) {
  HermitianMatrix m = GramOf(b);
  if (!IsPsd(m) || Rank(m) != rank) {
    throw InternalError("generated matrix misses its rank profile");
  }
  return m;
}

std::vector<int> AllRows(int n) {
  std::vector<int> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = i;
  return rows;
}

}  // namespace

long Prng::UniformInt(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty integer range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(Next() % span);
}

void GeneratorSpec::Validate() const {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("bad dimension");
  if (entry_bound < 1) throw std::invalid_argument("entry bound must be >= 1");
  for (int r : rank_profile) {
    if (r < 0 || r > n) throw std::invalid_argument("target rank outside [0, n]");
  }
}

HermitianMatrix RandomPsd(Prng& rng, int n, int rank, int entry_bound) {
  if (rank == 0) return HermitianMatrix::Zero(n);
  return CheckedGram(RandomFullRank(rng, n, rank, entry_bound, AllRows(n)),
                     rank);
}

std::vector<HermitianMatrix> GeneratePsd(const GeneratorSpec& spec) {
  spec.Validate();
  Prng rng(spec.seed);
  std::vector<HermitianMatrix> out;
  out.reserve(spec.rank_profile.size());
  for (int r : spec.rank_profile) {
    out.push_back(RandomPsd(rng, spec.n, r, spec.entry_bound));
  }
  return out;
}

std::vector<HermitianMatrix> RandomStructuredFamily(
    Prng& rng, int n, const std::vector<int>& ranks, int entry_bound) {
  // Unit upper triangular T with small entries: det T = 1.
  Matrix t = Matrix::Identity(n);
  const bool twist = rng.Coin();
  if (twist) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) t(i, j) = rng.UniformInt(-1, 1);
    }
  }
  std::vector<HermitianMatrix> out;
  out.reserve(ranks.size());
  for (int r : ranks) {
    if (r < 0 || r > n) throw std::invalid_argument("target rank outside [0, n]");
    if (r == 0) {
      out.push_back(HermitianMatrix::Zero(n));
      continue;
    }
    // Support of size between r and n, biased toward r.
    int size = r;
    while (size < n && rng.UniformInt(0, 2) == 0) ++size;
    std::vector<int> rows = AllRows(n);
    for (int i = n - 1; i > 0; --i) {
      std::swap(rows[i], rows[rng.UniformInt(0, i)]);
    }
    rows.resize(size);
    std::sort(rows.begin(), rows.end());
    HermitianMatrix m =
        CheckedGram(RandomFullRank(rng, n, r, entry_bound, rows), r);
    out.push_back(twist ? m.Congruence(t) : m);
  }
  return out;
}

std::vector<int> RandomRankProfile(Prng& rng, int n, int count) {
  std::vector<int> ranks(count);
  for (auto& r : ranks) {
    r = static_cast<int>(std::max(rng.UniformInt(0, n), rng.UniformInt(0, n)));
  }
  return ranks;
}

HermitianMatrix RandomHermitian(Prng& rng, int n, int entry_bound) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = rng.UniformInt(-entry_bound, entry_bound);
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = RandomEntry(rng, entry_bound);
      m(j, i) = m(i, j).Conj();
    }
  }
  return HermitianMatrix(std::move(m));
}

}  // namespace hlcert
