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

#include "hlcert/subsets.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hlcert/exterior.hpp"
#include "hlcert/linalg.hpp"

namespace hlcert {

std::vector<SubsetMask> SubsetsBySizeThenLex(int m) {
  if (m < 0 || m > kMaxGroundSet) {
    throw std::invalid_argument("ground set too large");
  }
  std::vector<SubsetMask> out;
  out.reserve((std::size_t{1} << m) - 1);
  for (int k = 1; k <= m; ++k) {
    for (MultiIndex s : Combinations(m, k)) out.push_back(s.mask());
  }
  return out;
}

std::vector<int> SubsetToList(SubsetMask mask) {
  return MultiIndex(mask).ToSequence();
}

std::vector<int> SubsetSumRanks(std::span<const HermitianMatrix> mats,
                                std::size_t n) {
  const int m = static_cast<int>(mats.size());
  if (m > kMaxGroundSet) throw std::invalid_argument("too many matrices");
  for (const auto& a : mats) {
    if (a.n() != n) throw std::invalid_argument("matrix size mismatch");
  }
  const std::size_t total = std::size_t{1} << m;
  std::vector<int> ranks(total, 0);
  Matrix sum(n, n);
  SubsetMask prev = 0;
  for (std::size_t step = 1; step < total; ++step) {
    const auto gray = static_cast<SubsetMask>(step ^ (step >> 1));
    const SubsetMask flipped = gray ^ prev;
    const int i = std::countr_zero(flipped);
    if (gray & flipped) {
      sum += mats[i].matrix();
    } else {
      sum -= mats[i].matrix();
    }
    ranks[gray] = Rank(sum);
    prev = gray;
  }
  return ranks;
}

}  // namespace hlcert
