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

#ifndef HLCERT_SUBSETS_HPP_
#define HLCERT_SUBSETS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "hlcert/matrix.hpp"

namespace hlcert {

using SubsetMask = std::uint32_t;

inline constexpr int kMaxGroundSet = 20;

// Nonempty subsets of [m], smallest size first, lexicographic within a size.
std::vector<SubsetMask> SubsetsBySizeThenLex(int m);

// 1-based sorted element list of a subset mask.
std::vector<int> SubsetToList(SubsetMask mask);

// rank(sum_{i in I} A_i) for every mask I (entry 0 is 0). Sums are updated
// incrementally along a Gray code so each step adds or removes one matrix.
std::vector<int> SubsetSumRanks(std::span<const HermitianMatrix> mats,
                                std::size_t n);

}  // namespace hlcert

#endif  // HLCERT_SUBSETS_HPP_
