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

#ifndef HLCERT_POLYMATROID_HPP_
#define HLCERT_POLYMATROID_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hlcert/matrix.hpp"
#include "hlcert/subsets.hpp"

namespace hlcert {

enum class Provenance { kMatrixFamily, kUserTable };

// Integer set function on [m], stored as a complete table indexed by subset
// mask.
class RankFunction {
 public:
  // `values` must have exactly 2^m entries.
  RankFunction(int m, std::vector<int> values, Provenance provenance);

  int m() const { return m_; }
  int operator()(SubsetMask s) const { return values_.at(s); }
  const std::vector<int>& values() const { return values_; }
  Provenance provenance() const { return provenance_; }

  friend bool operator==(const RankFunction& a, const RankFunction& b) {
    return a.m_ == b.m_ && a.values_ == b.values_;
  }

 private:
  int m_;
  std::vector<int> values_;
  Provenance provenance_;
};

// r(I) = rank(sum_{i in I} A_i) - offset for nonempty I, r(empty) = 0.
// Throws std::invalid_argument naming the first subset that goes negative,
// or on non-PSD input.
RankFunction RankFromMatrices(std::span<const HermitianMatrix> mats,
                              int offset = 0);

struct AxiomReport {
  bool submodular = true;
  bool monotone = true;
  bool normalized = true;
  bool loopless = true;
  bool is_matroid = true;
  // First violation found for each axiom, as 1-based subsets.
  std::optional<std::pair<std::vector<int>, std::vector<int>>>
      submodularity_violation;
  std::optional<std::pair<std::vector<int>, std::vector<int>>>
      monotonicity_violation;
  std::optional<int> loop;  // 1-based element of rank 0
  std::optional<std::vector<int>> matroid_violation;

  bool IsPolymatroid() const { return submodular && monotone && normalized; }
};

AxiomReport CheckAxioms(const RankFunction& r);

using Point = std::vector<int>;

struct DiscretePolymatroid {
  int m = 0;
  std::vector<Point> points;  // lexicographic order
};

// All n in N^m with n_[m] = r([m]) and n_I <= r(I) for every proper I, by
// depth-first search with prefix pruning.
DiscretePolymatroid EnumeratePoints(const RankFunction& r);

// {n : sum n_i = m, alpha_1^n_1 ... alpha_m^n_m has HL} for m PSD matrices in
// dimension n >= m.
std::vector<Point> HlSupport(std::span<const HermitianMatrix> mats);

// The two routes separately. The polymatroid route is nullopt when the offset
// table r(I) = rank(A_I) - (n - m) goes negative.
std::optional<std::vector<Point>> HlSupportViaPolymatroid(
    std::span<const HermitianMatrix> mats);
std::vector<Point> HlSupportViaCriterion(std::span<const HermitianMatrix> mats);

// Multidegree support from the table I -> dim pi_I(X). Requires
// r([m]) = dim_x (std::invalid_argument otherwise).
std::vector<Point> MultidegreeSupport(const RankFunction& r, int dim_x);

}  // namespace hlcert

#endif  // HLCERT_POLYMATROID_HPP_
