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

#include "hlcert/polymatroid.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "hlcert/hodge.hpp"
#include "hlcert/linalg.hpp"

namespace hlcert {
namespace {

std::string SubsetString(SubsetMask s) {
  std::string out = "[";
  bool first = true;
  for (int k : SubsetToList(s)) {
    if (!first) out += ",";
    out += std::to_string(k);
    first = false;
  }
  return out + "]";
}

class PointSearch {
 public:
  explicit PointSearch(const RankFunction& r)
      : r_(r), m_(r.m()), full_((SubsetMask{1} << m_) - 1), point_(m_, 0) {}

  std::vector<Point> Run() {
    total_ = r_(full_);
    if (total_ >= 0) Descend(0, 0);
    return std::move(out_);
  }

 private:
  // Every proper subset whose largest element is k respects its bound.
  bool PrefixFeasible(int k) const {
    const SubsetMask below = (SubsetMask{1} << k) - 1;
    for (SubsetMask rest = below;; rest = (rest - 1) & below) {
      const SubsetMask s = rest | (SubsetMask{1} << k);
      if (s != full_) {
        int sum = 0;
        for (SubsetMask t = s; t != 0; t &= t - 1) {
          sum += point_[std::countr_zero(t)];
        }
        if (sum > r_(s)) return false;
      }
      if (rest == 0) break;
    }
    return true;
  }

  void Descend(int k, int used) {
    if (k == m_ - 1) {
      point_[k] = total_ - used;
      if (PrefixFeasible(k)) out_.push_back(point_);
      return;
    }
    for (int v = 0; used + v <= total_; ++v) {
      point_[k] = v;
      if (!PrefixFeasible(k)) break;  // bounds only tighten as v grows
      Descend(k + 1, used + v);
    }
  }

  const RankFunction& r_;
  int m_;
  SubsetMask full_;
  int total_ = 0;
  Point point_;
  std::vector<Point> out_;
};

// Compositions of `total` into `parts` nonnegative parts, lexicographic.
void Compositions(int parts, int total, Point& cur, std::vector<Point>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    Compositions(parts, total - v, cur, out);
    cur.pop_back();
  }
}

void CheckSupportInput(std::span<const HermitianMatrix> mats) {
  if (mats.empty()) throw std::invalid_argument("HL support needs matrices");
  const std::size_t n = mats.front().n();
  if (mats.size() > n) throw std::invalid_argument("HL support needs m <= n");
  for (const auto& a : mats) {
    if (a.n() != n) throw std::invalid_argument("matrix size mismatch");
  }
}

}  // namespace

RankFunction::RankFunction(int m, std::vector<int> values,
                           Provenance provenance)
    : m_(m), values_(std::move(values)), provenance_(provenance) {
  if (m < 1 || m > kMaxGroundSet) {
    throw std::invalid_argument("ground set size out of range");
  }
  if (values_.size() != (std::size_t{1} << m)) {
    throw std::invalid_argument("rank table must list all 2^m subsets");
  }
}

RankFunction RankFromMatrices(std::span<const HermitianMatrix> mats,
                              int offset) {
  if (mats.empty()) throw std::invalid_argument("empty matrix family");
  const std::size_t n = mats.front().n();
  for (const auto& a : mats) {
    if (a.n() != n) throw std::invalid_argument("matrix size mismatch");
    if (!IsPsd(a)) throw std::invalid_argument("family must be semi-positive");
  }
  std::vector<int> values = SubsetSumRanks(mats, n);
  for (SubsetMask s : SubsetsBySizeThenLex(static_cast<int>(mats.size()))) {
    values[s] -= offset;
    if (values[s] < 0) {
      throw std::invalid_argument("not a valid rank table: r(" +
                                  SubsetString(s) + ") = " +
                                  std::to_string(values[s]) + " < 0");
    }
  }
  return RankFunction(static_cast<int>(mats.size()), std::move(values),
                      Provenance::kMatrixFamily);
}

AxiomReport CheckAxioms(const RankFunction& r) {
  AxiomReport rep;
  const int m = r.m();
  const SubsetMask total = SubsetMask{1} << m;
  rep.normalized = r(0) == 0;
  for (SubsetMask a = 0; a < total && rep.submodular; ++a) {
    for (SubsetMask b = a + 1; b < total; ++b) {
      if (r(a | b) + r(a & b) > r(a) + r(b)) {
        rep.submodular = false;
        rep.submodularity_violation = {SubsetToList(a), SubsetToList(b)};
        break;
      }
    }
  }
  // Chains reduce to single-element extensions.
  for (SubsetMask a = 0; a < total && rep.monotone; ++a) {
    for (int i = 0; i < m; ++i) {
      const SubsetMask b = a | (SubsetMask{1} << i);
      if (b != a && r(a) > r(b)) {
        rep.monotone = false;
        rep.monotonicity_violation = {SubsetToList(a), SubsetToList(b)};
        break;
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    if (r(SubsetMask{1} << i) < 1) {
      rep.loopless = false;
      rep.loop = i + 1;
      break;
    }
  }
  for (SubsetMask a = 0; a < total; ++a) {
    if (r(a) > std::popcount(a)) {
      rep.is_matroid = false;
      rep.matroid_violation = SubsetToList(a);
      break;
    }
  }
  return rep;
}

DiscretePolymatroid EnumeratePoints(const RankFunction& r) {
  return DiscretePolymatroid{r.m(), PointSearch(r).Run()};
}

std::optional<std::vector<Point>> HlSupportViaPolymatroid(
    std::span<const HermitianMatrix> mats) {
  CheckSupportInput(mats);
  const int m = static_cast<int>(mats.size());
  const int n = static_cast<int>(mats.front().n());
  std::optional<RankFunction> r;
  try {
    r.emplace(RankFromMatrices(mats, n - m));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  // Points must sum to m while r([m]) <= m always holds.
  if ((*r)((SubsetMask{1} << m) - 1) != m) return std::vector<Point>{};
  return EnumeratePoints(*r).points;
}

std::vector<Point> HlSupportViaCriterion(
    std::span<const HermitianMatrix> mats) {
  CheckSupportInput(mats);
  const int m = static_cast<int>(mats.size());
  const int n = static_cast<int>(mats.front().n());
  std::vector<Point> candidates;
  Point cur;
  Compositions(m, m, cur, candidates);
  std::vector<Point> out;
  for (const auto& v : candidates) {
    HLInstance inst;
    inst.n = n;
    inst.p = (n - m) / 2;
    inst.q = (n - m) - inst.p;
    for (int i = 0; i < m; ++i) {
      inst.forms.insert(inst.forms.end(), v[i], mats[i]);
    }
    if (CriterionHl(inst).holds()) out.push_back(v);
  }
  return out;
}

std::vector<Point> HlSupport(std::span<const HermitianMatrix> mats) {
  auto direct = HlSupportViaCriterion(mats);
  const auto poly = HlSupportViaPolymatroid(mats);
  if (poly && *poly != direct) {
    throw InternalError("HL support: polymatroid and criterion routes differ");
  }
  return direct;
}

std::vector<Point> MultidegreeSupport(const RankFunction& r, int dim_x) {
  const SubsetMask full = (SubsetMask{1} << r.m()) - 1;
  if (r(full) != dim_x) {
    throw std::invalid_argument("rank of the ground set must equal dim X");
  }
  return EnumeratePoints(r).points;
}

}  // namespace hlcert
