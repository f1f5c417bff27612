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


#include "hlcert/serialize.hpp"

#include <map>
#include <string>

namespace hlcert {
namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int IntFromJson(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw SchemaError(std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

std::vector<int> IntListFromJson(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be a list");
  std::vector<int> out;
  for (const auto& e : j) out.push_back(IntFromJson(e, what));
  return out;
}

MultiIndex IndexFromJson(const Json& j, int n) {
  const auto seq = IntListFromJson(j, "multi-index");
  try {
    return MultiIndex::FromSequence(seq, n);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

}  // namespace

Json RationalToJson(const Rational& r) { return FormatRational(r); }

Rational RationalFromJson(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SchemaError("rational must be a \"p/q\" string");
  try {
    return ParseRational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

Json GaussianToJson(const GaussianRational& z) {
  Json j;
  j["re"] = RationalToJson(z.re());
  j["im"] = RationalToJson(z.im());
  return j;
}

GaussianRational GaussianFromJson(const Json& j) {
  if (!j.is_object()) return GaussianRational(RationalFromJson(j));
  for (const auto& [key, value] : j.items()) {
    if (key != "re" && key != "im") {
      throw SchemaError("unexpected field \"" + key + "\" in complex entry");
    }
  }
  Rational im = j.contains("im") ? RationalFromJson(j.at("im")) : Rational(0);
  return GaussianRational(RationalFromJson(Field(j, "re")), std::move(im));
}

Json MatrixToJson(const HermitianMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.n(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.n(); ++c) row.push_back(GaussianToJson(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

HermitianMatrix MatrixFromJson(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw SchemaError("matrix must be a nonempty list of rows");
  }
  const std::size_t n = j.size();
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) {
      throw SchemaError("matrix must be square");
    }
    for (std::size_t c = 0; c < n; ++c) m(r, c) = GaussianFromJson(j[r][c]);
  }
  if (!m.IsHermitian()) throw SchemaError("matrix is not Hermitian");
  return HermitianMatrix(std::move(m));
}

Json SubsetToJson(const std::vector<int>& s) {
  Json j = Json::array();
  for (int k : s) j.push_back(k);
  return j;
}

Json FormToJson(const PQForm& f) {
  Json terms = Json::array();
  for (const auto& [key, c] : f.terms()) {
    Json t;
    t["I"] = SubsetToJson(key.first.ToSequence());
    t["J"] = SubsetToJson(key.second.ToSequence());
    t["c"] = GaussianToJson(c);
    terms.push_back(std::move(t));
  }
  return terms;
}

PQForm FormFromJson(const Json& j, int n, int p, int q) {
  if (n < 0 || n > kMaxDimension) throw SchemaError("dimension out of range");
  if (!j.is_array()) throw SchemaError("form must be a list of terms");
  PQForm f(n, p, q);
  for (const auto& t : j) {
    const MultiIndex i = IndexFromJson(Field(t, "I"), n);
    const MultiIndex k = IndexFromJson(Field(t, "J"), n);
    if (i.size() != p || k.size() != q) {
      throw SchemaError("term does not have bidegree (p, q)");
    }
    f.AddTerm(i, k, GaussianFromJson(Field(t, "c")));
  }
  return f;
}

Json CertificateToJson(const Certificate& c) {
  Json j;
  j["verdict"] = c.holds() ? "holds" : "fails";
  if (c.failing_subset) j["failing_subset"] = SubsetToJson(*c.failing_subset);
  if (c.kernel_witness) j["witness"] = FormToJson(*c.kernel_witness);
  return j;
}

Json InertiaToJson(const Inertia& s) {
  Json j;
  j["positive"] = s.positive;
  j["negative"] = s.negative;
  j["zero"] = s.zero;
  return j;
}

Json RankTableToJson(const RankFunction& r) {
  Json values;
  values["[]"] = r(0);
  for (SubsetMask s : SubsetsBySizeThenLex(r.m())) {
    values[SubsetToJson(SubsetToList(s)).dump()] = r(s);
  }
  Json j;
  j["m"] = r.m();
  j["values"] = std::move(values);
  return j;
}

RankFunction RankTableFromJson(const Json& j) {
  const int m = IntFromJson(Field(j, "m"), "m");
  if (m < 1 || m > kMaxGroundSet) throw SchemaError("m out of range");
  const Json& values = Field(j, "values");
  if (!values.is_object()) throw SchemaError("values must be an object");
  const SubsetMask count = SubsetMask{1} << m;
  std::vector<int> table(count, 0);
  std::vector<bool> seen(count, false);
  for (const auto& [key, value] : values.items()) {
    Json parsed = Json::parse(key, nullptr, /*allow_exceptions=*/false);
    if (parsed.is_discarded()) throw SchemaError("bad subset key " + key);
    const auto seq = IntListFromJson(parsed, "subset key");
    SubsetMask s = 0;
    for (std::size_t t = 0; t < seq.size(); ++t) {
      if (seq[t] < 1 || seq[t] > m || (t > 0 && seq[t] <= seq[t - 1])) {
        throw SchemaError("subset key " + key +
                          " must be sorted, distinct, within [1, m]");
      }
      s |= SubsetMask{1} << (seq[t] - 1);
    }
    if (seen[s]) throw SchemaError("duplicate subset key " + key);
    seen[s] = true;
    table[s] = IntFromJson(value, "rank value");
  }
  for (SubsetMask s = 1; s < count; ++s) {
    if (!seen[s]) {
      throw SchemaError("rank table misses subset " +
                        SubsetToJson(SubsetToList(s)).dump());
    }
  }
  return RankFunction(m, std::move(table), Provenance::kUserTable);
}

Json AxiomReportToJson(const AxiomReport& a) {
  Json j;
  j["polymatroid"] = a.IsPolymatroid();
  j["normalized"] = a.normalized;
  j["monotone"] = a.monotone;
  j["submodular"] = a.submodular;
  j["loopless"] = a.loopless;
  j["matroid"] = a.is_matroid;
  if (a.submodularity_violation) {
    j["submodularity_violation"] = {SubsetToJson(a.submodularity_violation->first),
                                    SubsetToJson(a.submodularity_violation->second)};
  }
  if (a.monotonicity_violation) {
    j["monotonicity_violation"] = {SubsetToJson(a.monotonicity_violation->first),
                                   SubsetToJson(a.monotonicity_violation->second)};
  }
  if (a.loop) j["loop"] = *a.loop;
  if (a.matroid_violation) j["matroid_violation"] = SubsetToJson(*a.matroid_violation);
  return j;
}

Json PointsToJson(const std::vector<Point>& points) {
  Json j = Json::array();
  for (const auto& p : points) j.push_back(SubsetToJson(p));
  return j;
}

}  // namespace hlcert
