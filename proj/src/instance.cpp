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


#include "hlcert/instance.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "hlcert/linalg.hpp"
#include "hlcert/mixed_discriminant.hpp"

namespace hlcert {
namespace {

constexpr std::array<const char*, 7> kParamOrder = {
    "matrix", "matrices", "p", "q", "eta", "method", "rank_table"};

std::pair<std::size_t, std::size_t> LineAndColumn(std::string_view text,
                                                  std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Json CanonicalParams(const std::string& kind, const Json& task) {
  for (const auto& [key, value] : task.items()) {
    if (key == "kind") continue;
    if (std::find_if(kParamOrder.begin(), kParamOrder.end(), [&](const char* k) {
          return key == k;
        }) == kParamOrder.end()) {
      throw SchemaError("task \"" + kind + "\": unknown field \"" + key + "\"");
    }
  }
  Json out = Json::object();
  for (const char* key : kParamOrder) {
    if (!task.contains(key)) continue;
    const Json& v = task.at(key);
    const std::string k = key;
    if (k == "matrix" || k == "eta" || k == "method") {
      if (!v.is_string()) throw SchemaError("\"" + k + "\" must be a string");
      if (k == "method" && v != "criterion" && v != "direct") {
        throw SchemaError("method must be \"criterion\" or \"direct\"");
      }
    } else if (k == "matrices") {
      if (!v.is_array()) throw SchemaError("\"matrices\" must be a list");
      for (const auto& e : v) {
        if (!e.is_string()) throw SchemaError("matrix names must be strings");
      }
    } else if (k == "p" || k == "q") {
      if (!v.is_number_integer()) throw SchemaError("\"" + k + "\" must be an integer");
    } else if (k == "rank_table") {
      out[k] = RankTableToJson(RankTableFromJson(v));
      continue;
    }
    out[k] = v;
  }
  return out;
}

const Json& Param(const Task& t, const char* key) {
  if (!t.params.contains(key)) {
    throw std::invalid_argument("task \"" + t.kind + "\" needs \"" + key + "\"");
  }
  return t.params.at(key);
}

const HermitianMatrix& Lookup(const InstanceFile& f, const std::string& name) {
  const HermitianMatrix* m = f.Find(name);
  if (m == nullptr) throw std::invalid_argument("undefined matrix \"" + name + "\"");
  return *m;
}

std::vector<HermitianMatrix> Matrices(const InstanceFile& f, const Task& t) {
  std::vector<HermitianMatrix> out;
  for (const auto& name : Param(t, "matrices")) {
    out.push_back(Lookup(f, name.get<std::string>()));
  }
  return out;
}

HLInstance MakeHlInstance(const InstanceFile& f, const Task& t, bool with_eta) {
  HLInstance inst;
  inst.n = f.n;
  inst.p = Param(t, "p").get<int>();
  inst.q = Param(t, "q").get<int>();
  inst.forms = Matrices(f, t);
  if (with_eta) inst.eta = Lookup(f, Param(t, "eta").get<std::string>());
  return inst;
}

RankFunction TableOrMatrices(const InstanceFile& f, const Task& t) {
  if (t.params.contains("rank_table")) return RankTableFromJson(t.params.at("rank_table"));
  return RankFromMatrices(Matrices(f, t));
}

Json RunNd(const InstanceFile& f, const Task& t) {
  Json j;
  j["nd"] = Rank(Lookup(f, Param(t, "matrix").get<std::string>()));
  return j;
}

Json RunPsdCheck(const InstanceFile& f, const Task& t) {
  const HermitianMatrix& a = Lookup(f, Param(t, "matrix").get<std::string>());
  Json coeffs = Json::array();
  for (const auto& e : CharPolyCoefficients(a)) coeffs.push_back(RationalToJson(e));
  Json j;
  j["psd"] = IsPsd(a);
  j["char_poly"] = std::move(coeffs);
  return j;
}

Json RunMixedDisc(const InstanceFile& f, const Task& t) {
  const auto mats = Matrices(f, t);
  Json j;
  j["mixed_discriminant"] = RationalToJson(MixedDiscriminant(mats));
  if (std::all_of(mats.begin(), mats.end(), [](const auto& a) { return IsPsd(a); })) {
    const PositivityCertificate c = PanovPositivity(mats);
    j["positive"] = c.positive;
    if (c.witness) j["witness"] = SubsetToJson(*c.witness);
  }
  return j;
}

Json RunIntersection(const InstanceFile& f, const Task& t) {
  Json j;
  j["intersection_number"] = RationalToJson(IntersectionNumber(Matrices(f, t)));
  return j;
}

Json RunHlCertify(const InstanceFile& f, const Task& t) {
  const HLInstance inst = MakeHlInstance(f, t, /*with_eta=*/false);
  const bool direct = t.params.value("method", "criterion") == "direct";
  return CertificateToJson(direct ? DirectHl(inst) : CriterionHl(inst));
}

Json RunHrCertify(const InstanceFile& f, const Task& t) {
  return CertificateToJson(HrCertify(MakeHlInstance(f, t, true)).certificate);
}

Json RunSignature(const InstanceFile& f, const Task& t) {
  const Inertia s = LorentzianSignature(Matrices(f, t), f.n);
  Json j = InertiaToJson(s);
  j["lorentzian"] = s.positive == 1 && s.negative == f.n * f.n - 1 && s.zero == 0;
  return j;
}

Json RunLefschetz(const InstanceFile& f, const Task& t) {
  const LefschetzDecomposition d = Lefschetz(MakeHlInstance(f, t, true));
  Json j;
  j["image_dim"] = d.image_dim;
  j["primitive_dim"] = d.primitive_dim;
  j["total_dim"] = d.total_dim;
  j["direct_sum"] = d.direct_sum;
  j["q_orthogonal"] = d.q_orthogonal;
  j["dimension_identity"] = d.dimension_identity;
  return j;
}

Json RunAxioms(const InstanceFile& f, const Task& t) {
  const RankFunction r = TableOrMatrices(f, t);
  Json j = AxiomReportToJson(CheckAxioms(r));
  j["rank_table"] = RankTableToJson(r);
  return j;
}

Json RunEnumerate(const InstanceFile& f, const Task& t) {
  Json j;
  j["points"] = PointsToJson(EnumeratePoints(TableOrMatrices(f, t)).points);
  return j;
}

Json RunHlSupport(const InstanceFile& f, const Task& t) {
  Json j;
  j["points"] = PointsToJson(HlSupport(Matrices(f, t)));
  return j;
}

}  // namespace

const HermitianMatrix* InstanceFile::Find(std::string_view name) const {
  for (const auto& [k, m] : matrices) {
    if (k == name) return &m;
  }
  return nullptr;
}

const std::vector<std::string>& TaskKinds() {
  static const std::vector<std::string> kinds = {
      "nd",        "psd-check",          "mixed-disc",
      "intersection", "hl-certify",      "hr-certify",
      "signature", "lefschetz",          "polymatroid-axioms",
      "enumerate-support", "hl-support"};
  return kinds;
}

bool IsVerdictBearing(std::string_view kind) {
  return kind == "hl-certify" || kind == "hr-certify";
}

Json ParseJsonText(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto [line, column] = LineAndColumn(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("JSON parse error at line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ": " + e.what(),
                     line, column);
  }
}

InstanceFile ParseInstance(std::string_view text) {
  return InstanceFromJson(ParseJsonText(text));
}

InstanceFile InstanceFromJson(const Json& j) {
  if (!j.is_object()) throw SchemaError("instance must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "schema" && key != "n" && key != "matrices" && key != "tasks") {
      throw SchemaError("unknown top-level field \"" + key + "\"");
    }
  }
  if (!j.contains("schema") || j.at("schema") != kSchemaVersion) {
    throw SchemaError("expected \"schema\": 1");
  }
  InstanceFile f;
  if (!j.contains("n") || !j.at("n").is_number_integer()) {
    throw SchemaError("\"n\" must be an integer");
  }
  f.n = j.at("n").get<int>();
  if (f.n < 1 || f.n > kMaxDimension) throw SchemaError("\"n\" out of range");
  if (j.contains("matrices")) {
    const Json& mats = j.at("matrices");
    if (!mats.is_object()) throw SchemaError("\"matrices\" must be an object");
    for (const auto& [name, value] : mats.items()) {
      HermitianMatrix m = MatrixFromJson(value);
      if (static_cast<int>(m.n()) != f.n) {
        throw SchemaError("matrix \"" + name + "\" is not n x n");
      }
      f.matrices.emplace_back(name, std::move(m));
    }
  }
  if (j.contains("tasks")) {
    const Json& tasks = j.at("tasks");
    if (!tasks.is_array()) throw SchemaError("\"tasks\" must be a list");
    for (const auto& t : tasks) {
      if (!t.is_object() || !t.contains("kind") || !t.at("kind").is_string()) {
        throw SchemaError("each task needs a string \"kind\"");
      }
      const std::string kind = t.at("kind").get<std::string>();
      const auto& kinds = TaskKinds();
      if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) {
        throw SchemaError("unknown task kind \"" + kind + "\"");
      }
      f.tasks.push_back(Task{kind, CanonicalParams(kind, t)});
    }
  }
  return f;
}

Json InstanceToJson(const InstanceFile& f) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["n"] = f.n;
  Json mats = Json::object();
  for (const auto& [name, m] : f.matrices) mats[name] = MatrixToJson(m);
  j["matrices"] = std::move(mats);
  Json tasks = Json::array();
  for (const auto& t : f.tasks) {
    Json tj;
    tj["kind"] = t.kind;
    for (const auto& [key, value] : t.params.items()) tj[key] = value;
    tasks.push_back(std::move(tj));
  }
  j["tasks"] = std::move(tasks);
  return j;
}

Json Canonicalize(const Json& j) { return InstanceToJson(InstanceFromJson(j)); }

Json RunTask(const InstanceFile& f, const Task& t) {
  using Handler = Json (*)(const InstanceFile&, const Task&);
  static const std::vector<std::pair<std::string, Handler>> handlers = {
      {"nd", RunNd},
      {"psd-check", RunPsdCheck},
      {"mixed-disc", RunMixedDisc},
      {"intersection", RunIntersection},
      {"hl-certify", RunHlCertify},
      {"hr-certify", RunHrCertify},
      {"signature", RunSignature},
      {"lefschetz", RunLefschetz},
      {"polymatroid-axioms", RunAxioms},
      {"enumerate-support", RunEnumerate},
      {"hl-support", RunHlSupport},
  };
  for (const auto& [kind, handler] : handlers) {
    if (kind == t.kind) return handler(f, t);
  }
  throw std::invalid_argument("unknown task kind \"" + t.kind + "\"");
}

RunReport Run(const InstanceFile& f, std::string_view only_kind) {
  RunReport rep;
  Json results = Json::object();
  for (std::size_t k = 0; k < f.tasks.size(); ++k) {
    const Task& t = f.tasks[k];
    if (!only_kind.empty() && t.kind != only_kind) continue;
    Json out;
    try {
      out = RunTask(f, t);
      if (IsVerdictBearing(t.kind) && out.at("verdict") != "holds") {
        rep.all_hold = false;
      }
    } catch (const std::invalid_argument& e) {
      out = Json::object();
      out["error"] = e.what();
      rep.any_error = true;
    } catch (const std::domain_error& e) {
      out = Json::object();
      out["error"] = e.what();
      rep.any_error = true;
    }
    results[std::to_string(k)] = std::move(out);
  }
  rep.report["schema"] = kSchemaVersion;
  rep.report["results"] = std::move(results);
  return rep;
}

InstanceFile GeneratedInstance(const GeneratorSpec& spec) {
  InstanceFile f;
  f.n = spec.n;
  const auto mats = GeneratePsd(spec);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    f.matrices.emplace_back("G" + std::to_string(k + 1), mats[k]);
  }
  return f;
}

}  // namespace hlcert
