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


// Python bindings. Values cross the boundary as JSON text in the library's
// own encoding; the hlcert package converts to and from Python objects.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hlcert/hodge.hpp"
#include "hlcert/instance.hpp"
#include "hlcert/linalg.hpp"
#include "hlcert/mixed_discriminant.hpp"
#include "hlcert/polymatroid.hpp"
#include "hlcert/serialize.hpp"

namespace py = pybind11;
using pybind11::operator""_a;

namespace {

using hlcert::Json;

std::vector<hlcert::HermitianMatrix> Matrices(const std::string& text) {
  const Json j = hlcert::ParseJsonText(text);
  std::vector<hlcert::HermitianMatrix> out;
  for (const auto& m : j) out.push_back(hlcert::MatrixFromJson(m));
  return out;
}

hlcert::HermitianMatrix OneMatrix(const std::string& text) {
  return hlcert::MatrixFromJson(hlcert::ParseJsonText(text));
}

hlcert::HLInstance Instance(const std::string& mats, int n, int p, int q) {
  hlcert::HLInstance inst;
  inst.n = n;
  inst.p = p;
  inst.q = q;
  inst.forms = Matrices(mats);
  return inst;
}

}  // namespace

PYBIND11_MODULE(_hlcert, m) {
  m.doc() = "Exact HL/HR certificates for PSD Hermitian forms (JSON-level core)";
  py::register_exception<hlcert::SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<hlcert::ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("rank", [](const std::string& a) { return hlcert::Rank(OneMatrix(a)); }, "matrix"_a);
  m.def("is_psd", [](const std::string& a) { return hlcert::IsPsd(OneMatrix(a)); },
        "matrix"_a);
  m.def("char_poly", [](const std::string& a) {
        Json out = Json::array();
        for (const auto& e : hlcert::CharPolyCoefficients(OneMatrix(a))) {
          out.push_back(hlcert::RationalToJson(e));
        }
        return out.dump();
      }, "matrix"_a);
  m.def("mixed_discriminant", [](const std::string& mats) {
        return hlcert::FormatRational(hlcert::MixedDiscriminant(Matrices(mats)));
      }, "matrices"_a);
  m.def("intersection_number", [](const std::string& mats) {
        return hlcert::FormatRational(hlcert::IntersectionNumber(Matrices(mats)));
      }, "matrices"_a);
  m.def("criterion_hl", [](const std::string& mats, int n, int p, int q) {
        return hlcert::CertificateToJson(hlcert::CriterionHl(Instance(mats, n, p, q))).dump();
      }, "matrices"_a, "n"_a, "p"_a, "q"_a);
  m.def("direct_hl", [](const std::string& mats, int n, int p, int q) {
        return hlcert::CertificateToJson(hlcert::DirectHl(Instance(mats, n, p, q))).dump();
      }, "matrices"_a, "n"_a, "p"_a, "q"_a);
  m.def("hr_certify", [](const std::string& mats, int n, int p, int q, const std::string& eta) {
        hlcert::HLInstance inst = Instance(mats, n, p, q);
        inst.eta = OneMatrix(eta);
        const auto res = hlcert::HrCertify(inst);
        Json j = hlcert::CertificateToJson(res.certificate);
        j["primitive_dim"] = res.primitive.basis.size();
        return j.dump();
      }, "matrices"_a, "n"_a, "p"_a, "q"_a, "eta"_a);
  m.def("lorentzian_signature", [](const std::string& mats, int n) {
        const auto s = hlcert::LorentzianSignature(Matrices(mats), n);
        return py::make_tuple(s.positive, s.negative, s.zero);
      }, "matrices"_a, "n"_a);
  m.def("rank_table", [](const std::string& mats, int offset) {
        return hlcert::RankTableToJson(hlcert::RankFromMatrices(Matrices(mats), offset)).dump();
      }, "matrices"_a, "offset"_a = 0);
  m.def("check_axioms", [](const std::string& table) {
        const auto r = hlcert::RankTableFromJson(hlcert::ParseJsonText(table));
        return hlcert::AxiomReportToJson(hlcert::CheckAxioms(r)).dump();
      }, "table"_a);
  m.def("enumerate_points", [](const std::string& table) {
        const auto r = hlcert::RankTableFromJson(hlcert::ParseJsonText(table));
        return hlcert::EnumeratePoints(r).points;
      }, "table"_a);
  m.def("hl_support", [](const std::string& mats) { return hlcert::HlSupport(Matrices(mats)); },
        "matrices"_a);
  m.def("run", [](const std::string& text) {
        const auto rep = hlcert::Run(hlcert::ParseInstance(text));
        return py::make_tuple(rep.report.dump(), rep.ExitCode());
      }, "instance"_a);
  m.def("generate", [](std::uint64_t seed, int n, std::vector<int> ranks, int entry_bound) {
        const hlcert::GeneratorSpec spec{seed, n, std::move(ranks), entry_bound};
        return hlcert::InstanceToJson(hlcert::GeneratedInstance(spec)).dump();
      }, "seed"_a, "n"_a, "ranks"_a, "entry_bound"_a = 2);
}
