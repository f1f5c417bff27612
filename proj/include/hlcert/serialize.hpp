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


// JSON encodings shared by the CLI, the instance runner and the bindings.
// Rationals are "p/q" strings, Gaussian rationals {"re": .., "im": ..},
// subsets sorted 1-based integer lists.

#ifndef HLCERT_SERIALIZE_HPP_
#define HLCERT_SERIALIZE_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "hlcert/hodge.hpp"
#include "hlcert/linalg.hpp"
#include "hlcert/matrix.hpp"
#include "hlcert/polymatroid.hpp"

namespace hlcert {

using Json = nlohmann::ordered_json;

// Thrown for JSON that is well formed but does not describe a valid value.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json RationalToJson(const Rational& r);
// Accepts a "p/q" or "p" string, or a JSON integer.
Rational RationalFromJson(const Json& j);

Json GaussianToJson(const GaussianRational& z);
// Accepts {"re": r, "im": r} with "im" optional, or a bare rational.
GaussianRational GaussianFromJson(const Json& j);

Json MatrixToJson(const HermitianMatrix& m);
HermitianMatrix MatrixFromJson(const Json& j);

Json SubsetToJson(const std::vector<int>& s);

// A list of {"I": [..], "J": [..], "c": complex} records in basis order.
Json FormToJson(const PQForm& f);
PQForm FormFromJson(const Json& j, int n, int p, int q);

// {"verdict": "holds"|"fails", "failing_subset": [..]?, "witness": form?}
Json CertificateToJson(const Certificate& c);

Json InertiaToJson(const Inertia& s);

// {"m": m, "values": {"[]": 0, "[1]": .., ...}}, subsets by size then lex.
// On input "[]" may be omitted (it defaults to 0); every other subset must be
// present exactly once.
Json RankTableToJson(const RankFunction& r);
RankFunction RankTableFromJson(const Json& j);

Json AxiomReportToJson(const AxiomReport& a);

Json PointsToJson(const std::vector<Point>& points);

}  // namespace hlcert

#endif  // HLCERT_SERIALIZE_HPP_
