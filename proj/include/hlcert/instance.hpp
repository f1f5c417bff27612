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


// Instance files: a dimension, named matrices and an ordered task list.
//
//   {"schema": 1, "n": 3,
//    "matrices": {"A": [[..], ..], ...},
//    "tasks": [{"kind": "hl-certify", "matrices": ["A"], "p": 1, "q": 1}]}
//
// Running a file yields {"schema": 1, "results": {"0": {...}, ...}}, keyed by
// task index. A task that cannot be executed reports {"error": message} and
// later tasks still run.

#ifndef HLCERT_INSTANCE_HPP_
#define HLCERT_INSTANCE_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hlcert/generator.hpp"
#include "hlcert/serialize.hpp"

namespace hlcert {

inline constexpr int kSchemaVersion = 1;

// Malformed JSON text; carries the 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct Task {
  std::string kind;
  Json params;  // every field except "kind", canonicalized
};

struct InstanceFile {
  int n = 0;
  std::vector<std::pair<std::string, HermitianMatrix>> matrices;
  std::vector<Task> tasks;

  const HermitianMatrix* Find(std::string_view name) const;
};

const std::vector<std::string>& TaskKinds();
// Tasks whose result carries a "verdict".
bool IsVerdictBearing(std::string_view kind);

Json ParseJsonText(std::string_view text);
// Throws ParseError or SchemaError.
InstanceFile ParseInstance(std::string_view text);
InstanceFile InstanceFromJson(const Json& j);
Json InstanceToJson(const InstanceFile& f);
// InstanceToJson(InstanceFromJson(j)).
Json Canonicalize(const Json& j);

struct RunReport {
  Json report;
  bool all_hold = true;
  bool any_error = false;

  // 0 all verdicts hold, 1 some verdict fails, 2 some task errored.
  int ExitCode() const { return any_error ? 2 : (all_hold ? 0 : 1); }
};

// Executes the tasks in order; if `only_kind` is nonempty, tasks of other
// kinds are skipped (and absent from the report).
RunReport Run(const InstanceFile& f, std::string_view only_kind = {});

// Result object of a single task; throws on semantic errors.
Json RunTask(const InstanceFile& f, const Task& task);

// A task-free instance holding the generated matrices as "G1", "G2", ...
InstanceFile GeneratedInstance(const GeneratorSpec& spec);

}  // namespace hlcert

#endif  // HLCERT_INSTANCE_HPP_
