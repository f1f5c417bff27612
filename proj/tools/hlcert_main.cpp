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


// hlcert: run instance files and generate seeded PSD instances.
//
//   hlcert run --input file.json [--output out.json] [--pretty]
//   hlcert hl-certify --input file.json     (only the hl-certify tasks)
//   hlcert generate --seed 7 --n 3 --ranks 1,2,3 [--entry-bound 2]
//
// Exit status: 0 all verdicts hold, 1 a verdict fails, 2 bad input or a task
// error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hlcert/instance.hpp"

namespace {

struct Options {
  std::string input = "-";
  std::string output = "-";
  bool pretty = false;
  std::uint64_t seed = 0;
  int n = 0;
  std::vector<int> ranks;
  int entry_bound = 2;
};

std::string ReadAll(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

void Emit(const hlcert::Json& j, const Options& opt) {
  const std::string text = opt.pretty ? j.dump(2) : j.dump();
  if (opt.output == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw std::runtime_error("cannot write " + opt.output);
  out << text << "\n";
}

void AddIoFlags(CLI::App* cmd, Options& opt, bool with_input) {
  if (with_input) {
    cmd->add_option("--input", opt.input, "Instance file ('-' for stdin)");
  }
  cmd->add_option("--output", opt.output, "Report path ('-' for stdout)");
  cmd->add_flag("--pretty", opt.pretty, "Indent the JSON output");
}

int RunFile(const Options& opt, const std::string& only_kind) {
  const hlcert::InstanceFile f = hlcert::ParseInstance(ReadAll(opt.input));
  const hlcert::RunReport rep = hlcert::Run(f, only_kind);
  Emit(rep.report, opt);
  return rep.ExitCode();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for hard Lefschetz and Hodge-Riemann "
               "properties of PSD Hermitian forms"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* run = app.add_subcommand("run", "Run every task of an instance file");
  AddIoFlags(run, opt, true);

  std::vector<std::pair<CLI::App*, std::string>> filtered;
  for (const auto& kind : hlcert::TaskKinds()) {
    CLI::App* cmd = app.add_subcommand(kind, "Run only the " + kind + " tasks");
    AddIoFlags(cmd, opt, true);
    filtered.emplace_back(cmd, kind);
  }

  CLI::App* gen = app.add_subcommand("generate", "Emit a seeded PSD instance");
  AddIoFlags(gen, opt, false);
  gen->add_option("--seed", opt.seed, "64-bit seed")->required();
  gen->add_option("--n", opt.n, "Matrix size")->required();
  gen->add_option("--ranks", opt.ranks, "Target ranks")->required()->delimiter(',');
  gen->add_option("--entry-bound", opt.entry_bound, "Bound on entries of B");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return RunFile(opt, "");
    for (const auto& [cmd, kind] : filtered) {
      if (cmd->parsed()) return RunFile(opt, kind);
    }
    if (gen->parsed()) {
      hlcert::GeneratorSpec spec{opt.seed, opt.n, opt.ranks, opt.entry_bound};
      Emit(hlcert::InstanceToJson(hlcert::GeneratedInstance(spec)), opt);
      return 0;
    }
  } catch (const hlcert::ParseError& e) {
    std::cerr << "hlcert: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hlcert: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
