// Copyright the supergrade developers
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

// Command line front end.  Flags are collected into a RunConfig and handed to
// run(); a --config file (same key=value grammar) is appended after the CLI
// flags, so explicit flags win.  Exit codes: 0 verdict pass, 1 verdict fail,
// 2 configuration or usage error.  JSON output is byte-deterministic; the
// elapsed-time line appears in text output only.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "supergrade/config.hpp"
#include "supergrade/report.hpp"

namespace {

struct SubState {
  CLI::App *cmd = nullptr;
  std::map<std::string, std::string> values;
  std::vector<std::pair<std::string, CLI::Option *>> opts;
  bool no_dedup = false;
  bool ignore_bounds = false;
  std::string format = "text";
  CLI::Option *format_opt = nullptr;
  std::string config_path;
};

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{
      "supergrade: exact group gradings, superinvolutions and graded structures\n"
      "on matrix superalgebras over cyclotomic fields"};
  app.require_subcommand(1);

  std::map<std::string, SubState> subs;
  auto add_sub = [&](const std::string &name, const std::string &desc,
                     std::vector<std::pair<const char *, const char *>> options) -> SubState & {
    SubState &s = subs[name];
    s.cmd = app.add_subcommand(name, desc);
    for (const auto &[flag, key] : options) {
      CLI::Option *opt = s.cmd->add_option(std::string("--") + flag, s.values[key]);
      s.opts.emplace_back(key, opt);
    }
    s.format_opt = s.cmd->add_option("--format", s.format, "Output format (text | json)")
                       ->check(CLI::IsMember({"text", "json"}));
    s.cmd->add_option("--config", s.config_path,
                      "File with further key=value arguments (explicit flags win)");
    return s;
  };

  add_sub("group", "Describe a finite abelian group", {{"group", "group"}});
  add_sub("grade", "Build a grading from a spec and check its invariants",
          {{"spec", "spec"}});
  add_sub("involution", "Build a named superinvolution and check the axiom suite",
          {{"sig", "sig"}, {"inv", "inv"}});
  SubState &en = add_sub("enumerate",
                         "Enumerate admissible elementary instances and cross-check the "
                         "admissibility predicate against the direct gradedness test",
                         {{"group", "group"}, {"sig", "sig"}, {"inv", "inv"}});
  en.cmd->add_flag("--no-dedup", en.no_dedup, "Skip the equivalence-class count");
  en.cmd->add_flag("--ignore-bounds", en.ignore_bounds, "Lift the built-in search bounds");
  add_sub("falsify",
          "Scan a bounded family for counterexample compatibility (lemma=5.1 with a "
          "typeq spec, or thm=4.3 with k)",
          {{"lemma", "lemma"},
           {"thm", "thm"},
           {"spec", "spec"},
           {"k", "k"},
           {"max-matrix-size", "max_matrix_size"}});
  add_sub("verify",
          "Verify a claim-catalog entry on a given instance "
          "(thm = 5.2 | 5.3 | 6.5 | 6.8 | 7.1 | 7.2 | 7.3 | 7.4)",
          {{"thm", "thm"},
           {"lemma", "lemma"},
           {"spec", "spec"},
           {"inv", "inv"},
           {"group", "group"},
           {"sig", "sig"},
           {"elem", "elem"},
           {"fine", "fine"}});
  add_sub("structure",
          "Build a graded Jordan or Lie structure (kind = osp-jordan | p-jordan | b-lie) "
          "from group/n/m/theta or from an instance spec",
          {{"kind", "kind"},
           {"spec", "spec"},
           {"group", "group"},
           {"n", "n"},
           {"m", "m"},
           {"theta", "theta"},
           {"inv", "inv"}});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  SubState &s = subs[app.get_subcommands().front()->get_name()];
  supergrade::RunConfig cfg;
  cfg.command = s.cmd->get_name();
  cfg.format = s.format;
  for (const auto &[key, opt] : s.opts)
    if (opt->count() > 0) cfg.args.push_back(supergrade::KeyValue{key, s.values[key], 1, 1});
  if (s.no_dedup) cfg.args.push_back(supergrade::KeyValue{"dedup", "0", 1, 1});
  if (s.ignore_bounds) cfg.args.push_back(supergrade::KeyValue{"ignore_bounds", "1", 1, 1});

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (!s.config_path.empty()) {
      std::ifstream in(s.config_path);
      if (!in) {
        std::cerr << "config error: cannot open " << s.config_path << "\n";
        return 2;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      supergrade::RunConfig file_cfg = supergrade::parse_config(buf.str());
      if (!file_cfg.command.empty() && file_cfg.command != cfg.command) {
        std::cerr << "config error: config file names command '" << file_cfg.command
                  << "', the CLI invoked '" << cfg.command << "'\n";
        return 2;
      }
      for (auto &kv : file_cfg.args) cfg.args.push_back(std::move(kv));
      if (s.format_opt->count() == 0) cfg.format = file_cfg.format;
    }

    const supergrade::Report report = supergrade::run(cfg);
    if (cfg.format == "json") {
      std::cout << supergrade::report_to_json(report);
    } else {
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::cout << supergrade::report_to_text(report, secs);
    }
    return report.passed() ? 0 : 1;
  } catch (const supergrade::SpecError &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
