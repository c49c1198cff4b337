#include <iostream>

#include <CLI11.hpp>

#include "pgsem/laws.hpp"
#include "session.hpp"

using namespace pgsem;
using nlohmann::ordered_json;

namespace {

struct Flags {
  cli::Inputs inputs;
  std::string target;
  std::size_t reduction = 0;
  bool json = false;
  std::uint64_t seed = laws::Options{}.seed;
  std::size_t iters = laws::Options{}.iters;
  std::string sentence;
  std::string suite = "all";
};

void add_input_flags(CLI::App* app, Flags& f) {
  app->add_option("--world", f.inputs.world, "World JSON (default: embedded chips world)");
  app->add_option("--lexicon", f.inputs.lexicon, "Lexicon TSV or JSON");
  app->add_option("--poset", f.inputs.poset, "Basic-type poset");
  app->add_flag("--json", f.json, "Emit JSON");
}

int cmd_parse(const Flags& f) {
  const cli::Session s(f.inputs);
  const auto r = cli::parse_report(s, f.sentence, f.target);
  std::cout << (f.json ? r.dump(2) + "\n" : cli::render_parse_report(r));
  return cli::kOk;
}

int cmd_eval(const Flags& f) {
  const cli::Session s(f.inputs);
  const auto r = cli::eval_report(s, f.sentence, f.target, f.reduction);
  std::cout << (f.json ? r.dump(2) + "\n" : cli::render_eval_report(r));
  return cli::kOk;
}

int cmd_laws(const Flags& f) {
  const laws::Options opts{f.seed, f.iters};
  std::vector<laws::Result> results;
  if (f.suite == "all") {
    results = laws::run_all(opts);
  } else {
    try {
      results = laws::run_suite(f.suite, opts);
    } catch (const std::invalid_argument& e) {
      throw cli::Failure{cli::kUsage, e.what()};
    }
  }
  bool ok = true;
  ordered_json out = ordered_json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (f.json) {
      out.push_back({{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
    } else {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name << " (" << r.cases << " cases)";
      if (!r.detail.empty()) std::cout << "  " << r.detail;
      std::cout << "\n";
    }
  }
  if (f.json) std::cout << ordered_json{{"seed", f.seed}, {"iters", f.iters}, {"passed", ok}, {"results", out}}.dump(2) << "\n";
  return ok ? cli::kOk : cli::kLaw;
}

int cmd_fixture_chips(const Flags& f) {
  bool ok = true;
  ordered_json out = ordered_json::array();
  for (const auto& g : fixtures::chips_golden()) {
    ok = ok && g.ok();
    if (f.json) {
      out.push_back({{"name", g.name}, {"expected", g.expected}, {"actual", g.actual}, {"ok", g.ok()}});
    } else {
      std::cout << (g.ok() ? "ok    " : "DIFF  ") << g.name << ": " << g.actual;
      if (!g.ok()) std::cout << "  (expected " << g.expected << ")";
      std::cout << "\n";
    }
  }
  if (f.json) std::cout << ordered_json{{"passed", ok}, {"checks", out}}.dump(2) << "\n";
  return ok ? cli::kOk : cli::kLaw;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pgsem: pregroup grammars, functional models and concept vectors"};
  app.require_subcommand(1);
  Flags f;

  auto* parse = app.add_subcommand("parse", "List every reduction of a sentence");
  parse->add_option("sentence", f.sentence, "Sentence")->required();
  parse->add_option("--target", f.target, "Target basic type (default: s, else the first that works)");
  add_input_flags(parse, f);

  auto* eval = app.add_subcommand("eval", "Evaluate a sentence in F and in the induced vector model");
  eval->add_option("sentence", f.sentence, "Sentence")->required();
  eval->add_option("--target", f.target, "Target basic type");
  eval->add_option("--reduction", f.reduction, "Index of the reduction to use (default 0)");
  add_input_flags(eval, f);

  auto* lawcmd = app.add_subcommand("laws", "Run the property suites");
  lawcmd->add_option("suite", f.suite, "Suite name or 'all'");
  lawcmd->add_option("--seed", f.seed, "Seed");
  lawcmd->add_option("--iters", f.iters, "Random cases per check");
  lawcmd->add_flag("--json", f.json, "Emit JSON");

  auto* chips = app.add_subcommand("fixture-chips", "Recompute the chips example and diff it against the golden values");
  chips->add_flag("--json", f.json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? cli::kOk : cli::kUsage;
  }

  try {
    if (*parse) return cmd_parse(f);
    if (*eval) return cmd_eval(f);
    if (*lawcmd) return cmd_laws(f);
    return cmd_fixture_chips(f);
  } catch (const cli::Failure& e) {
    std::cerr << "pgsem: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "pgsem: " << e.what() << "\n";
    return cli::kEval;
  }
}
