#include "listagree/error.hpp"
#include "listagree/harness.hpp"
#include "listagree/representation.hpp"
#include "listagree/serialization.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <string>

using namespace listagree;

namespace {

constexpr int kRan = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Output {
  std::string format = "json";
  std::string path;
  std::string csv_path;
};

void add_complex_options(CLI::App* cmd, ExperimentConfig& c) {
  cmd->add_option("--generator", c.generator, "complete | cycle | wheel | building | file")
      ->check(CLI::IsMember({"complete", "cycle", "wheel", "building", "file"}));
  cmd->add_option("--n", c.n, "vertices of the complete complex");
  cmd->add_option("--d", c.d, "dimension (complete, building)");
  cmd->add_option("--p", c.p, "field size of the building");
  cmd->add_option("--m", c.m, "cycle or wheel length");
  cmd->add_option("--complex", c.complex_path, "complex JSON file (sets --generator file)");
}

void add_run_options(CLI::App* cmd, ExperimentConfig& c, Output& out) {
  add_complex_options(cmd, c);
  cmd->add_option("--k", c.k, "face dimension of the local functions");
  cmd->add_option("--l", c.l, "list length");
  cmd->add_option("--input", c.input, "agreeing | corrupted | path to an input JSON file");
  cmd->add_option("--mode", c.mode, "exact | shot | monte-carlo")
      ->check(CLI::IsMember({"exact", "shot", "monte-carlo"}));
  cmd->add_option("--trials", c.trials, "trials for shot and monte-carlo modes");
  cmd->add_option("--seed", c.seed, "master seed");
  cmd->add_option("--workers", c.workers, "worker threads (0: LISTAGREE_WORKERS or all cores)");
  cmd->add_option("--format", out.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", out.path, "report file (default: stdout)");
  cmd->add_option("--csv", out.csv_path, "also write per-trial CSV here");
}

// Paths given as --input or --complex switch the corresponding source to "file".
void resolve_files(ExperimentConfig& c) {
  if (!c.complex_path.empty()) c.generator = "file";
  if (c.input != "agreeing" && c.input != "corrupted") {
    c.input_path = c.input;
    c.input = "file";
  }
}

void write(const std::string& text, const std::string& path) {
  if (path.empty())
    std::cout << text;
  else
    write_text_file(path, text);
}

int run(ExperimentConfig c, const Output& out) {
  resolve_files(c);
  const Report r = run_experiment(c);
  write(render_report(r, out.format), out.path);
  if (!out.csv_path.empty()) emit_report(r, "csv", out.csv_path);
  for (const Check& ch : r.checks)
    if (ch.status != "pass")
      std::cerr << ch.status << ": " << ch.name << (ch.detail.empty() ? "" : " (" + ch.detail + ")") << "\n";
  return r.any_failed() ? kCheckFailed : kRan;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"List-agreement testing on simplicial complexes"};
  app.require_subcommand(1);

  ExperimentConfig config;
  Output out;
  std::function<int()> action;

  auto* gen = app.add_subcommand("gen", "emit a complex as JSON");
  add_complex_options(gen, config);
  gen->add_option("--output", out.path, "output file (default: stdout)");
  gen->callback([&] {
    action = [&] {
      resolve_files(config);
      write(complex_to_json(build_complex(config)) + "\n", out.path);
      return kRan;
    };
  });

  auto* rep = app.add_subcommand("represent", "emit the representation complex at level k as JSON");
  add_complex_options(rep, config);
  rep->add_option("--k", config.k, "level");
  rep->add_option("--output", out.path, "output file (default: stdout)");
  rep->callback([&] {
    action = [&] {
      resolve_files(config);
      const auto X = std::make_shared<const SimplicialComplex>(build_complex(config));
      write(representation_to_json(*RepresentationComplex::build(X, config.k)) + "\n", out.path);
      return kRan;
    };
  });

  const std::pair<const char*, const char*> testers[] = {
      {"test-list-agreement", "list-agreement"}, {"test-direct-sum", "direct-sum"}, {"test-coboundary", "coboundary"}};
  for (const auto& [name, tester] : testers) {
    auto* cmd = app.add_subcommand(name, std::string("run the ") + tester + " tester");
    add_run_options(cmd, config, out);
    cmd->callback([&, tester = std::string(tester)] {
      config.tester = tester;
      action = [&] { return run(config, out); };
    });
  }

  auto* oracle = app.add_subcommand("oracle", "exhaustive distances");
  oracle->require_subcommand(1);
  const std::pair<const char*, const char*> oracles[] = {{"dist-agreeing", "oracle-agreeing"},
                                                         {"dist-coboundary", "oracle-coboundary"},
                                                         {"dist-direct-sum", "oracle-direct-sum"}};
  for (const auto& [name, tester] : oracles) {
    auto* cmd = oracle->add_subcommand(name);
    add_run_options(cmd, config, out);
    cmd->callback([&, tester = std::string(tester)] {
      config.tester = tester;
      action = [&] { return run(config, out); };
    });
  }

  auto* demo = app.add_subcommand("demo", "lower-bound demonstrations");
  demo->require_subcommand(1);
  auto* building = demo->add_subcommand("building-cycle", "the explicit cycle in SB(p,d)");
  add_run_options(building, config, out);
  building->callback([&] {
    config.generator = "building";
    config.tester = "building-cycle";
    if (building->count("--d") == 0) config.d = 1;
    action = [&] { return run(config, out); };
  });
  auto* lower = demo->add_subcommand("lower-bound", "an (l-1)-query adversary and its fooling inputs");
  add_run_options(lower, config, out);
  lower->callback([&] {
    config.tester = "adversary";
    action = [&] { return run(config, out); };
  });
  auto* coloring = demo->add_subcommand("coloring", "coloring candidates on a cycle");
  add_run_options(coloring, config, out);
  coloring->callback([&] {
    config.tester = "coloring";
    if (coloring->count("--generator") == 0) config.generator = "cycle";
    action = [&] { return run(config, out); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kRan : kUsage;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
