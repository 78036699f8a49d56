#include <iostream>

#include <CLI11.hpp>

#include "app/commands.hpp"

using namespace sqzero::app;

namespace {

void add_common(CLI::App* cmd, CommonOptions& c) {
  cmd->add_option("--seed", c.seed, "Seed for all randomized components");
  cmd->add_option("--nmf-restarts", c.nmf_restarts, "Restarts of the NMF upper-bound heuristic");
  cmd->add_option("--max-cover-time", c.max_cover_time, "Budget in seconds for the rectangle-cover search");
  cmd->add_option("--time-limit", c.time_limit, "Overall budget in seconds for exact searches");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square-zero products and commutators of nonnegative matrices"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Decide whether T is a product of nonnegative square-zero matrices");
  a->add_option("input", analyze.input, "Matrix file")->required();
  a->add_option("--emit-witness", analyze.emit_witness, "Directory for T.mat, M.mat, N.mat on a yes verdict");
  add_common(a, analyze.common);

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Check T = MN, M^2 = N^2 = NM = 0 for given files");
  v->add_option("T", verify.t)->required();
  v->add_option("M", verify.m)->required();
  v->add_option("N", verify.n)->required();

  CommutatorOptions comm;
  auto* c = app.add_subcommand("commutator", "Analyze MN - NM for square-zero M, N");
  c->add_option("M", comm.m)->required();
  c->add_option("N", comm.n)->required();

  CounterexampleOptions cex;
  auto* x = app.add_subcommand("counterexample", "Reproduce the 11x11 separation instance");
  add_common(x, cex.common);
  x->add_option("--lemma-trials", cex.lemma_trials, "Random rank-one update checks (0 skips)");
  x->add_option("--search-trials", cex.search_trials, "Randomized commutator search trials (0 skips)");
  x->add_option("--threads", cex.threads, "Worker threads for the randomized search");

  FuzzOptions fuzz;
  auto* f = app.add_subcommand("fuzz", "Property campaigns over generated instances");
  f->add_option("config", fuzz.config, "JSON config file");
  f->add_option("--seed", fuzz.seed, "Override the config seed");
  f->add_flag("--self-test-mutate", fuzz.self_test_mutate, "Inject a fault to exercise reproducer output");
  f->add_option("--nmf-restarts", fuzz.common.nmf_restarts);
  f->add_option("--max-cover-time", fuzz.common.max_cover_time);
  f->add_option("--time-limit", fuzz.common.time_limit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  CommandResult r;
  if (*a) r = run_analyze(analyze);
  else if (*v) r = run_verify(verify);
  else if (*c) r = run_commutator(comm);
  else if (*x) r = run_counterexample(cex);
  else r = run_fuzz(fuzz);

  std::cout << r.report.dump(2) << '\n';
  if (r.exit_code == kExitInputError && r.report.contains("error")) {
    std::cerr << "error: " << r.report["error"].get<std::string>() << '\n';
  }
  return r.exit_code;
}
