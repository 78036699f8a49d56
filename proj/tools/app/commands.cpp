#include "app/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>

namespace sqzero::app {

namespace {

using Clock = std::chrono::steady_clock;

struct LoadedInput {
  Matrix matrix;
  Json meta;
};

LoadedInput load(const std::filesystem::path& path) {
  const std::string bytes = read_file_bytes(path);
  try {
    return {parse_matrix(bytes), Json{{"path", path.string()}, {"sha256", sha256_hex(bytes)}}};
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Json header(const char* command, const std::vector<LoadedInput>& inputs) {
  Json list = Json::array();
  std::string joined;
  for (const auto& in : inputs) {
    list.push_back(in.meta);
    joined += in.meta["sha256"].get<std::string>();
  }
  return Json{{"command", command}, {"inputs", list}, {"inputs_digest", sha256_hex(joined)}};
}

CommandResult input_error(const char* command, const std::exception& e, Clock::time_point start) {
  Json r{{"command", command}, {"error", e.what()}};
  finalize(r, start);
  return {kExitInputError, r};
}

// Runs `body`; library input errors map to exit 64.
CommandResult guarded(const char* command, const std::function<CommandResult(Clock::time_point)>& body) {
  const auto start = Clock::now();
  try {
    return body(start);
  } catch (const ParseError& e) {
    return input_error(command, e, start);
  } catch (const NegativeEntryError& e) {
    return input_error(command, e, start);
  } catch (const DimensionError& e) {
    return input_error(command, e, start);
  } catch (const PreconditionError& e) {
    return input_error(command, e, start);
  }
}

Json rng_meta(std::uint64_t seed) { return Json{{"algorithm", SplitMix64::kAlgorithm}, {"seed", seed}}; }

int exit_for(Answer a) {
  switch (a) {
    case Answer::kYes: return kExitYes;
    case Answer::kNo: return kExitNo;
    case Answer::kUnknown: return kExitUnknown;
  }
  return kExitUnknown;
}

Rational random_unit_rational(SplitMix64& rng, long hi) {
  const auto den = static_cast<long>(rng.uniform(1, 16));
  const auto num = static_cast<long>(rng.uniform(0, static_cast<std::uint64_t>(hi * den)));
  return Rational(num, den);
}

}  // namespace

BoundsOptions CommonOptions::bounds() const {
  BoundsOptions b;
  b.seed = seed;
  b.nmf_restarts = nmf_restarts;
  std::optional<double> limit = max_cover_time;
  if (time_limit) limit = limit ? std::min(*limit, *time_limit) : *time_limit;
  if (limit) b.cover_time_limit = std::chrono::duration<double>(std::max(0.0, *limit));
  return b;
}

CommandResult run_analyze(const AnalyzeOptions& o) {
  return guarded("analyze", [&](Clock::time_point start) {
    const LoadedInput in = load(o.input);
    const Matrix& t = in.matrix;
    if (!t.is_square()) throw DimensionError("analyze needs a square matrix, got " + std::to_string(t.rows()) + "x" + std::to_string(t.cols()));
    t.require_nonnegative("analyze");

    Json r = header("analyze", {in});
    r["rng"] = rng_meta(o.common.seed);
    r["dimension"] = t.rows();
    r["rank"] = rank(t);
    r["square_zero"] = matmul(t, t).is_zero();
    const BoundsOptions bo = o.common.bounds();
    r["nonneg_rank"] = to_json(nonneg_rank_bounds(t, bo));
    const Verdict v = decide_square_zero_product(t, bo);
    r["square_zero_product"] = to_json(v);
    const NecessaryCheck nc = necessary_condition_check(t);
    r["commutator_necessary_condition"] = to_json(nc);
    CommutatorStatus status = CommutatorStatus::kUndetermined;
    if (!nc.holds) {
      status = CommutatorStatus::kNecessaryFails;
    } else if (v.answer == Answer::kYes) {
      status = CommutatorStatus::kProductForm;
    } else if (v.answer == Answer::kNo) {
      status = CommutatorStatus::kGap;
    }
    r["commutator_status"] = to_string(status);

    if (o.emit_witness && v.witness) {
      std::filesystem::create_directories(*o.emit_witness);
      write_matrix_file(*o.emit_witness / "T.mat", t);
      write_matrix_file(*o.emit_witness / "M.mat", v.witness->m);
      write_matrix_file(*o.emit_witness / "N.mat", v.witness->n);
      r["witness_files"] = (*o.emit_witness).string();
    }
    finalize(r, start);
    return CommandResult{exit_for(v.answer), r};
  });
}

CommandResult run_verify(const VerifyOptions& o) {
  return guarded("verify", [&](Clock::time_point start) {
    const LoadedInput t = load(o.t), m = load(o.m), n = load(o.n);
    for (const auto* x : {&t.matrix, &m.matrix, &n.matrix}) {
      if (!x->is_square() || x->rows() != t.matrix.rows()) {
        throw DimensionError("verify needs three square matrices of equal size");
      }
    }
    const SquareZeroWitness w{m.matrix, n.matrix, m.matrix + n.matrix};
    const WitnessCheck c = verify_witness(w, t.matrix);
    Json r = header("verify", {t, m, n});
    r["identities"] = to_json(c);
    r["violations"] = c.violations();
    finalize(r, start);
    return CommandResult{c.ok() ? kExitYes : kExitNo, r};
  });
}

CommandResult run_commutator(const CommutatorOptions& o) {
  return guarded("commutator", [&](Clock::time_point start) {
    const LoadedInput m = load(o.m), n = load(o.n);
    const CommutatorReport rep = commutator_analysis(m.matrix, n.matrix);
    Json r = header("commutator", {m, n});
    r["report"] = to_json(rep);
    if (rep.nonnegative) r["commutator_necessary_condition"] = to_json(necessary_condition_check(rep.commutator));
    finalize(r, start);
    return CommandResult{rep.nonnegative ? kExitYes : kExitNotNonnegative, r};
  });
}

CommandResult run_counterexample(const CounterexampleOptions& o) {
  const auto start = Clock::now();
  const BoundsOptions bo = o.common.bounds();
  Json r{{"command", "counterexample"}, {"rng", rng_meta(o.common.seed)}};
  bool all_ok = true;
  auto claim = [&](Json& section, const char* name, bool holds) {
    section["claims"][name] = holds;
    all_ok = all_ok && holds;
  };

  const Matrix gap_block = build_rank_gap_block();
  const NNRankBounds gap_bounds = nonneg_rank_bounds(gap_block, bo);
  Json block{{"matrix", to_json(gap_block)}, {"rank", rank(gap_block)}, {"nonneg_rank", to_json(gap_bounds)}};
  claim(block, "rank == 3", rank(gap_block) == 3);
  claim(block, "rank+ == [4, 4]", gap_bounds.lower == 4 && gap_bounds.upper == 4);
  r["rank_gap_block"] = block;

  const Matrix t = build_counterexample();
  const NecessaryCheck nc = necessary_condition_check(t);
  const Verdict v = decide_square_zero_product(t, bo);
  Json big{{"matrix", to_json(t)},
           {"square_zero", matmul(t, t).is_zero()},
           {"commutator_necessary_condition", to_json(nc)},
           {"square_zero_product", to_json(v)}};
  claim(big, "necessary condition holds", nc.holds);
  claim(big, "not a square-zero product", v.answer == Answer::kNo);
  r["counterexample"] = big;

  Json lemma{{"trials", o.lemma_trials}};
  if (o.lemma_trials == 0) {
    lemma["status"] = "skipped";
  } else {
    std::uint64_t failures = 0, case1 = 0;
    Json first_failure;
    for (std::uint64_t i = 0; i < o.lemma_trials; ++i) {
      SplitMix64 rng(o.common.seed ^ 0x4c454d4d41ULL, i);
      Vec4 u, w;
      for (auto& x : u) x = random_unit_rational(rng, 10);
      for (auto& x : w) x = random_unit_rational(rng, 10);
      const RankOneUpdateReport rep = rank_one_update_check(u, w);
      if (rep.which == RankOneUpdateCase::kDropLastRowFirstColumn) ++case1;
      if (!rep.consistent()) {
        if (failures == 0) first_failure = Json{{"trial", i}, {"value", rep.formula_value.to_string()}};
        ++failures;
      }
    }
    lemma["status"] = failures == 0 ? "pass" : "fail";
    lemma["failures"] = failures;
    lemma["drop_last_row_first_column_trials"] = case1;
    lemma["drop_second_row_last_column_trials"] = o.lemma_trials - case1;
    if (failures) lemma["first_failure"] = first_failure;
    claim(lemma, "all trials consistent", failures == 0);
  }
  r["lemma_rank_one_update"] = lemma;

  Json search{{"label", "statistical evidence, not a proof"}, {"trials", o.search_trials}};
  if (o.search_trials > 0) {
    SearchOptions so;
    so.trials = o.search_trials;
    so.seed = o.common.seed;
    so.threads = o.threads;
    const SearchSummary s = randomized_commutator_search(t, so);
    search["exact_hits"] = s.exact_hits;
    search["min_distance"] = s.min_distance ? s.min_distance->to_string() : "";
    so.trials = std::min<std::uint64_t>(o.search_trials, 1000);
    const SearchSummary sanity = randomized_commutator_search(Matrix::unit(3, 0, 2), so);
    search["sanity_E13_min_distance"] = sanity.min_distance ? sanity.min_distance->to_string() : "";
    claim(search, "no exact hit on the counterexample", s.exact_hits == 0);
    claim(search, "exact hit on E13", sanity.exact_hits > 0);
  } else {
    search["status"] = "skipped";
  }
  r["randomized_search"] = search;
  r["all_claims_reproduce"] = all_ok;
  finalize(r, start);
  return {all_ok ? 0 : 1, r};
}

FuzzConfig FuzzConfig::from_json(const Json& j) {
  if (!j.is_object()) throw PreconditionError("fuzz config must be a JSON object");
  FuzzConfig c;
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "seed") c.seed = value.get<std::uint64_t>();
      else if (key == "witness_cases") c.witness_cases = value.get<std::size_t>();
      else if (key == "commutator_cases") c.commutator_cases = value.get<std::size_t>();
      else if (key == "max_first") c.max_first = value.get<std::size_t>();
      else if (key == "max_middle") c.max_middle = value.get<std::size_t>();
      else if (key == "max_last") c.max_last = value.get<std::size_t>();
      else if (key == "max_entry") c.max_entry = value.get<std::uint64_t>();
      else if (key == "denominator") c.denominator = value.get<std::uint64_t>();
      else if (key == "density") c.density = value.get<double>();
      else if (key == "max_rejects") c.max_rejects = value.get<std::size_t>();
      else if (key == "output_dir") c.output_dir = value.get<std::string>();
      else throw PreconditionError("fuzz config: unknown key '" + key + "'");
    } catch (const nlohmann::json::exception&) {
      throw PreconditionError("fuzz config: bad value for '" + key + "'");
    }
  }
  if (c.max_first < 1 || c.max_middle < 1 || c.max_last < 1) throw PreconditionError("fuzz config: dimensions must be >= 1");
  if (c.max_first + c.max_middle + c.max_last > 64) throw PreconditionError("fuzz config: dimension above 64");
  if (c.max_rejects < 1) throw PreconditionError("fuzz config: max_rejects must be >= 1");
  GenConfig probe;
  probe.max_entry = c.max_entry;
  probe.denominator = c.denominator;
  probe.density = c.density;
  probe.validate(false);
  return c;
}

Json FuzzConfig::to_json() const {
  return Json{{"seed", seed},           {"witness_cases", witness_cases}, {"commutator_cases", commutator_cases},
              {"max_first", max_first}, {"max_middle", max_middle},       {"max_last", max_last},
              {"max_entry", max_entry}, {"denominator", denominator},     {"density", density},
              {"max_rejects", max_rejects}, {"output_dir", output_dir.string()}};
}

namespace {

GenConfig draw_case(const FuzzConfig& c, std::uint64_t campaign, std::uint64_t index) {
  SplitMix64 rng(c.seed, (campaign << 32) | index);
  GenConfig g;
  g.seed = rng();
  g.first = rng.uniform(1, c.max_first);
  g.middle = rng.uniform(1, c.max_middle);
  g.last = rng.uniform(1, c.max_last);
  g.inner = rng.uniform(1, g.middle);
  g.max_entry = c.max_entry;
  g.denominator = c.denominator;
  g.density = c.density;
  g.shuffle = rng.bernoulli(0.5);
  return g;
}

Json gen_config_json(const GenConfig& g) {
  return Json{{"seed", g.seed},         {"first", g.first},           {"middle", g.middle},
              {"last", g.last},         {"inner", g.inner},           {"max_entry", g.max_entry},
              {"denominator", g.denominator}, {"density", g.density}, {"shuffle", g.shuffle}};
}

std::filesystem::path dump_reproducer(const FuzzConfig& c, const std::string& name, const GenConfig& g,
                                      const std::vector<std::pair<std::string, Matrix>>& files,
                                      const std::vector<std::string>& problems) {
  const auto dir = c.output_dir / name;
  std::filesystem::create_directories(dir);
  for (const auto& [file, m] : files) write_matrix_file(dir / file, m);
  std::ofstream(dir / "case.json") << Json{{"gen_config", gen_config_json(g)}, {"violations", problems}}.dump(2)
                                   << '\n';
  return dir;
}

}  // namespace

CommandResult run_fuzz(const FuzzOptions& o) {
  return guarded("fuzz", [&](Clock::time_point start) {
    FuzzConfig c;
    Json r{{"command", "fuzz"}};
    std::vector<LoadedInput> inputs;
    if (o.config) {
      const std::string bytes = read_file_bytes(*o.config);
      Json parsed;
      try {
        parsed = Json::parse(bytes);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(o.config->string() + ": " + e.what());
      }
      c = FuzzConfig::from_json(parsed);
      r["inputs"] = Json::array({Json{{"path", o.config->string()}, {"sha256", sha256_hex(bytes)}}});
    }
    if (o.seed) c.seed = *o.seed;
    r["config"] = c.to_json();
    r["rng"] = rng_meta(c.seed);
    r["self_test_mutate"] = o.self_test_mutate;
    const BoundsOptions bo = o.common.bounds();

    Json violations = Json::array();
    auto record = [&](const std::string& name, const GenConfig& g,
                      const std::vector<std::pair<std::string, Matrix>>& files,
                      const std::vector<std::string>& problems) {
      const auto dir = dump_reproducer(c, name, g, files, problems);
      violations.push_back(Json{{"case", name}, {"problems", problems}, {"reproducer", dir.string()}});
    };

    std::size_t yes = 0, unknown = 0;
    for (std::size_t i = 0; i < c.witness_cases; ++i) {
      const GenConfig g = draw_case(c, 0, i);
      GeneratedWitness w = gen_witness(g);
      if (o.self_test_mutate && i == 0) {
        // Injected fault: T no longer equals M N.
        w.t(w.form.partition.first()[0], w.form.partition.last()[0]) += Rational(1);
      }
      std::vector<std::string> problems;
      const WitnessCheck check = verify_witness(w.witness, w.t);
      for (const auto& p : check.violations()) problems.push_back("witness: " + p);
      if (check.ok()) {
        const Matrix u = cube_zero_root(w.witness);
        const CubeZeroForm f = form_from_cube_zero(u);
        if (f.form.partition.middle().size() < g.inner) problems.push_back("recovered middle block smaller than k");
        if (assemble_from_form(f.form) != w.t) problems.push_back("U^2 form does not reassemble T");
      }
      const Verdict v = decide_square_zero_product(w.t, bo);
      if (v.answer == Answer::kNo) problems.push_back("decision says no for a generated product: " + v.reason);
      if (v.answer == Answer::kYes && !verify_witness(*v.witness, w.t).ok()) problems.push_back("returned witness fails");
      (v.answer == Answer::kYes ? yes : unknown) += v.answer != Answer::kNo;
      if (!problems.empty()) {
        record("witness-" + std::to_string(i), g, {{"T.mat", w.t}, {"M.mat", w.witness.m}, {"N.mat", w.witness.n}},
               problems);
      }
    }
    r["witness_campaign"] = Json{{"cases", c.witness_cases}, {"decided_yes", yes}, {"decided_unknown", unknown}};

    std::size_t accepted = 0, exhausted = 0, attempts = 0;
    for (std::size_t i = 0; i < c.commutator_cases; ++i) {
      const GenConfig g = draw_case(c, 1, i);
      const CommutatorDraw d = gen_commutator_pair(g, c.max_rejects);
      attempts += d.attempts;
      if (!d.pair) {
        ++exhausted;
        continue;
      }
      ++accepted;
      const auto& [m, n] = *d.pair;
      const CommutatorReport rep = commutator_analysis(m, n);
      std::vector<std::string> problems;
      if (!rep.nonnegative) problems.push_back("accepted pair has a negative commutator");
      if (rep.nonnegative) {
        if (!rep.annihilation()) problems.push_back("annihilation identities fail");
        if (!rep.sum_cube_zero) problems.push_back("(M + N)^3 != 0");
        if (!rep.block_pattern) problems.push_back("commutator not supported on I1 x I3");
        if (!rep.block_factorizes) problems.push_back("T[I1, I3] != (M12 - N12)(M23 + N23)");
        if (!rep.necessary_condition) problems.push_back("rank(block) > middle dimension");
        if (!necessary_condition_check(rep.commutator).holds) problems.push_back("necessary_condition_check fails");
      }
      if (!problems.empty()) {
        record("commutator-" + std::to_string(i), g, {{"M.mat", m}, {"N.mat", n}, {"C.mat", rep.commutator}}, problems);
      }
    }
    r["commutator_campaign"] = Json{{"cases", c.commutator_cases},
                                    {"accepted", accepted},
                                    {"exhausted", exhausted},
                                    {"draws", attempts}};
    r["violations"] = violations;
    finalize(r, start);
    return CommandResult{violations.empty() ? 0 : 1, r};
  });
}

}  // namespace sqzero::app
