// tol: a workbench for transductive online learning games.
//
// Subcommands: dims, value, play, zoo emit, tree verify, tree ramsey,
// sweep trichotomy, sweep agnostic, khinchine.
// Exit codes: 0 success, 2 assertion/contract failure, 3 budget exceeded,
// 4 protocol violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tol/dimensions.hpp"
#include "tol/engine.hpp"
#include "tol/experiments.hpp"
#include "tol/minimax.hpp"
#include "tol/stats.hpp"
#include "tol/strategies.hpp"
#include "tol/trees.hpp"
#include "tol/zoo.hpp"

namespace {

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::uint64_t budget_states = 0;  // 0 = library defaults
  std::string out;
  double tolerance = 1.0;
};

struct ClassOptions {
  std::string file;
  std::string family;
  std::vector<std::int64_t> params;
};

void add_class_options(CLI::App* cmd, ClassOptions& options) {
  auto* file = cmd->add_option("--class", options.file, "HYP v1 class file");
  auto* family =
      cmd->add_option("--family", options.family,
                      "class family (thresholds|cube|multiclass-cube|singleton|tree-cube|"
                      "ds-claim|g-truncation|random)");
  cmd->add_option("--param", options.params, "family parameters")->delimiter(',');
  family->excludes(file);
}

tol::HypothesisClass resolve_class(const ClassOptions& options, std::uint64_t seed) {
  if (!options.file.empty()) return tol::load_hyp_file(options.file);
  TOL_REQUIRE(!options.family.empty(), "provide --class FILE or --family NAME");
  return tol::make_class_from_spec(options.family, options.params, seed);
}

std::string class_label(const ClassOptions& options) {
  if (!options.file.empty()) return options.file;
  std::string label = options.family + "(";
  for (std::size_t i = 0; i < options.params.size(); ++i)
    label += (i ? "," : "") + std::to_string(options.params[i]);
  return label + ")";
}

tol::DimensionBudget dimension_budget(const GlobalOptions& global) {
  tol::DimensionBudget budget;
  if (global.budget_states) budget.max_states = global.budget_states;
  return budget;
}

tol::GameBudget game_budget(const GlobalOptions& global) {
  tol::GameBudget budget;
  if (global.budget_states) budget.max_states = global.budget_states;
  return budget;
}

void emit(const GlobalOptions& global, const std::string& text) {
  if (global.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(global.out, std::ios::binary);
  TOL_REQUIRE(out.good(), "cannot open output file: " + global.out);
  out << text;
}

std::unique_ptr<tol::Learner> make_learner(const std::string& kind, const GlobalOptions& global,
                                           std::optional<double> eta) {
  const auto dims = dimension_budget(global);
  if (kind == "halving") return tol::make_halving_learner(dims);
  if (kind == "soa") return tol::make_soa_learner(dims);
  if (kind == "mw") return tol::make_mw_learner(tol::Rng(global.seed, 1), eta, dims);
  if (kind == "best-response") return tol::make_best_response_learner(game_budget(global));
  if (kind == "random") return tol::make_random_learner(tol::Rng(global.seed, 1));
  throw tol::ContractViolation("unknown learner: " + kind);
}

// ---------------------------------------------------------------------------
// dims
// ---------------------------------------------------------------------------

int run_dims(const GlobalOptions& global, const ClassOptions& class_options,
             const std::vector<std::string>& which, bool witness) {
  for (const auto& name : which)
    TOL_REQUIRE(name == "vc" || name == "ld" || name == "td" || name == "nd" || name == "mtd" ||
                    name == "ds" || name == "all",
                "unknown dimension: " + name);
  const auto cls = resolve_class(class_options, global.seed);
  const auto report = tol::compute_dimensions(cls, which.empty() ? std::vector<std::string>{"all"} : which,
                                              dimension_budget(global));
  std::ostringstream out;
  auto line = [&](const char* name, const std::optional<int>& value) {
    if (value) out << name << ' ' << *value << '\n';
  };
  line("vc", report.vc);
  line("ld", report.ld);
  line("td", report.td);
  line("nd", report.nd);
  line("mtd", report.mtd);
  line("ds", report.ds);
  for (const auto& note : report.notes) out << "# " << note << '\n';
  if (witness) {
    if (report.vc_witness && report.vc) {
      out << "# vc witness points:";
      for (int x : report.vc_witness->points) out << ' ' << x;
      out << '\n';
    }
    if (report.td_witness && report.td) {
      out << "# td witness points:";
      for (int x : report.td_witness->points) out << ' ' << x;
      out << " hyps:";
      for (auto h : report.td_witness->hyps) out << ' ' << h;
      out << " labels: " << report.td_witness->y_prefix << '/' << report.td_witness->y_suffix
          << '\n';
    }
    if (report.nd_witness && report.nd) {
      out << "# nd witness points:";
      for (int x : report.nd_witness->points) out << ' ' << x;
      out << " f0:";
      for (auto v : report.nd_witness->f0) out << ' ' << v;
      out << " f1:";
      for (auto v : report.nd_witness->f1) out << ' ' << v;
      out << '\n';
    }
    if (report.mtd_witness && report.mtd) {
      out << "# mtd witness points:";
      for (int x : report.mtd_witness->points) out << ' ' << x;
      out << " hyps:";
      for (auto h : report.mtd_witness->hyps) out << ' ' << h;
      out << '\n';
    }
    if (report.ds_witness && report.ds) {
      out << "# ds witness points:";
      for (int x : report.ds_witness->points) out << ' ' << x;
      out << " pseudocube size: " << report.ds_witness->pseudocube.size() << '\n';
    }
    if (report.ld && *report.ld >= 1) {
      if (const auto tree = tol::littlestone_witness_tree(cls, dimension_budget(global)))
        out << "# ld witness tree:\n" << tol::write_ltree(*tree);
    }
  }
  emit(global, out.str());
  return 0;
}

// ---------------------------------------------------------------------------
// value
// ---------------------------------------------------------------------------

int run_value(const GlobalOptions& global, const ClassOptions& class_options, int n, bool exact,
              bool bounds) {
  const auto cls = resolve_class(class_options, global.seed);
  std::ostringstream out;
  if (!bounds) {
    try {
      out << "M " << tol::transductive_value(cls, n, game_budget(global)) << '\n';
      emit(global, out.str());
      return 0;
    } catch (const tol::BudgetExceeded&) {
      if (exact) throw;  // caller demanded exactness
    }
  }
  const auto dims = dimension_budget(global);
  long long lower = 0, upper = n;
  try {
    if (cls.label_count() == 2) lower = std::min<long long>(tol::vc_dim(cls, nullptr, dims), n);
  } catch (const tol::BudgetExceeded&) {
  }
  try {
    const int td = tol::threshold_dim(cls, nullptr, dims);
    if (td >= 2 && n >= 2) {
      int log_td = 0, log_n = 0;
      for (int v = td; v > 1; v >>= 1) ++log_td;
      for (int v = n; v > 1; v >>= 1) ++log_n;
      lower = std::max(lower, static_cast<long long>(std::min(log_td, log_n)));
    }
  } catch (const tol::BudgetExceeded&) {
  }
  try {
    upper = std::min<long long>(upper, tol::littlestone_dim(cls, dims));
  } catch (const tol::BudgetExceeded&) {
  }
  long long size_log = 0;
  for (auto v = cls.size(); v > 1; v >>= 1) ++size_log;
  upper = std::min(upper, size_log);
  out << "lower " << lower << " upper " << upper << '\n';
  emit(global, out.str());
  return 0;
}

// ---------------------------------------------------------------------------
// play
// ---------------------------------------------------------------------------

int run_play(const GlobalOptions& global, const ClassOptions& class_options,
             const std::string& learner_kind, const std::string& adversary_kind, int n,
             std::optional<double> eta, const std::string& transcript_path) {
  const auto cls = resolve_class(class_options, global.seed);
  auto learner = make_learner(learner_kind, global, eta);
  std::ostringstream out;
  std::string transcript_body;

  if (adversary_kind == "random") {
    auto adversary = tol::make_random_label_adversary(tol::Rng(global.seed, 2), dimension_budget(global));
    const auto sequence = adversary->choose_sequence(cls, n);
    learner->init(cls, sequence);
    tol::Transcript transcript;
    transcript.sequence = sequence;
    for (int t = 0; t < n; ++t) {
      const tol::Label y = adversary->label_at(t);
      const tol::Label prediction = learner->predict(t);
      learner->observe(t, y);
      transcript.predictions.push_back(prediction);
      transcript.labels.push_back(y);
      transcript.mistakes.push_back(prediction != y);
      transcript.version_space_sizes.push_back(0);  // agnostic: no version space
    }
    const auto best = tol::best_hypothesis_mistakes(cls, sequence, transcript.labels);
    out << "mistakes " << transcript.mistake_count() << '\n';
    out << "best_hypothesis_mistakes " << best << '\n';
    out << "regret " << (transcript.mistake_count() - best) << '\n';
    transcript_body = tol::transcript_csv(transcript);
  } else {
    std::unique_ptr<tol::Adversary> adversary;
    if (adversary_kind == "vc")
      adversary = tol::make_vc_adversary(dimension_budget(global));
    else if (adversary_kind == "dyadic")
      adversary = tol::make_dyadic_adversary(dimension_budget(global));
    else if (adversary_kind == "bfs-tree")
      adversary = tol::make_bfs_tree_adversary(std::nullopt, tol::BfsThresholdSchedule::kStandard,
                                               dimension_budget(global));
    else if (adversary_kind == "minimax")
      adversary = tol::make_minimax_adversary(game_budget(global));
    else
      throw tol::ContractViolation("unknown adversary: " + adversary_kind);
    const auto transcript = tol::run_realizable(cls, *adversary, *learner, n, dimension_budget(global));
    out << "mistakes " << transcript.mistake_count() << '\n';
    transcript_body = tol::transcript_csv(transcript);
  }

  if (!transcript_path.empty()) {
    std::ofstream file(transcript_path, std::ios::binary);
    TOL_REQUIRE(file.good(), "cannot open transcript file: " + transcript_path);
    file << "# play class=" << class_label(class_options) << " learner=" << learner_kind
         << " adversary=" << adversary_kind << " n=" << n << " seed=" << global.seed << '\n';
    file << transcript_body;
  }
  emit(global, out.str());
  return 0;
}

// ---------------------------------------------------------------------------
// zoo emit / tree verify / tree ramsey
// ---------------------------------------------------------------------------

int run_zoo_emit(const GlobalOptions& global, const std::string& family,
                 const std::vector<std::int64_t>& params, const std::string& out_path) {
  const auto cls = tol::make_class_from_spec(family, params, global.seed);
  constexpr std::int64_t kEmitBudget = 1 << 14;
  if (cls.size() > kEmitBudget)
    throw tol::BudgetExceeded("zoo emit: class too large to materialize into HYP v1; "
                              "use the implicit generator API instead",
                              static_cast<std::uint64_t>(cls.size()));
  tol::save_hyp_file(cls.materialized(kEmitBudget), out_path);
  std::cout << "wrote " << out_path << " (" << cls.size() << " hypotheses)\n";
  return 0;
}

int run_tree_verify(const GlobalOptions& global, const std::string& tree_path,
                    const ClassOptions& class_options, bool witness) {
  const auto cls = resolve_class(class_options, global.seed);
  const auto tree = tol::load_ltree_file(tree_path);
  const auto result = tol::shatters(cls, tree);
  std::ostringstream out;
  out << "shattered " << (result ? "yes" : "no") << '\n';
  if (result && witness) {
    out << "# branch witnesses:";
    for (auto h : result->branch_hyp) out << ' ' << h;
    out << '\n';
  }
  emit(global, out.str());
  return result ? 0 : 2;
}

int run_tree_ramsey(const GlobalOptions& global, const std::string& tree_path, int colors,
                    std::optional<double> p, std::optional<double> q) {
  const auto tree = tol::load_ltree_file(tree_path);
  std::vector<int> coloring(static_cast<std::size_t>(tree.node_count()));
  tol::Rng rng(global.seed, 3);
  for (auto& c : coloring) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(colors)));

  tol::RamseyResult result;
  if (p && q) {
    TOL_REQUIRE(colors == 2, "two-color mode needs --colors 2");
    result = tol::ramsey_two_color(tree, coloring, *p, *q);
  } else {
    result = tol::ramsey_multi_color(tree, coloring, colors);
  }

  std::ostringstream out;
  out << "# coloring:";
  for (int c : coloring) out << ' ' << c;
  out << '\n';
  out << "color " << result.color << '\n';
  out << "levels " << result.subtree.levels << '\n';
  out << "nodes";
  for (int v : result.subtree.nodes_sorted()) out << ' ' << v;
  out << '\n';

  const auto verified = tol::complete_subtree_levels(result.subtree.nodes_sorted());
  int mono_color = -1;
  const bool mono = tol::is_monochromatic(coloring, result.subtree.nodes_sorted(), &mono_color);
  if (!verified || *verified != result.subtree.levels || !mono || mono_color != result.color) {
    emit(global, out.str() + "certificate INVALID\n");
    return 2;
  }
  out << "certificate ok\n";
  emit(global, out.str());
  return 0;
}

// ---------------------------------------------------------------------------
// sweeps / khinchine
// ---------------------------------------------------------------------------

std::pair<long long, long long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  TOL_REQUIRE(dots != std::string::npos, "range must look like A..B");
  return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
}

int run_sweep_trichotomy(const GlobalOptions& global, const std::string& family,
                         const std::string& param_range, const std::string& n_range) {
  const auto [param_lo, param_hi] = parse_range(param_range);
  const auto [n_lo, n_hi] = parse_range(n_range);
  tol::SweepBudgets budgets;
  if (global.budget_states) {
    budgets.dims.max_states = global.budget_states;
    budgets.game.max_states = global.budget_states;
  }
  const auto rows = tol::trichotomy_sweep(family, param_lo, param_hi, static_cast<int>(n_lo),
                                          static_cast<int>(n_hi), budgets);
  std::ostringstream config;
  config << "sweep trichotomy family=" << family << " param=" << param_range << " n=" << n_range
         << " seed=" << global.seed;
  emit(global, tol::trichotomy_csv(rows, {config.str()}));
  tol::assert_trichotomy_shape(rows);  // after emission so the CSV is inspectable
  return 0;
}

int run_sweep_agnostic(const GlobalOptions& global, const ClassOptions& class_options,
                       const std::string& n_range, long long trials, std::optional<double> eta) {
  TOL_REQUIRE(trials >= 100, "agnostic sweeps need --trials >= 100");
  const auto cls = resolve_class(class_options, global.seed);
  const auto [n_lo, n_hi] = parse_range(n_range);
  tol::SweepBudgets budgets;
  std::vector<tol::AgnosticRow> rows;
  for (long long n = n_lo; n <= n_hi; n = (n_hi > n_lo ? n + (n_hi - n_lo) : n + 1)) {
    rows.push_back(tol::agnostic_row(cls, class_label(class_options), static_cast<int>(n), trials,
                                     global.seed, eta, budgets));
    if (n_hi == n_lo) break;
  }
  std::ostringstream config;
  config << "sweep agnostic class=" << class_label(class_options) << " n=" << n_range
         << " trials=" << trials << " seed=" << global.seed << " tolerance=" << global.tolerance;
  emit(global, tol::agnostic_csv(rows, {config.str()}));
  for (const auto& row : rows) tol::assert_agnostic_row(row, global.tolerance);
  return 0;
}

int run_khinchine(const GlobalOptions& global, int k) {
  const auto result = tol::khinchine_exact(k);
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "expected_abs_sum %.12f\nbound %.12f\n",
                result.expected_abs_sum, result.bound);
  emit(global, buffer);
  return result.expected_abs_sum >= result.bound ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transductive online learning workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--seed", global.seed, "RNG seed for randomized components");
  app.add_option("--budget-states", global.budget_states, "override the exact-search state budget");
  app.add_option("--out", global.out, "write output to a file instead of stdout");
  app.add_option("--tolerance", global.tolerance, "scale factor on 3-sigma assertion halfwidths");

  // dims
  auto* dims = app.add_subcommand("dims", "compute combinatorial dimensions");
  ClassOptions dims_class;
  add_class_options(dims, dims_class);
  std::vector<std::string> dims_which;
  bool dims_witness = false;
  dims->add_option("--dim", dims_which, "vc|ld|td|nd|mtd|ds|all")->delimiter(',');
  dims->add_flag("--witness", dims_witness, "append witness certificate lines");

  // value
  auto* value = app.add_subcommand("value", "exact or bracketed game value");
  ClassOptions value_class;
  add_class_options(value, value_class);
  int value_n = 1;
  bool value_exact = false, value_bounds = false;
  value->add_option("--n", value_n, "sequence length")->required();
  value->add_flag("--exact", value_exact, "fail instead of falling back to bounds");
  value->add_flag("--bounds", value_bounds, "emit lower/upper bounds only");

  // play
  auto* play = app.add_subcommand("play", "run one game");
  ClassOptions play_class;
  add_class_options(play, play_class);
  std::string play_learner = "halving", play_adversary = "vc", play_transcript;
  int play_n = 1;
  double play_eta = -1;
  play->add_option("--learner", play_learner, "halving|soa|mw|best-response|random");
  play->add_option("--adversary", play_adversary, "vc|dyadic|bfs-tree|minimax|random");
  play->add_option("--n", play_n, "sequence length")->required();
  play->add_option("--eta", play_eta, "mw learning rate (default sqrt(8 ln|H|/n))");
  play->add_option("--transcript", play_transcript, "write the transcript CSV here");

  // zoo emit
  auto* zoo = app.add_subcommand("zoo", "class generators");
  auto* zoo_emit = zoo->add_subcommand("emit", "write a generated class as HYP v1");
  std::string zoo_family, zoo_out;
  std::vector<std::int64_t> zoo_params;
  zoo_emit->add_option("--family", zoo_family, "class family")->required();
  zoo_emit->add_option("--param", zoo_params, "family parameters")->delimiter(',')->required();
  zoo_emit->add_option("--out", zoo_out, "output file")->required();

  // tree verify / ramsey
  auto* tree = app.add_subcommand("tree", "littlestone tree utilities");
  auto* tree_verify = tree->add_subcommand("verify", "check whether a class shatters a tree");
  std::string tree_verify_path;
  ClassOptions tree_verify_class;
  bool tree_verify_witness = false;
  tree_verify->add_option("--tree", tree_verify_path, "LTREE v1 file")->required();
  add_class_options(tree_verify, tree_verify_class);
  tree_verify->add_flag("--witness", tree_verify_witness, "print branch witnesses");

  auto* tree_ramsey = tree->add_subcommand("ramsey", "extract a monochromatic complete subtree");
  std::string tree_ramsey_path;
  int tree_ramsey_colors = 2;
  double tree_ramsey_p = -1, tree_ramsey_q = -1;
  tree_ramsey->add_option("--tree", tree_ramsey_path, "LTREE v1 file")->required();
  tree_ramsey->add_option("--colors", tree_ramsey_colors, "number of colors")->required();
  tree_ramsey->add_option("--p", tree_ramsey_p, "two-color target for color 0");
  tree_ramsey->add_option("--q", tree_ramsey_q, "two-color target for color 1");

  // sweeps
  auto* sweep = app.add_subcommand("sweep", "experiment sweeps with assertions");
  auto* sweep_trichotomy = sweep->add_subcommand("trichotomy", "regime-shape sweep");
  std::string st_family, st_params = "1..1", st_ns = "1..1";
  sweep_trichotomy->add_option("--family", st_family, "thresholds|cube|tree-cube|ds-claim|singleton")
      ->required();
  sweep_trichotomy->add_option("--param-range", st_params, "A..B")->required();
  sweep_trichotomy->add_option("--n-range", st_ns, "A..B")->required();

  auto* sweep_agnostic = sweep->add_subcommand("agnostic", "regret bound sweep");
  ClassOptions sa_class;
  add_class_options(sweep_agnostic, sa_class);
  std::string sa_ns = "100..100";
  long long sa_trials = 1000;
  double sa_eta = -1;
  sweep_agnostic->add_option("--n-range", sa_ns, "A..B (endpoints only)");
  sweep_agnostic->add_option("--trials", sa_trials, "Monte Carlo trials per row");
  sweep_agnostic->add_option("--eta", sa_eta, "mw learning rate override");

  // khinchine
  auto* khinchine = app.add_subcommand("khinchine", "exact sign-sum expectation vs sqrt(k/2)");
  int khinchine_k = 2;
  khinchine->add_option("--k", khinchine_k, "number of signs (<= 24)")->required();

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (dims->parsed()) return run_dims(global, dims_class, dims_which, dims_witness);
    if (value->parsed()) return run_value(global, value_class, value_n, value_exact, value_bounds);
    if (play->parsed())
      return run_play(global, play_class, play_learner, play_adversary, play_n,
                      play_eta >= 0 ? std::optional<double>(play_eta) : std::nullopt,
                      play_transcript);
    if (zoo_emit->parsed()) return run_zoo_emit(global, zoo_family, zoo_params, zoo_out);
    if (tree_verify->parsed())
      return run_tree_verify(global, tree_verify_path, tree_verify_class, tree_verify_witness);
    if (tree_ramsey->parsed())
      return run_tree_ramsey(global, tree_ramsey_path, tree_ramsey_colors,
                             tree_ramsey_p >= 0 ? std::optional<double>(tree_ramsey_p) : std::nullopt,
                             tree_ramsey_q >= 0 ? std::optional<double>(tree_ramsey_q) : std::nullopt);
    if (sweep_trichotomy->parsed()) return run_sweep_trichotomy(global, st_family, st_params, st_ns);
    if (sweep_agnostic->parsed())
      return run_sweep_agnostic(global, sa_class, sa_ns, sa_trials,
                                sa_eta >= 0 ? std::optional<double>(sa_eta) : std::nullopt);
    if (khinchine->parsed()) return run_khinchine(global, khinchine_k);
    std::cerr << "no subcommand given\n";
    return 1;
  } catch (const tol::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const tol::ProtocolViolation& e) {
    std::cerr << "protocol violation: " << e.what() << '\n';
    return 4;
  } catch (const tol::SweepAssertionError& e) {
    std::cerr << "assertion failed: " << e.what() << '\n';
    return 2;
  } catch (const tol::ContractViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
