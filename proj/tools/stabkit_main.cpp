#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "stabkit/bipartition.hpp"
#include "stabkit/constructions.hpp"
#include "stabkit/graph.hpp"
#include "stabkit/io.hpp"
#include "stabkit/search.hpp"
#include "stabkit/svg.hpp"
#include "stabkit/verify.hpp"
#include "stabkit/version.hpp"

namespace {

using stabkit::SearchMode;
using stabkit::SearchOptions;

struct ExhaustiveLimit {
  const char* structure;
  int max_n;
};

void check_exhaustive_limit(const std::string& cls, int n) {
  // n^(n-2), n!/2 and friends grow too fast past these sizes; refuse before
  // doing any work and point at branch-and-bound instead.
  static constexpr ExhaustiveLimit kLimits[] = {
      {"tree", 12}, {"path", 10}, {"matching", 16}, {"triangulation", 12}};
  for (const auto& limit : kLimits) {
    if (cls == limit.structure && n > limit.max_n) {
      throw std::invalid_argument(
          "exhaustive " + cls + " search is refused for n > " +
          std::to_string(limit.max_n) + " (got n = " + std::to_string(n) +
          "); use --mode bnb");
    }
  }
}

int run_lines(const std::string& points_path) {
  const stabkit::PointSet ps = stabkit::read_points_file(points_path);
  const stabkit::RepresentativeSet reps =
      stabkit::representative_partitions(ps);
  for (const stabkit::Bipartition& b : reps.partitions) {
    std::cout << b.to_string() << "\n";
  }
  std::cout << "count: " << reps.size() << "\n";
  return 0;
}

int run_stab(const std::string& graph_path) {
  const stabkit::GeometricGraph g = stabkit::read_graph_file(graph_path);
  if (g.size() < 2) {
    std::cout << "stabbing number: 0\n";
    return 0;
  }
  const stabkit::RepresentativeSet reps =
      stabkit::representative_partitions(g.points());
  const stabkit::EdgeCutProfile profile = stabkit::edge_cut_profile(g, reps);
  std::cout << "stabbing number: " << profile.max_count << "\n";
  if (profile.argmax >= 0) {
    std::cout << "maximizing partition: "
              << reps[profile.argmax].to_string() << "\n";
  }
  return 0;
}

int run_minstab(const std::string& points_path, const std::string& cls,
                const std::string& mode, int threads, int witness_cap,
                const std::string& out_path) {
  const stabkit::PointSet ps = stabkit::read_points_file(points_path);
  SearchOptions opt;
  opt.mode = mode == "bnb" ? SearchMode::kBranchAndBound
                           : SearchMode::kExhaustive;
  opt.threads = threads;
  opt.witness_cap = witness_cap;
  if (opt.mode == SearchMode::kExhaustive) {
    check_exhaustive_limit(cls, ps.size());
  }

  stabkit::SearchOutcome outcome;
  if (cls == "tree") {
    outcome = stabkit::min_stab_tree(ps, opt);
  } else if (cls == "path") {
    outcome = stabkit::min_stab_path(ps, opt);
  } else if (cls == "matching") {
    outcome = stabkit::min_stab_matching(ps, opt);
  } else {
    outcome = stabkit::min_stab_triangulation(ps, opt);
  }
  const nlohmann::json report =
      stabkit::search_outcome_to_json(outcome, cls, mode);
  std::cout << report.dump(2) << "\n";
  if (!out_path.empty()) stabkit::write_json_file(out_path, report);
  return 0;
}

int run_gen(const stabkit::ConstructionBundle& bundle,
            const std::string& out_dir) {
  stabkit::write_bundle(out_dir, bundle);
  std::cout << "wrote " << bundle.kind << " bundle to " << out_dir << " ("
            << bundle.small.size() << " -> " << bundle.big.size()
            << " points, validation "
            << (bundle.validation.all_pass() ? "pass" : "FAIL") << ")\n";
  return bundle.validation.all_pass() ? 0 : 1;
}

int run_verify(const std::string& target, const stabkit::VerifyOptions& opt,
               const std::string& out_path) {
  const stabkit::VerificationReport report =
      stabkit::verify_target(target, opt);
  const nlohmann::json j = stabkit::verification_to_json(report);
  std::cout << j.dump(2) << "\n";
  if (!out_path.empty()) stabkit::write_json_file(out_path, j);
  return report.all_pass() ? 0 : 1;
}

int run_svg(const std::string& graph_path, const std::string& out_path,
            bool overlay_maxcut) {
  const stabkit::GeometricGraph g = stabkit::read_graph_file(graph_path);
  std::optional<stabkit::Bipartition> overlay;
  if (overlay_maxcut && g.size() >= 2) {
    const stabkit::RepresentativeSet reps =
        stabkit::representative_partitions(g.points());
    const stabkit::EdgeCutProfile profile = stabkit::edge_cut_profile(g, reps);
    if (profile.argmax >= 0) overlay = reps[profile.argmax];
  }
  stabkit::write_svg_file(out_path, g, overlay);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabkit: stabbing numbers of geometric graphs"};
  app.set_version_flag("--version", stabkit::kVersion);
  app.require_subcommand(1);

  // lines
  std::string lines_points;
  CLI::App* lines = app.add_subcommand(
      "lines", "enumerate the representative bipartitions of a point set");
  lines->add_option("points", lines_points, "points JSON file")->required();

  // stab
  std::string stab_graph;
  CLI::App* stab = app.add_subcommand(
      "stab", "stabbing number of a geometric graph");
  stab->add_option("graph", stab_graph, "graph JSON file")->required();

  // minstab
  std::string ms_points, ms_class = "tree", ms_mode = "exhaustive", ms_out;
  int ms_threads = 1, ms_cap = 16;
  CLI::App* minstab = app.add_subcommand(
      "minstab", "minimum-stabbing structure search");
  minstab->add_option("--class", ms_class, "structure class")
      ->check(CLI::IsMember({"tree", "path", "matching", "triangulation"}));
  minstab->add_option("--mode", ms_mode, "search mode")
      ->check(CLI::IsMember({"exhaustive", "bnb"}));
  minstab->add_option("--threads", ms_threads, "worker threads");
  minstab->add_option("--witness-cap", ms_cap, "max optimal structures kept");
  minstab->add_option("--out", ms_out, "also write the JSON report here");
  minstab->add_option("points", ms_points, "points JSON file")->required();

  // gen
  CLI::App* gen = app.add_subcommand("gen", "generate a counterexample bundle");
  gen->require_subcommand(1);
  std::string gen_out = "bundle";
  int gen_n = 9, gen_tri_n = 4, gen_k = 5;
  CLI::App* gen_tree9 = gen->add_subcommand("tree9", "9-point tree family base");
  gen_tree9->add_option("--out", gen_out, "output directory");
  CLI::App* gen_tree = gen->add_subcommand("tree", "n-point tree family");
  gen_tree->add_option("--n", gen_n, "points in the small set (>= 9)");
  gen_tree->add_option("--out", gen_out, "output directory");
  CLI::App* gen_tri = gen->add_subcommand("tri", "triangulation family");
  gen_tri->add_option("--n", gen_tri_n, "points per chain (even, >= 4)");
  gen_tri->add_option("--out", gen_out, "output directory");
  CLI::App* gen_matching = gen->add_subcommand("matching", "matching family");
  gen_matching->add_option("--k", gen_k, "hull points (>= 5)");
  gen_matching->add_option("--out", gen_out, "output directory");

  // verify
  std::string verify_target_name, verify_out;
  stabkit::VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand(
      "verify", "regenerate and re-check one published result");
  verify
      ->add_option("target", verify_target_name,
                   "lemma-3.2 | lemma-3.4 | lemma-4.1 | lemma-5.1 | "
                   "corollary-2.2")
      ->required();
  verify->add_option("--threads", vopt.threads, "worker threads");
  verify->add_option("--seed", vopt.seed, "seed for randomized sweeps");
  verify->add_option("--trials", vopt.trials, "trials for randomized sweeps");
  verify->add_option("--n", vopt.n_max, "largest instance in family sweeps");
  verify->add_option("--witness-cap", vopt.witness_cap,
                     "max optimal structures kept");
  verify->add_option("--out", verify_out, "also write the JSON report here");

  // svg
  std::string svg_in, svg_out;
  bool svg_overlay = false;
  CLI::App* svg = app.add_subcommand("svg", "render a graph file as SVG");
  svg->add_option("graph", svg_in, "graph JSON file")->required();
  svg->add_option("out", svg_out, "output SVG path")->required();
  svg->add_flag("--maxcut-overlay", svg_overlay,
                "overlay a line realizing a maximizing partition");

  CLI11_PARSE(app, argc, argv);

  try {
    if (lines->parsed()) return run_lines(lines_points);
    if (stab->parsed()) return run_stab(stab_graph);
    if (minstab->parsed()) {
      return run_minstab(ms_points, ms_class, ms_mode, ms_threads, ms_cap,
                         ms_out);
    }
    if (gen->parsed()) {
      if (gen_tree9->parsed()) return run_gen(stabkit::gen_tree_cex_9(), gen_out);
      if (gen_tree->parsed()) return run_gen(stabkit::gen_tree_cex(gen_n), gen_out);
      if (gen_tri->parsed()) return run_gen(stabkit::gen_tri_cex(gen_tri_n), gen_out);
      if (gen_matching->parsed()) {
        return run_gen(stabkit::gen_matching_cex(gen_k), gen_out);
      }
    }
    if (verify->parsed()) {
      return run_verify(verify_target_name, vopt, verify_out);
    }
    if (svg->parsed()) return run_svg(svg_in, svg_out, svg_overlay);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
