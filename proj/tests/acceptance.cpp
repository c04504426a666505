// Acceptance suite: one binary, one pass/fail line per criterion, exit 0
// only if everything holds at the stated tolerances.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "stabkit/bipartition.hpp"
#include "stabkit/constructions.hpp"
#include "stabkit/enumerate.hpp"
#include "stabkit/graph.hpp"
#include "stabkit/search.hpp"
#include "support.hpp"

using namespace stabkit;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

std::vector<Criterion> g_results;

template <typename F>
void run(int id, const std::string& name, F&& body) {
  const auto start = Clock::now();
  bool pass = false;
  std::string detail;
  try {
    detail = body(&pass);
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - start).count();
  g_results.push_back({id, name, pass, detail, secs});
}

std::uint64_t choose2(int n) {
  return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

// 1. Representative-set cardinality on random sets and the generated pair.
std::string criterion_1(bool* pass) {
  const auto start = Clock::now();
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);  // 3..12
    const PointSet ps = random_general_position(n, seed * 101 + 7);
    if (representative_partitions(ps).partitions.size() != choose2(n)) {
      *pass = false;
      return "cardinality mismatch at seed " + std::to_string(seed);
    }
    ++checked;
  }
  const ConstructionBundle b = gen_tree_cex_9();
  const int h1 = representative_partitions(b.small).size();
  const int h2 = representative_partitions(b.big).size();
  const double secs =
      std::chrono::duration<double>(Clock::now() - start).count();
  *pass = h1 == 36 && h2 == 45 && secs < 1.0;
  return std::to_string(checked) + " random sets, |H_P1|=" +
         std::to_string(h1) + ", |H_P2|=" + std::to_string(h2) + ", " +
         std::to_string(secs) + "s";
}

// 2. The 9-point brute force: 4782969 trees, optimum 4, witness 3.
std::string criterion_2(bool* pass) {
  const ConstructionBundle b = gen_tree_cex_9();
  SearchOptions opt;
  opt.threads = 1;
  const SearchOutcome r = min_stab_tree(b.small, opt);
  const int witness_stab =
      stabbing_number(b.witness, representative_partitions(b.big));
  *pass = r.explored == 4782969 && r.optimum == 4 && witness_stab == 3 &&
          r.seconds <= 300.0;
  return "explored=" + std::to_string(r.explored) + ", optimum=" +
         std::to_string(r.optimum) + ", witness=" +
         std::to_string(witness_stab) + ", " + std::to_string(r.seconds) +
         "s single-threaded";
}

// 3. The generalized family at n = 9..14: full validation, witness exactly
// 3, and the n = 9 member exhaustively pinned to 4.
std::string criterion_3(bool* pass) {
  for (int n = 9; n <= 14; ++n) {
    const ConstructionBundle b = gen_tree_cex(n);
    if (!b.validation.all_pass()) {
      *pass = false;
      return "n=" + std::to_string(n) + ": " +
             b.validation.first_failure();
    }
    const int stab =
        stabbing_number(b.witness, representative_partitions(b.big));
    if (stab != 3) {
      *pass = false;
      return "n=" + std::to_string(n) + ": witness stabbing " +
             std::to_string(stab);
    }
  }
  const SearchOutcome base = min_stab_tree(gen_tree_cex(9).small);
  *pass = base.optimum == 4 && base.explored == 4782969;
  return "n=9..14 validated, witness=3 each; exhaustive n=9 optimum=" +
         std::to_string(base.optimum);
}

// 4. Matchings at k = 5: all 945 enumerated, optimum >= 3, partner <= 2.
std::string criterion_4(bool* pass) {
  const ConstructionBundle b = gen_matching_cex(5);
  const SearchOutcome r = min_stab_matching(b.small);
  const int partner_stab =
      stabbing_number(b.witness, representative_partitions(b.big));
  *pass = r.explored == 945 && r.optimum >= 3 && partner_stab <= 2 &&
          r.seconds < 1.0;
  return "explored=" + std::to_string(r.explored) + ", optimum=" +
         std::to_string(r.optimum) + ", partner=" +
         std::to_string(partner_stab);
}

// 5. Triangulations: forced mid cut at n=4, witness bound at n=8.
std::string criterion_5(bool* pass) {
  const auto start = Clock::now();
  const ConstructionBundle b4 = gen_tri_cex(4);
  std::uint64_t mask = 0;
  for (int i = 0; i < 4; ++i) mask |= std::uint64_t{1} << i;
  const Bipartition mid = make_bipartition(mask, b4.small.size());
  int min_cut = 1 << 20;
  triangulations(b4.small, [&](const EdgeList& edges) {
    int cut = 0;
    for (const Edge& e : edges) {
      if (mid.separates(e.u, e.v)) ++cut;
    }
    if (cut < min_cut) min_cut = cut;
  });
  const ConstructionBundle b8 = gen_tri_cex(8);
  const int stab8 =
      stabbing_number(b8.witness, representative_partitions(b8.big));
  const double secs =
      std::chrono::duration<double>(Clock::now() - start).count();
  *pass = min_cut >= 7 && stab8 <= 23 && secs < 10.0;
  return "min mid cut (n=4) = " + std::to_string(min_cut) +
         ", witness stab (n=8) = " + std::to_string(stab8) + " <= 23, " +
         std::to_string(secs) + "s";
}

// 6. Path stabbing monotone under point removal.
std::string criterion_6(bool* pass) {
  int violations = 0;
  int removals = 0;
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(trial % 4);  // 4..7
    const PointSet ps = random_general_position(n, trial * 911 + 13);
    const int base = min_stab_path(ps).optimum;
    for (int drop = 0; drop < n; ++drop) {
      const PointSet reduced = ps.without({drop});
      ++removals;
      if (min_stab_path(reduced).optimum > base) ++violations;
    }
  }
  *pass = violations == 0;
  return std::to_string(removals) + " removals across 200 sets, " +
         std::to_string(violations) + " violations";
}

// 7. Degree-1 removal and degree-2 contraction never increase stabbing.
std::string criterion_7(bool* pass) {
  int violations = 0;
  int applications = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 4 + static_cast<int>(seed % 6);  // 4..9
    const GeometricGraph g = test::random_graph(n, seed * 37 + 5);
    const RepresentativeSet reps = representative_partitions(g.points());
    const int before = stabbing_number(g, reps);
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) == 1) {
        ++applications;
        if (stabbing_number(remove_degree1(g, v), reps) > before) {
          ++violations;
        }
      } else if (g.degree(v) == 2) {
        const auto nbrs = g.neighbors(v);
        if (!g.has_edge(nbrs[0], nbrs[1])) {
          ++applications;
          if (stabbing_number(contract_degree2(g, v), reps) > before) {
            ++violations;
          }
        }
      }
    }
  }
  *pass = applications > 0 && violations == 0;
  return std::to_string(applications) + " reductions over 500 graphs, " +
         std::to_string(violations) + " violations";
}

// 8. Forest contraction keeps at most one non-special vertex and at most
// three components.
std::string criterion_8(bool* pass) {
  int violations = 0;
  int runs = 0;
  for (std::uint64_t seed = 0; runs < 1000; ++seed) {
    const int n = 6 + static_cast<int>(seed % 8);  // 6..13
    const GeometricGraph f = test::random_forest(n, seed * 29 + 3);
    std::uint64_t s = seed * 2654435761ull + 17;
    auto pick = [&s, n]() {
      s ^= s << 13;
      s ^= s >> 7;
      s ^= s << 17;
      return static_cast<int>(s % n);
    };
    const int a = pick();
    int b = pick(), c = pick();
    if (a == b || b == c || a == c) continue;
    ++runs;
    const std::array<int, 3> specials = {a, b, c};
    const GeometricGraph reduced = reduce_with_specials(f, specials);
    const std::vector<int> live = live_vertices(reduced, specials);
    if (!is_forest(reduced) || live.size() > 4 ||
        component_count(reduced, live) > 3) {
      ++violations;
    }
  }
  *pass = violations == 0;
  return std::to_string(runs) + " forests, " + std::to_string(violations) +
         " violations";
}

// 9. Oracle equivalence: branch-and-bound vs exhaustive, and the partition
// evaluator vs an independent line-sampling oracle.
std::string criterion_9(bool* pass) {
  int bnb_checked = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);  // 4..8
    const PointSet ps = random_general_position(n, seed * 53 + 21);
    SearchOptions bnb;
    bnb.mode = SearchMode::kBranchAndBound;
    if (min_stab_tree(ps).optimum != min_stab_tree(ps, bnb).optimum) {
      *pass = false;
      return "bnb mismatch at seed " + std::to_string(seed);
    }
    ++bnb_checked;
  }
  int oracle_checked = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);  // 3..7
    const GeometricGraph g = test::random_graph(n, seed * 97 + 2);
    const RepresentativeSet reps = representative_partitions(g.points());
    if (stabbing_number(g, reps) != test::line_sample_stab(g)) {
      *pass = false;
      return "evaluator/oracle mismatch at seed " + std::to_string(seed);
    }
    ++oracle_checked;
  }
  *pass = true;
  return std::to_string(bnb_checked) + " bnb equalities, " +
         std::to_string(oracle_checked) + " oracle equalities";
}

}  // namespace

int main() {
  run(1, "representative-set cardinality", criterion_1);
  run(2, "9-point exhaustive tree search", criterion_2);
  run(3, "generalized family n=9..14", criterion_3);
  run(4, "matching family k=5", criterion_4);
  run(5, "triangulation bounds", criterion_5);
  run(6, "path stabbing monotonicity", criterion_6);
  run(7, "reduction monotonicity", criterion_7);
  run(8, "forest contraction", criterion_8);
  run(9, "oracle equivalence", criterion_9);

  bool all = true;
  for (const Criterion& c : g_results) {
    std::printf("criterion %d: %s - %s (%s) [%.2fs]\n", c.id,
                c.pass ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str(),
                c.seconds);
    all = all && c.pass;
  }
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
