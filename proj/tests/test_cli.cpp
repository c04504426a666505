#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "stabkit/io.hpp"
#include "stabkit/verify.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(STABKIT_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) {
    result.output.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("cli lines lists C(n,2) partitions") {
  const std::string path = temp_file("cli_tri.json");
  {
    std::ofstream out(path);
    out << R"({"points": [[0, 0], [4, 0], [2, 3]]})";
  }
  const RunResult r = run_cli("lines " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("count: 3") != std::string::npos);
  CHECK(r.output.find("{0, 2} | {1}") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cli stab prints the maximum and a maximizing partition") {
  const std::string path = temp_file("cli_graph.json");
  {
    std::ofstream out(path);
    out << R"({"points": [[0, 0], [4, 0], [2, 3]], "edges": [[0, 1], [1, 2]]})";
  }
  const RunResult r = run_cli("stab " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("stabbing number: 2") != std::string::npos);
  CHECK(r.output.find("maximizing partition:") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cli minstab emits a JSON report") {
  const std::string path = temp_file("cli_pts5.json");
  stabkit::write_json_file(
      path, stabkit::points_to_json(stabkit::random_general_position(5, 3)));
  const RunResult r = run_cli("minstab --class tree --mode exhaustive " + path);
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report["schema"] == 1);
  CHECK(report["explored"] == 125);
  CHECK(report["optimum"].get<int>() >= 2);
  CHECK(report["witness_edges"].size() == 4);
  std::remove(path.c_str());
}

TEST_CASE("cli minstab refuses infeasible exhaustive requests upfront") {
  const std::string path = temp_file("cli_pts13.json");
  stabkit::write_json_file(
      path, stabkit::points_to_json(stabkit::random_general_position(13, 5)));
  const RunResult r = run_cli("minstab --class tree --mode exhaustive " + path);
  CHECK(r.exit_code != 0);
  CHECK(r.output.find("use --mode bnb") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cli gen writes a bundle and verify accepts constructions") {
  const std::string dir = temp_file("cli_bundle_m5");
  const RunResult g = run_cli("gen matching --k 5 --out " + dir);
  CHECK(g.exit_code == 0);
  CHECK(std::filesystem::exists(std::filesystem::path(dir) / "witness.json"));

  const std::string report_path = temp_file("cli_verify_51.json");
  const RunResult v = run_cli("verify lemma-5.1 --out " + report_path);
  CHECK(v.exit_code == 0);
  const json report = json::parse(std::ifstream(report_path));
  CHECK(report["pass"] == true);
  CHECK(report["counts"]["matchings_explored"] == 945);
  std::filesystem::remove_all(dir);
  std::remove(report_path.c_str());
}

TEST_CASE("cli svg output is byte identical across runs") {
  const std::string graph = temp_file("cli_svg_graph.json");
  {
    std::ofstream out(graph);
    out << R"({"points": [[0, 0], [40, 0], [20, 30]], "edges": [[0, 2]]})";
  }
  const std::string out1 = temp_file("cli_out1.svg");
  const std::string out2 = temp_file("cli_out2.svg");
  CHECK(run_cli("svg " + graph + " " + out1).exit_code == 0);
  CHECK(run_cli("svg " + graph + " " + out2 + " --maxcut-overlay").exit_code ==
        0);
  CHECK(run_cli("svg " + graph + " " + out1).exit_code == 0);
  std::ifstream f1(out1), f2(out2);
  const std::string s1((std::istreambuf_iterator<char>(f1)),
                       std::istreambuf_iterator<char>());
  const std::string s2((std::istreambuf_iterator<char>(f2)),
                       std::istreambuf_iterator<char>());
  CHECK(!s1.empty());
  CHECK(s1 != s2);  // overlay adds the separating line
  const RunResult again = run_cli("svg " + graph + " " + out2 +
                                  " --maxcut-overlay");
  CHECK(again.exit_code == 0);
  std::ifstream f3(out2);
  const std::string s3((std::istreambuf_iterator<char>(f3)),
                       std::istreambuf_iterator<char>());
  CHECK(s2 == s3);
  for (const std::string& p : {graph, out1, out2}) std::remove(p.c_str());
}

TEST_CASE("cli rejects unknown verify targets") {
  const RunResult r = run_cli("verify lemma-9.9");
  CHECK(r.exit_code != 0);
  CHECK(r.output.find("unknown target") != std::string::npos);
}

TEST_CASE("verification reports round trip through JSON") {
  stabkit::VerifyOptions opt;
  opt.trials = 5;
  const stabkit::VerificationReport report =
      stabkit::verify_target("corollary-2.2", opt);
  CHECK(report.all_pass());
  const json j = stabkit::verification_to_json(report);
  CHECK(j["pass"] == true);
  CHECK(j["schema"] == 1);
  CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("verification is deterministic for a fixed seed") {
  stabkit::VerifyOptions opt;
  opt.trials = 10;
  opt.seed = 99;
  json a = stabkit::verification_to_json(stabkit::verify_target("corollary-2.2", opt));
  json b = stabkit::verification_to_json(stabkit::verify_target("corollary-2.2", opt));
  a.erase("seconds");
  b.erase("seconds");
  CHECK(a == b);

  opt.seed = 100;
  json c = stabkit::verification_to_json(stabkit::verify_target("corollary-2.2", opt));
  CHECK(c["pass"] == true);
}
