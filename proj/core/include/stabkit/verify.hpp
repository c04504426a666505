#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace stabkit {

struct ClaimResult {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::string target;
  std::vector<ClaimResult> claims;
  std::map<std::string, std::uint64_t> counts;
  std::map<std::string, std::string> input_hashes;
  double seconds = 0.0;
  std::string version;

  bool all_pass() const;
};

struct VerifyOptions {
  int threads = 1;
  std::uint64_t seed = 1;
  int trials = 200;
  /// Largest instance for sweeps with a size axis (lemma-3.4 checks the
  /// whole family 9..n_max).
  int n_max = 14;
  int witness_cap = 16;
};

/// Regenerates the relevant construction and re-runs the computation behind
/// one result. Targets: lemma-3.2, lemma-3.4, lemma-4.1, lemma-5.1,
/// corollary-2.2. Throws std::invalid_argument for unknown targets or
/// requests beyond the documented exhaustive limits.
VerificationReport verify_target(const std::string& target,
                                 const VerifyOptions& options = {});

nlohmann::json verification_to_json(const VerificationReport& report);

}  // namespace stabkit
