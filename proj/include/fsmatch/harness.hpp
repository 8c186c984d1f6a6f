#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fsmatch/encoding.hpp"
#include "fsmatch/problem.hpp"

namespace fsmatch {

// Seed used by the CLI when none is given; fixed so runs are reproducible.
inline constexpr uint64_t kDefaultSeed = 0x00066736d6174ull;

struct RandomInstance {
  std::string x_raw;
  std::string y_raw;
  ProblemSpec spec;
};

// Draws a raw pair whose padded length is exactly n_padded, over the first
// sigma letters of 'a'.. ('0'/'1' when sigma <= 2). Roughly half the cases
// get a shared segment planted so positive answers are well represented.
RandomInstance random_instance(std::mt19937_64& rng, uint32_t n_padded,
                               uint32_t sigma);

struct VerifyConfig {
  std::vector<uint32_t> n_values{16, 32};
  uint32_t sigma = 2;
  uint32_t trials = 1000;  // per n value
  uint64_t seed = kDefaultSeed;
  uint32_t threads = 0;  // 0 = hardware concurrency
};

struct Disagreement {
  uint64_t seed = 0;
  uint64_t index = 0;
  uint32_t n = 0;
  std::string x_raw;
  std::string y_raw;
  std::string kind;
  uint32_t d = 0;
  int64_t j = -1;
  bool classical = false;
  bool circuit = false;
  bool brute = false;
};

struct VerifySummary {
  uint64_t cases = 0;
  std::vector<Disagreement> disagreements;
};

// Runs classical, circuit and brute-force routes on seeded random instances
// and reports every case where they differ. Cases are generated up front
// and merged back in index order, so the summary does not depend on the
// thread count.
VerifySummary run_verify(const VerifyConfig& config);

}  // namespace fsmatch
