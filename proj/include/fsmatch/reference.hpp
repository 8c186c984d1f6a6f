#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fsmatch/bitvec.hpp"
#include "fsmatch/problem.hpp"

namespace fsmatch {

// Match vector at doubling level i: bits[j] == 1 iff the length-2^i
// substrings of x and y starting at j are equal. Positions whose window
// would run past the end are 0.
struct MatchVector {
  uint32_t level = 0;
  BitVec bits;
};

// Survivor vector at step i (level -1 is the seed). A set bit at position
// j + partial(i) records that the seed admitted position j and the first
// partial(i) characters from j match, where partial(i) is the length
// consumed by steps 0..i. Width n+1.
struct SurvivorVector {
  int level = -1;
  BitVec bits;
};

// Binary digits of d, least-significant first, plus their prefix sums and
// the positions of the set digits.
class PowerDecomposition {
 public:
  explicit PowerDecomposition(uint32_t d);

  uint32_t d() const { return d_; }
  // Number of digits = floor(log2(d)) + 1.
  uint32_t digit_count() const { return static_cast<uint32_t>(digits_.size()); }
  bool digit(uint32_t i) const { return digits_[i] != 0; }
  // Sum of digit(i) * 2^i for i <= m; 0 when m is negative.
  uint32_t partial(int m) const;
  const std::vector<uint32_t>& set_positions() const { return set_positions_; }

 private:
  uint32_t d_ = 0;
  std::vector<uint8_t> digits_;
  std::vector<uint32_t> set_positions_;
};

PowerDecomposition power_decomposition(uint32_t d);

// Level-0 match vector: per-position character equality.
MatchVector initial_match_vector(const InputPair& pair);

// Doubling step: out[j] = prev[j] AND prev[j + 2^(i-1)] wherever the level-i
// window fits, 0 elsewhere.
MatchVector extend_match_vector(const MatchVector& prev);

// Conjunction test from the power decomposition: AND over the set digits i
// of match_vecs[i] at position j + partial(i-1). Equivalent to comparing
// x[j..j+d-1] with y[j..j+d-1] directly. match_vecs is indexed by level and
// must hold at least the levels named by d's set digits.
bool power_factor_check(const InputPair& pair, uint32_t j, uint32_t d,
                        std::span<const MatchVector> match_vecs);

// Seed vector of width n+1: FPM admits only position 0, FFM only position j,
// SFSC every position.
SurvivorVector initial_survivor(const ProblemSpec& spec, uint32_t n);

struct FsmTrace {
  // match_vecs[i] is the level-i match vector, i = 0..floor(log2(d)).
  std::vector<MatchVector> match_vecs;
  // survivors[0] is the seed (level -1); survivors[i+1] is the step-i state.
  std::vector<SurvivorVector> survivors;
  bool answer = false;
};

struct FsmResult {
  bool answer = false;
  SurvivorVector final_survivor;
};

// Bit-vector form of the fixed substring matcher. Steps through the digits
// of d; where digit i is set, the survivor vector is ANDed with the level-i
// match vector and shifted right by 2^i, otherwise it is carried unchanged.
// The answer is the OR of the final vector over positions d..n.
FsmTrace fsm_classical_trace(const InputPair& pair, const ProblemSpec& spec);
FsmResult fsm_classical(const InputPair& pair, const ProblemSpec& spec);

// Naive character-by-character comparison; the independent reference answer.
bool brute_force_check(const InputPair& pair, const ProblemSpec& spec);

}  // namespace fsmatch
