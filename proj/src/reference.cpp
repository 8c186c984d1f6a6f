#include "fsmatch/reference.hpp"

#include <bit>
#include <stdexcept>

namespace fsmatch {

namespace {

uint32_t floor_log2_u32(uint32_t v) {
  return 31u - static_cast<uint32_t>(std::countl_zero(v));
}

}  // namespace

PowerDecomposition::PowerDecomposition(uint32_t d) : d_(d) {
  if (d == 0) {
    throw std::invalid_argument("power_decomposition: d must be positive");
  }
  const uint32_t digits = floor_log2_u32(d) + 1;
  digits_.resize(digits);
  for (uint32_t i = 0; i < digits; ++i) {
    digits_[i] = static_cast<uint8_t>((d >> i) & 1u);
    if (digits_[i]) set_positions_.push_back(i);
  }
}

uint32_t PowerDecomposition::partial(int m) const {
  if (m < 0) return 0;
  uint32_t sum = 0;
  const uint32_t top = std::min<uint32_t>(static_cast<uint32_t>(m),
                                          digit_count() - 1);
  for (uint32_t i = 0; i <= top; ++i) {
    if (digits_[i]) sum += 1u << i;
  }
  return sum;
}

PowerDecomposition power_decomposition(uint32_t d) {
  return PowerDecomposition(d);
}

MatchVector initial_match_vector(const InputPair& pair) {
  const uint32_t n = pair.n();
  MatchVector mv{0, BitVec(n)};
  for (uint32_t j = 0; j < n; ++j) {
    if (pair.x()[j] == pair.y()[j]) mv.bits.set(j, true);
  }
  return mv;
}

MatchVector extend_match_vector(const MatchVector& prev) {
  const uint32_t n = prev.bits.size();
  const uint32_t level = prev.level + 1;
  const uint32_t half = 1u << prev.level;
  const uint32_t window = half * 2;
  MatchVector out{level, BitVec(n)};
  if (window > n) return out;
  out.bits = prev.bits & prev.bits.shifted_left(half);
  // Windows of width 2^level no longer fit at positions past n - 2^level.
  for (uint32_t j = n - window + 1; j < n; ++j) {
    out.bits.set(j, false);
  }
  return out;
}

bool power_factor_check(const InputPair& pair, uint32_t j, uint32_t d,
                        std::span<const MatchVector> match_vecs) {
  if (d == 0 || d > pair.n() || j > pair.n() - d) {
    throw std::out_of_range("power_factor_check: position out of range");
  }
  const PowerDecomposition dec(d);
  for (uint32_t i : dec.set_positions()) {
    if (i >= match_vecs.size() || match_vecs[i].level != i) {
      throw std::invalid_argument(
          "power_factor_check: match vector for a set digit is missing");
    }
    const uint32_t pos = j + dec.partial(static_cast<int>(i) - 1);
    if (!match_vecs[i].bits.get(pos)) return false;
  }
  return true;
}

SurvivorVector initial_survivor(const ProblemSpec& spec, uint32_t n) {
  spec.validate(n);
  SurvivorVector sv{-1, BitVec(n + 1)};
  switch (spec.kind) {
    case ProblemKind::FPM:
      sv.bits.set(0, true);
      break;
    case ProblemKind::FFM:
      sv.bits.set(*spec.j, true);
      break;
    case ProblemKind::SFSC:
      sv.bits = BitVec::ones(n + 1);
      break;
  }
  return sv;
}

FsmTrace fsm_classical_trace(const InputPair& pair, const ProblemSpec& spec) {
  spec.validate(pair.n());
  const uint32_t n = pair.n();
  const PowerDecomposition dec(spec.d);
  const uint32_t steps = dec.digit_count();

  FsmTrace trace;
  trace.match_vecs.reserve(steps);
  trace.match_vecs.push_back(initial_match_vector(pair));
  for (uint32_t i = 1; i < steps; ++i) {
    trace.match_vecs.push_back(extend_match_vector(trace.match_vecs.back()));
  }

  trace.survivors.reserve(steps + 1);
  trace.survivors.push_back(initial_survivor(spec, n));
  for (uint32_t i = 0; i < steps; ++i) {
    const SurvivorVector& prev = trace.survivors.back();
    SurvivorVector next{static_cast<int>(i), prev.bits};
    if (dec.digit(i)) {
      // The match vector is one position narrower than the survivor
      // vector; its missing slot at index n reads as constant 0.
      BitVec widened(n + 1);
      for (uint32_t j = 0; j < n; ++j) {
        widened.set(j, trace.match_vecs[i].bits.get(j));
      }
      next.bits = (prev.bits & widened).shifted_right(1u << i);
    }
    trace.survivors.push_back(std::move(next));
  }

  trace.answer = trace.survivors.back().bits.any_in(spec.d, n);
  return trace;
}

FsmResult fsm_classical(const InputPair& pair, const ProblemSpec& spec) {
  FsmTrace trace = fsm_classical_trace(pair, spec);
  return {trace.answer, std::move(trace.survivors.back())};
}

bool brute_force_check(const InputPair& pair, const ProblemSpec& spec) {
  spec.validate(pair.n());
  const uint32_t n = pair.n();
  const uint32_t d = spec.d;
  const auto equal_at = [&](uint32_t j) {
    return pair.x().compare(j, d, pair.y(), j, d) == 0;
  };
  switch (spec.kind) {
    case ProblemKind::FPM:
      return equal_at(0);
    case ProblemKind::FFM:
      return equal_at(*spec.j);
    case ProblemKind::SFSC:
      for (uint32_t j = 0; j + d <= n; ++j) {
        if (equal_at(j)) return true;
      }
      return false;
  }
  return false;
}

}  // namespace fsmatch
