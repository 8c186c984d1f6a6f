#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fsmatch/circuit.hpp"
#include "fsmatch/encoding.hpp"
#include "fsmatch/problem.hpp"
#include "fsmatch/reference.hpp"

namespace fsmatch {

// Where each register of the assembled circuit lives. Match registers hold
// one qubit per string position; survivor registers are one wider. The
// ancilla pool is shared by all stages, each of which restores it to 0.
struct RegisterLayout {
  uint32_t n = 0;
  uint32_t bits = 1;
  uint32_t levels = 0;  // floor(log2(d))

  QubitRange x;
  QubitRange y;
  QubitRange dbits;                  // digits of d, LSB first after init
  std::vector<QubitRange> match;     // match[i]: level-i match vector
  std::vector<QubitRange> survivor;  // survivor[0] is the seed (level -1)
  QubitRange result;
  QubitRange ancilla;

  uint32_t qubit_count = 0;
};

struct Stage {
  std::string name;
  size_t gate_begin = 0;
  size_t gate_end = 0;
};

struct Assembly {
  Circuit circuit;
  RegisterLayout layout;
  std::vector<Stage> stages;
};

// Builds the full circuit for one problem instance: an init stage loads x,
// y, the digits of d (reversed into LSB-first order by a swap stage) and
// the seed survivor pattern; a match stage computes all match vectors; one
// stage per digit of d combines survivor and match vectors under control of
// that digit; a final stage ORs the last survivor register into the result
// qubit. The circuit shape depends only on (n, floor(log2 d), bits).
Assembly assemble(const InputPair& pair, const ProblemSpec& spec,
                  const BlockEncoding& enc);

struct RunReport {
  bool answer = false;
  // Sum of per-stage depths (stages run back to back); the whole-circuit
  // as-soon-as-possible depth is reported separately. Controlled swaps
  // count one layer; swap_expanded_depth charges them as their three-gate
  // CX/CCX lowering instead.
  uint32_t depth = 0;
  uint32_t asap_depth = 0;
  uint32_t swap_expanded_depth = 0;
  size_t size = 0;
  uint32_t qubits = 0;
  uint32_t ancillae = 0;
  std::vector<std::pair<std::string, uint32_t>> stage_depths;
};

// Assembles, simulates from the all-zero state, and reads the result qubit.
RunReport run(const InputPair& pair, const ProblemSpec& spec,
              const BlockEncoding& enc);

struct ScanRow {
  uint32_t n = 0;
  uint32_t d = 0;
  uint32_t depth = 0;
  size_t gate_count = 0;
  uint32_t qubits = 0;
};

// Depth/size/qubit table over a sweep of register sizes; n values must be
// powers of two. Deterministic: identical inputs give identical tables.
std::vector<ScanRow> depth_scan(std::span<const uint32_t> n_values,
                                const std::function<uint32_t(uint32_t)>& d_policy,
                                ProblemKind kind, uint32_t enc_bits);

}  // namespace fsmatch
