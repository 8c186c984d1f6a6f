#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fsmatch/circuit.hpp"
#include "fsmatch/encoding.hpp"

namespace fsmatch {

// Upper bound on the layer count of a built fragment: `value` is the bound
// for the concrete parameters, `form` the closed formula it came from.
struct DepthBound {
  std::string form;
  uint32_t value = 0;
};

// A circuit fragment over caller-designated registers. Ancillae are taken
// as a prefix of the pool the caller supplies and are returned to 0 on every
// basis input that meets the builder's precondition.
struct OperatorFragment {
  Circuit fragment;
  std::vector<std::pair<std::string, QubitRange>> io;
  QubitRange ancillae;  // used prefix of the supplied pool; width may be 0
  DepthBound depth_bound;
};

// Doubling tree of CX gates. With all targets clean the control is copied
// onto every target; depth ceil(log2(k+1)) for k targets, no ancillae.
OperatorFragment build_fanout(QubitId control, QubitRange targets);

// Multi-controlled X with per-control polarity, lowered to a balanced CCX
// tree with k-1 pool ancillae and a mirrored uncompute. Depth
// 2*ceil(log2(k)) + 1. k = 1 and k = 2 emit a bare CX/CCX.
OperatorFragment build_mcx(std::span<const Control> controls, QubitId target,
                           QubitRange ancilla_pool);

// Per-position XNOR of two registers: out[j] flips iff x[j] == y[j].
// Two CCX layers conjugated by X batteries; depth 4, no ancillae.
OperatorFragment build_match(QubitRange x, QubitRange y, QubitRange out);

// Character-block variant: x and y hold n blocks of enc.bits() qubits each;
// out[j] is set iff block j of x equals block j of y. Pool use:
// n*bits XNOR qubits plus n*(bits-1) tree qubits.
OperatorFragment build_match_block(QubitRange x, QubitRange y, QubitRange out,
                                   const BlockEncoding& enc,
                                   QubitRange ancilla_pool);

// Doubling step at the given level >= 1: out[j] flips iff
// prev[j] and prev[j + 2^(level-1)] are both set, for j + 2^level <= n.
// Two CCX layers, no ancillae.
OperatorFragment build_ext(QubitRange prev, QubitRange out, uint32_t level);

// Reverses the qubit order of a register in one layer of swaps.
OperatorFragment build_reversal(QubitRange reg);

// Cyclic right rotation of reg by 2^m positions when the control is set.
// Rotation by two reversals, every swap promoted to a CSWAP driven by a
// fanned-out copy of the control; pool use floor(L/2).
OperatorFragment build_ctrl_rot_pow2(QubitId control, QubitRange reg,
                                     uint32_t m, QubitRange ancilla_pool);

// out[i] flips iff control AND a[i] AND b[i]; the control is fanned out so
// all position gates run in parallel. Pool use |a|.
OperatorFragment build_ctrl_bitwise_and(QubitId control, QubitRange a,
                                        QubitRange b, QubitRange out,
                                        QubitRange ancilla_pool);

// Copy with reverse control: b[i] flips iff a[i] is set and the control is
// NOT. X-conjugated control fanned out to |a| pool qubits.
OperatorFragment build_crc(QubitId control, QubitRange a, QubitRange b,
                           QubitRange ancilla_pool);

// r flips iff any qubit of a is set: X battery, one multi-controlled X,
// X battery, final X on r. Pool use |a| - 1.
OperatorFragment build_disjunction(QubitRange a, QubitId r,
                                   QubitRange ancilla_pool);

}  // namespace fsmatch
