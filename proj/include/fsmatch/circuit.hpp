#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "fsmatch/bitvec.hpp"

namespace fsmatch {

using QubitId = uint32_t;

// One classical bit per qubit; the exact state space for a circuit built
// from permutation gates only.
using BasisState = BitVec;

class CircuitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GateKind : uint8_t { X, CX, CCX, MCX, Swap, CSwap };

std::string_view to_string(GateKind kind);

enum class Polarity : uint8_t { Pos, Neg };

// A control line; a negative control is satisfied by |0> instead of |1>.
struct Control {
  QubitId qubit = 0;
  Polarity polarity = Polarity::Pos;

  bool operator==(const Control&) const = default;
};

inline Control pos(QubitId q) { return {q, Polarity::Pos}; }
inline Control neg(QubitId q) { return {q, Polarity::Neg}; }

struct Gate {
  GateKind kind = GateKind::X;
  boost::container::small_vector<QubitId, 2> targets;
  boost::container::small_vector<Control, 4> controls;

  static Gate x(QubitId t) { return {GateKind::X, {t}, {}}; }
  static Gate cx(Control c, QubitId t) { return {GateKind::CX, {t}, {c}}; }
  static Gate cx(QubitId c, QubitId t) { return cx(pos(c), t); }
  static Gate ccx(Control c0, Control c1, QubitId t) {
    return {GateKind::CCX, {t}, {c0, c1}};
  }
  static Gate ccx(QubitId c0, QubitId c1, QubitId t) {
    return ccx(pos(c0), pos(c1), t);
  }
  static Gate mcx(std::vector<Control> cs, QubitId t);
  static Gate swap(QubitId a, QubitId b) { return {GateKind::Swap, {a, b}, {}}; }
  static Gate cswap(Control c, QubitId a, QubitId b) {
    return {GateKind::CSwap, {a, b}, {c}};
  }
  static Gate cswap(QubitId c, QubitId a, QubitId b) {
    return cswap(pos(c), a, b);
  }

  // Arity rules plus pairwise distinctness of all touched qubits.
  // Returns the failure reason instead of throwing.
  std::optional<std::string> malformed() const;

  QubitId max_qubit() const;

  bool operator==(const Gate&) const = default;
};

// Contiguous block of qubit indices.
struct QubitRange {
  QubitId start = 0;
  uint32_t width = 0;

  QubitId operator[](uint32_t i) const { return start + i; }
  QubitId end() const { return start + width; }
  bool contains(QubitId q) const { return q >= start && q < end(); }
  bool overlaps(const QubitRange& o) const {
    return start < o.end() && o.start < end();
  }
  QubitRange sub(uint32_t offset, uint32_t w) const;

  bool operator==(const QubitRange&) const = default;
};

// Reversible gate netlist over a fixed set of qubits, with optional named
// registers and ancilla flags. Gates are validated on insertion, so a stored
// circuit is always structurally sound.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(uint32_t qubit_count) : qubit_count_(qubit_count) {}

  uint32_t qubit_count() const { return qubit_count_; }
  void grow_to(uint32_t qubit_count);

  QubitRange add_register(std::string name, uint32_t width);

  // Annotates an externally chosen range with a name; used by fragments
  // whose registers live in the caller's qubit numbering. Ranges must not
  // overlap registers already present.
  QubitRange name_range(std::string name, QubitRange range);

  std::optional<QubitRange> find_register(std::string_view name) const;
  const std::vector<std::pair<std::string, QubitRange>>& registers() const {
    return registers_;
  }

  void mark_ancilla(QubitRange range) { ancilla_ranges_.push_back(range); }
  const std::vector<QubitRange>& ancilla_ranges() const {
    return ancilla_ranges_;
  }

  const std::vector<Gate>& gates() const { return gates_; }

  void append(Gate gate);

  // Appends all gates of the fragment in order. The fragment must address
  // qubits that exist here; its registers are not merged.
  void compose(const Circuit& fragment);

 private:
  uint32_t qubit_count_ = 0;
  std::vector<Gate> gates_;
  std::vector<std::pair<std::string, QubitRange>> registers_;
  std::vector<QubitRange> ancilla_ranges_;
};

// Applies gates [begin, end) to the state in place.
void apply_gates(const Circuit& circuit, BasisState& state, size_t begin,
                 size_t end);

BasisState simulate(const Circuit& circuit, const BasisState& input);

// Gate order reversed; every gate in the set is self-inverse.
Circuit inverse(const Circuit& circuit);

// Adds one control qubit to every gate. The control must not be touched by
// any existing gate; with the control at 1 the result acts like the
// original, at 0 it is the identity.
Circuit controlled_version(const Circuit& circuit, QubitId control);

// Rewrites swap-family gates into their CX/CCX equivalents (a swap is three
// alternating CX, a controlled swap one Toffoli conjugated by CX), for depth
// accounting that charges a controlled swap as three gates.
Circuit expand_swaps(const Circuit& circuit);

// Partition of the gate sequence into parallel time-steps: each gate goes to
// the earliest layer after every previous gate that shares a qubit with it.
struct Layering {
  std::vector<std::vector<uint32_t>> layers;
};

Layering compute_layers(const Circuit& circuit);
uint32_t depth(const Circuit& circuit);
size_t size(const Circuit& circuit);

// Depth of the sub-sequence [begin, end) considered in isolation.
uint32_t slice_depth(const Circuit& circuit, size_t begin, size_t end);

// Register content helpers for reading and preparing basis states.
BitVec read_range(const BasisState& state, QubitRange range);
void write_range(BasisState& state, QubitRange range, const BitVec& value);

}  // namespace fsmatch
