#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "fsmatch/circuit.hpp"

namespace fsmatch {

class NetlistParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One gate per line, e.g. `MCX t:12 c:+3,-4,+5`, preceded by `qubits <N>`
// and one `reg <name> <start> <width>` line per named register.
std::string to_netlist(const Circuit& circuit);
Circuit from_netlist(std::string_view text);

// Rewrites the circuit using only x/cx/ccx/swap/cswap with positive
// controls: negative controls are conjugated by X, and MCX gates with three
// or more controls are expanded into a CCX tree over appended scratch
// qubits (which start and end at 0).
struct QasmLowering {
  Circuit circuit;
  uint32_t original_qubits = 0;
};

QasmLowering lower_for_qasm(const Circuit& circuit);

// OpenQASM 3 text over the lowered gate set. Qubits are emitted as one `q`
// register (plus `scratch` when the lowering needed extra qubits).
std::string to_qasm(const Circuit& circuit);

}  // namespace fsmatch
