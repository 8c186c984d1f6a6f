#include "fsmatch/circuit.hpp"

#include <algorithm>

namespace fsmatch {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X:
      return "X";
    case GateKind::CX:
      return "CX";
    case GateKind::CCX:
      return "CCX";
    case GateKind::MCX:
      return "MCX";
    case GateKind::Swap:
      return "SWAP";
    case GateKind::CSwap:
      return "CSWAP";
  }
  return "?";
}

Gate Gate::mcx(std::vector<Control> cs, QubitId t) {
  Gate g;
  g.kind = GateKind::MCX;
  g.targets = {t};
  g.controls.assign(cs.begin(), cs.end());
  return g;
}

std::optional<std::string> Gate::malformed() const {
  size_t want_targets = 0;
  size_t min_controls = 0;
  size_t max_controls = 0;
  switch (kind) {
    case GateKind::X:
      want_targets = 1;
      break;
    case GateKind::CX:
      want_targets = 1;
      min_controls = max_controls = 1;
      break;
    case GateKind::CCX:
      want_targets = 1;
      min_controls = max_controls = 2;
      break;
    case GateKind::MCX:
      want_targets = 1;
      min_controls = 1;
      max_controls = SIZE_MAX;
      break;
    case GateKind::Swap:
      want_targets = 2;
      break;
    case GateKind::CSwap:
      want_targets = 2;
      min_controls = max_controls = 1;
      break;
  }
  if (targets.size() != want_targets) return "wrong target count";
  if (controls.size() < min_controls || controls.size() > max_controls) {
    return "wrong control count";
  }
  boost::container::small_vector<QubitId, 8> support(targets.begin(),
                                                     targets.end());
  for (const Control& c : controls) support.push_back(c.qubit);
  std::sort(support.begin(), support.end());
  if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
    return "targets and controls must be pairwise distinct";
  }
  return std::nullopt;
}

QubitId Gate::max_qubit() const {
  QubitId m = 0;
  for (QubitId t : targets) m = std::max(m, t);
  for (const Control& c : controls) m = std::max(m, c.qubit);
  return m;
}

QubitRange QubitRange::sub(uint32_t offset, uint32_t w) const {
  if (offset + w > width) {
    throw CircuitError("QubitRange::sub: subrange past end");
  }
  return {start + offset, w};
}

void Circuit::grow_to(uint32_t qubit_count) {
  qubit_count_ = std::max(qubit_count_, qubit_count);
}

QubitRange Circuit::add_register(std::string name, uint32_t width) {
  return name_range(std::move(name), QubitRange{qubit_count_, width});
}

QubitRange Circuit::name_range(std::string name, QubitRange range) {
  if (range.width == 0) {
    throw CircuitError("add_register: width must be positive");
  }
  if (find_register(name).has_value()) {
    throw CircuitError("add_register: duplicate register name '" + name + "'");
  }
  for (const auto& [rname, existing] : registers_) {
    if (existing.overlaps(range)) {
      throw CircuitError("add_register: range overlaps register '" + rname +
                         "'");
    }
  }
  grow_to(range.end());
  registers_.emplace_back(std::move(name), range);
  return range;
}

std::optional<QubitRange> Circuit::find_register(std::string_view name) const {
  for (const auto& [rname, range] : registers_) {
    if (rname == name) return range;
  }
  return std::nullopt;
}

void Circuit::append(Gate gate) {
  if (auto why = gate.malformed()) {
    throw CircuitError("append: malformed gate: " + *why);
  }
  if (gate.max_qubit() >= qubit_count_) {
    throw CircuitError("append: gate addresses a qubit outside the circuit");
  }
  gates_.push_back(std::move(gate));
}

void Circuit::compose(const Circuit& fragment) {
  if (fragment.qubit_count_ > qubit_count_) {
    throw CircuitError("compose: fragment is wider than the circuit");
  }
  gates_.reserve(gates_.size() + fragment.gates_.size());
  for (const Gate& g : fragment.gates_) {
    gates_.push_back(g);
  }
}

namespace {

bool controls_satisfied(const Gate& gate, const BasisState& state) {
  for (const Control& c : gate.controls) {
    if (state.get(c.qubit) != (c.polarity == Polarity::Pos)) return false;
  }
  return true;
}

void apply_gate(const Gate& gate, BasisState& state) {
  switch (gate.kind) {
    case GateKind::X:
      state.set(gate.targets[0], !state.get(gate.targets[0]));
      break;
    case GateKind::CX:
    case GateKind::CCX:
    case GateKind::MCX:
      if (controls_satisfied(gate, state)) {
        state.set(gate.targets[0], !state.get(gate.targets[0]));
      }
      break;
    case GateKind::Swap:
    case GateKind::CSwap:
      if (controls_satisfied(gate, state)) {
        const bool a = state.get(gate.targets[0]);
        const bool b = state.get(gate.targets[1]);
        state.set(gate.targets[0], b);
        state.set(gate.targets[1], a);
      }
      break;
  }
}

}  // namespace

void apply_gates(const Circuit& circuit, BasisState& state, size_t begin,
                 size_t end) {
  const auto& gates = circuit.gates();
  for (size_t i = begin; i < end && i < gates.size(); ++i) {
    apply_gate(gates[i], state);
  }
}

BasisState simulate(const Circuit& circuit, const BasisState& input) {
  if (input.size() != circuit.qubit_count()) {
    throw CircuitError("simulate: state width does not match qubit count");
  }
  BasisState state = input;
  apply_gates(circuit, state, 0, circuit.gates().size());
  return state;
}

Circuit inverse(const Circuit& circuit) {
  Circuit inv(circuit.qubit_count());
  for (const auto& [name, range] : circuit.registers()) {
    inv.name_range(name, range);
  }
  for (QubitRange r : circuit.ancilla_ranges()) inv.mark_ancilla(r);
  const auto& gates = circuit.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    inv.append(*it);
  }
  return inv;
}

Circuit controlled_version(const Circuit& circuit, QubitId control) {
  for (const Gate& g : circuit.gates()) {
    if (g.max_qubit() >= control &&
        (std::find(g.targets.begin(), g.targets.end(), control) !=
             g.targets.end() ||
         std::any_of(g.controls.begin(), g.controls.end(),
                     [&](const Control& c) { return c.qubit == control; }))) {
      throw CircuitError(
          "controlled_version: control qubit collides with circuit gates");
    }
  }
  Circuit out(std::max(circuit.qubit_count(), control + 1));
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::X:
        out.append(Gate::cx(pos(control), g.targets[0]));
        break;
      case GateKind::CX: {
        Gate mapped = g;
        mapped.kind = GateKind::CCX;
        mapped.controls.push_back(pos(control));
        out.append(std::move(mapped));
        break;
      }
      case GateKind::CCX:
      case GateKind::MCX: {
        Gate mapped = g;
        mapped.kind = GateKind::MCX;
        mapped.controls.push_back(pos(control));
        out.append(std::move(mapped));
        break;
      }
      case GateKind::Swap:
        out.append(Gate::cswap(pos(control), g.targets[0], g.targets[1]));
        break;
      case GateKind::CSwap: {
        // Double-controlled swap without ancillae: conjugate one direction
        // of the swap by CX and put both controls on the middle flip.
        const QubitId a = g.targets[0];
        const QubitId b = g.targets[1];
        out.append(Gate::cx(pos(b), a));
        out.append(Gate::mcx({g.controls[0], pos(control), pos(a)}, b));
        out.append(Gate::cx(pos(b), a));
        break;
      }
    }
  }
  return out;
}

Circuit expand_swaps(const Circuit& circuit) {
  Circuit out(circuit.qubit_count());
  for (const auto& [name, range] : circuit.registers()) {
    out.name_range(name, range);
  }
  for (QubitRange r : circuit.ancilla_ranges()) out.mark_ancilla(r);
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::Swap:
        out.append(Gate::cx(g.targets[0], g.targets[1]));
        out.append(Gate::cx(g.targets[1], g.targets[0]));
        out.append(Gate::cx(g.targets[0], g.targets[1]));
        break;
      case GateKind::CSwap:
        out.append(Gate::cx(g.targets[1], g.targets[0]));
        out.append(Gate::ccx(g.controls[0], pos(g.targets[0]), g.targets[1]));
        out.append(Gate::cx(g.targets[1], g.targets[0]));
        break;
      default:
        out.append(g);
        break;
    }
  }
  return out;
}

Layering compute_layers(const Circuit& circuit) {
  Layering layering;
  std::vector<uint32_t> ready_at(circuit.qubit_count(), 0);
  const auto& gates = circuit.gates();
  for (uint32_t idx = 0; idx < gates.size(); ++idx) {
    const Gate& g = gates[idx];
    uint32_t layer = 0;
    for (QubitId t : g.targets) layer = std::max(layer, ready_at[t]);
    for (const Control& c : g.controls) {
      layer = std::max(layer, ready_at[c.qubit]);
    }
    if (layer >= layering.layers.size()) layering.layers.emplace_back();
    layering.layers[layer].push_back(idx);
    for (QubitId t : g.targets) ready_at[t] = layer + 1;
    for (const Control& c : g.controls) ready_at[c.qubit] = layer + 1;
  }
  return layering;
}

uint32_t depth(const Circuit& circuit) {
  return static_cast<uint32_t>(compute_layers(circuit).layers.size());
}

size_t size(const Circuit& circuit) { return circuit.gates().size(); }

uint32_t slice_depth(const Circuit& circuit, size_t begin, size_t end) {
  std::vector<uint32_t> ready_at(circuit.qubit_count(), 0);
  uint32_t depth = 0;
  const auto& gates = circuit.gates();
  for (size_t i = begin; i < end && i < gates.size(); ++i) {
    const Gate& g = gates[i];
    uint32_t layer = 0;
    for (QubitId t : g.targets) layer = std::max(layer, ready_at[t]);
    for (const Control& c : g.controls) {
      layer = std::max(layer, ready_at[c.qubit]);
    }
    depth = std::max(depth, layer + 1);
    for (QubitId t : g.targets) ready_at[t] = layer + 1;
    for (const Control& c : g.controls) ready_at[c.qubit] = layer + 1;
  }
  return depth;
}

BitVec read_range(const BasisState& state, QubitRange range) {
  BitVec out(range.width);
  for (uint32_t i = 0; i < range.width; ++i) {
    out.set(i, state.get(range[i]));
  }
  return out;
}

void write_range(BasisState& state, QubitRange range, const BitVec& value) {
  if (value.size() != range.width) {
    throw CircuitError("write_range: value width does not match register");
  }
  for (uint32_t i = 0; i < range.width; ++i) {
    state.set(range[i], value.get(i));
  }
}

}  // namespace fsmatch
