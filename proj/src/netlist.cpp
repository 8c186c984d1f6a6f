#include "fsmatch/netlist.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "fsmatch/operators.hpp"

namespace fsmatch {

std::string to_netlist(const Circuit& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.qubit_count() << "\n";
  for (const auto& [name, range] : circuit.registers()) {
    out << "reg " << name << " " << range.start << " " << range.width << "\n";
  }
  for (const Gate& g : circuit.gates()) {
    out << to_string(g.kind) << " t:";
    for (size_t i = 0; i < g.targets.size(); ++i) {
      if (i) out << ",";
      out << g.targets[i];
    }
    if (!g.controls.empty()) {
      out << " c:";
      for (size_t i = 0; i < g.controls.size(); ++i) {
        if (i) out << ",";
        out << (g.controls[i].polarity == Polarity::Pos ? '+' : '-')
            << g.controls[i].qubit;
      }
    }
    out << "\n";
  }
  return out.str();
}

namespace {

class LineParser {
 public:
  LineParser(std::string_view line, size_t number)
      : line_(line), number_(number) {}

  [[noreturn]] void fail(const std::string& why) const {
    throw NetlistParseError("netlist line " + std::to_string(number_) + ": " +
                            why);
  }

  bool done() const { return pos_ >= line_.size(); }

  void skip_spaces() {
    while (pos_ < line_.size() && line_[pos_] == ' ') ++pos_;
  }

  std::string_view token() {
    skip_spaces();
    const size_t start = pos_;
    while (pos_ < line_.size() && line_[pos_] != ' ') ++pos_;
    return line_.substr(start, pos_ - start);
  }

  uint32_t number(std::string_view text) const {
    uint32_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      fail("expected a number, got '" + std::string(text) + "'");
    }
    return value;
  }

 private:
  std::string_view line_;
  size_t number_;
  size_t pos_ = 0;
};

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t end = text.find(sep, start);
    if (end == std::string_view::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

std::optional<GateKind> parse_kind(std::string_view name) {
  if (name == "X") return GateKind::X;
  if (name == "CX") return GateKind::CX;
  if (name == "CCX") return GateKind::CCX;
  if (name == "MCX") return GateKind::MCX;
  if (name == "SWAP") return GateKind::Swap;
  if (name == "CSWAP") return GateKind::CSwap;
  return std::nullopt;
}

}  // namespace

Circuit from_netlist(std::string_view text) {
  Circuit circuit;
  bool saw_qubits = false;
  size_t line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    LineParser p(line, line_no);
    p.skip_spaces();
    if (p.done()) continue;

    const std::string_view head = p.token();
    if (head == "qubits") {
      if (saw_qubits) p.fail("duplicate qubits header");
      circuit.grow_to(p.number(p.token()));
      saw_qubits = true;
      continue;
    }
    if (head == "reg") {
      const std::string_view name = p.token();
      const uint32_t rstart = p.number(p.token());
      const uint32_t rwidth = p.number(p.token());
      if (name.empty()) p.fail("register needs a name");
      try {
        circuit.name_range(std::string(name), {rstart, rwidth});
      } catch (const CircuitError& e) {
        p.fail(e.what());
      }
      continue;
    }

    const auto kind = parse_kind(head);
    if (!kind.has_value()) p.fail("unknown gate '" + std::string(head) + "'");
    if (!saw_qubits) p.fail("gate before the qubits header");
    Gate gate;
    gate.kind = *kind;
    bool saw_targets = false;
    while (true) {
      p.skip_spaces();
      if (p.done()) break;
      const std::string_view field = p.token();
      if (field.substr(0, 2) == "t:") {
        for (std::string_view t : split(field.substr(2), ',')) {
          gate.targets.push_back(p.number(t));
        }
        saw_targets = true;
      } else if (field.substr(0, 2) == "c:") {
        for (std::string_view cstr : split(field.substr(2), ',')) {
          if (cstr.empty()) p.fail("empty control");
          Polarity pol;
          if (cstr[0] == '+') {
            pol = Polarity::Pos;
          } else if (cstr[0] == '-') {
            pol = Polarity::Neg;
          } else {
            p.fail("control must start with '+' or '-'");
          }
          gate.controls.push_back({p.number(cstr.substr(1)), pol});
        }
      } else {
        p.fail("unknown field '" + std::string(field) + "'");
      }
    }
    if (!saw_targets) p.fail("gate without targets");
    try {
      circuit.append(std::move(gate));
    } catch (const CircuitError& e) {
      p.fail(e.what());
    }
  }
  return circuit;
}

QasmLowering lower_for_qasm(const Circuit& circuit) {
  // Pass 1: expand wide MCX gates through a shared scratch block.
  uint32_t max_mcx = 0;
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::MCX && g.controls.size() >= 3) {
      max_mcx = std::max(max_mcx, static_cast<uint32_t>(g.controls.size()));
    }
  }
  const uint32_t scratch = (max_mcx >= 3) ? max_mcx - 1 : 0;

  QasmLowering out;
  out.original_qubits = circuit.qubit_count();
  Circuit& low = out.circuit;
  low.grow_to(circuit.qubit_count() + scratch);
  const QubitRange pool{circuit.qubit_count(), scratch};

  Circuit expanded(low.qubit_count());
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::MCX && g.controls.size() >= 3) {
      std::vector<Control> cs(g.controls.begin(), g.controls.end());
      expanded.compose(build_mcx(cs, g.targets[0], pool).fragment);
    } else {
      expanded.append(g);
    }
  }

  // Pass 2: conjugate away negative controls.
  for (const Gate& g : expanded.gates()) {
    std::vector<QubitId> flips;
    for (const Control& c : g.controls) {
      if (c.polarity == Polarity::Neg) flips.push_back(c.qubit);
    }
    for (QubitId q : flips) low.append(Gate::x(q));
    Gate fixed = g;
    for (Control& c : fixed.controls) c.polarity = Polarity::Pos;
    low.append(std::move(fixed));
    for (QubitId q : flips) low.append(Gate::x(q));
  }
  return out;
}

std::string to_qasm(const Circuit& circuit) {
  const QasmLowering lowering = lower_for_qasm(circuit);
  const uint32_t main_qubits = lowering.original_qubits;
  const uint32_t scratch =
      lowering.circuit.qubit_count() - lowering.original_qubits;

  const auto operand = [&](QubitId q) {
    if (q < main_qubits) return "q[" + std::to_string(q) + "]";
    return "scratch[" + std::to_string(q - main_qubits) + "]";
  };

  std::ostringstream out;
  out << "OPENQASM 3.0;\n";
  out << "include \"stdgates.inc\";\n";
  out << "qubit[" << main_qubits << "] q;\n";
  if (scratch > 0) out << "qubit[" << scratch << "] scratch;\n";
  for (const Gate& g : lowering.circuit.gates()) {
    switch (g.kind) {
      case GateKind::X:
        out << "x " << operand(g.targets[0]) << ";\n";
        break;
      case GateKind::CX:
        out << "cx " << operand(g.controls[0].qubit) << ", "
            << operand(g.targets[0]) << ";\n";
        break;
      case GateKind::CCX:
        out << "ccx " << operand(g.controls[0].qubit) << ", "
            << operand(g.controls[1].qubit) << ", " << operand(g.targets[0])
            << ";\n";
        break;
      case GateKind::Swap:
        out << "swap " << operand(g.targets[0]) << ", "
            << operand(g.targets[1]) << ";\n";
        break;
      case GateKind::CSwap:
        out << "cswap " << operand(g.controls[0].qubit) << ", "
            << operand(g.targets[0]) << ", " << operand(g.targets[1])
            << ";\n";
        break;
      case GateKind::MCX:
        // Lowering leaves only one- and two-control MCX forms.
        if (g.controls.size() == 1) {
          out << "cx " << operand(g.controls[0].qubit) << ", "
              << operand(g.targets[0]) << ";\n";
        } else {
          out << "ccx " << operand(g.controls[0].qubit) << ", "
              << operand(g.controls[1].qubit) << ", "
              << operand(g.targets[0]) << ";\n";
        }
        break;
    }
  }
  return out.str();
}

}  // namespace fsmatch
