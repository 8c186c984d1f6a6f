#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fsmatch/netlist.hpp"
#include "test_util.hpp"

using namespace fsmatch;
using fsmatch::testutil::random_bits;

namespace {

Circuit sample_circuit() {
  Circuit c;
  const QubitRange x = c.add_register("x", 2);
  const QubitRange out = c.add_register("out", 2);
  c.append(Gate::x(x[0]));
  c.append(Gate::cx(x[0], x[1]));
  c.append(Gate::mcx({pos(x[0]), neg(x[1]), pos(out[0])}, out[1]));
  c.append(Gate::swap(out[0], out[1]));
  c.append(Gate::cswap(neg(x[0]), out[0], out[1]));
  return c;
}

Circuit random_circuit(std::mt19937_64& rng, uint32_t qubits, size_t gates) {
  Circuit c(qubits);
  std::uniform_int_distribution<uint32_t> qdist(0, qubits - 1);
  auto distinct = [&](size_t count) {
    std::set<QubitId> picked;
    while (picked.size() < count) picked.insert(qdist(rng));
    return std::vector<QubitId>(picked.begin(), picked.end());
  };
  auto polarity = [&] { return rng() % 2 ? Polarity::Pos : Polarity::Neg; };
  for (size_t i = 0; i < gates; ++i) {
    switch (rng() % 6) {
      case 0:
        c.append(Gate::x(qdist(rng)));
        break;
      case 1: {
        auto q = distinct(2);
        c.append(Gate::cx({q[0], polarity()}, q[1]));
        break;
      }
      case 2: {
        auto q = distinct(3);
        c.append(Gate::ccx({q[0], polarity()}, {q[1], polarity()}, q[2]));
        break;
      }
      case 3: {
        const size_t k = 1 + rng() % 5;
        auto q = distinct(k + 1);
        std::vector<Control> cs;
        for (size_t j = 0; j < k; ++j) cs.push_back({q[j], polarity()});
        c.append(Gate::mcx(cs, q[k]));
        break;
      }
      case 4: {
        auto q = distinct(2);
        c.append(Gate::swap(q[0], q[1]));
        break;
      }
      default: {
        auto q = distinct(3);
        c.append(Gate::cswap({q[0], polarity()}, q[1], q[2]));
        break;
      }
    }
  }
  return c;
}

}  // namespace

TEST_CASE("netlist text form") {
  const std::string text = to_netlist(sample_circuit());
  CHECK(text ==
        "qubits 4\n"
        "reg x 0 2\n"
        "reg out 2 2\n"
        "X t:0\n"
        "CX t:1 c:+0\n"
        "MCX t:3 c:+0,-1,+2\n"
        "SWAP t:2,3\n"
        "CSWAP t:2,3 c:-0\n");
}

TEST_CASE("netlist round trip") {
  const Circuit original = sample_circuit();
  const Circuit parsed = from_netlist(to_netlist(original));
  CHECK(parsed.qubit_count() == original.qubit_count());
  CHECK(parsed.gates() == original.gates());
  CHECK(parsed.registers() == original.registers());

  SUBCASE("random circuits, gate-exact and simulation-exact") {
    std::mt19937_64 rng(83);
    for (int rep = 0; rep < 25; ++rep) {
      const Circuit c = random_circuit(rng, 10, 80);
      const Circuit back = from_netlist(to_netlist(c));
      REQUIRE(back.gates() == c.gates());
      const BasisState s = random_bits(rng, 10);
      REQUIRE(simulate(back, s) == simulate(c, s));
    }
  }
}

TEST_CASE("netlist parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(from_netlist("qubits 2\nY t:0\n"),
                       doctest::Contains("line 2"), NetlistParseError);
  CHECK_THROWS_AS(from_netlist("X t:0\n"), NetlistParseError);  // no header
  CHECK_THROWS_AS(from_netlist("qubits 2\nX t:5\n"), NetlistParseError);
  CHECK_THROWS_AS(from_netlist("qubits 2\nCX t:0 c:1\n"), NetlistParseError);
  CHECK_THROWS_AS(from_netlist("qubits 2\nqubits 2\n"), NetlistParseError);
  CHECK_THROWS_AS(from_netlist("qubits 2\nX c:+1\n"), NetlistParseError);
}

TEST_CASE("qasm export") {
  SUBCASE("plain toffoli") {
    Circuit c(3);
    c.append(Gate::ccx(0, 1, 2));
    const std::string qasm = to_qasm(c);
    CHECK(qasm ==
          "OPENQASM 3.0;\n"
          "include \"stdgates.inc\";\n"
          "qubit[3] q;\n"
          "ccx q[0], q[1], q[2];\n");
  }
  SUBCASE("negative control lowers to an x sandwich") {
    Circuit c(2);
    c.append(Gate::cx(neg(0), 1));
    const std::string qasm = to_qasm(c);
    CHECK(qasm ==
          "OPENQASM 3.0;\n"
          "include \"stdgates.inc\";\n"
          "qubit[2] q;\n"
          "x q[0];\n"
          "cx q[0], q[1];\n"
          "x q[0];\n");
  }
  SUBCASE("wide mcx gains a scratch register") {
    Circuit c(5);
    c.append(Gate::mcx({pos(0), pos(1), pos(2), pos(3)}, 4));
    const std::string qasm = to_qasm(c);
    CHECK(qasm.find("qubit[3] scratch;") != std::string::npos);
    CHECK(qasm.find("ccx q[0], q[1], scratch[0];") != std::string::npos);
  }
}

TEST_CASE("qasm lowering preserves the permutation") {
  std::mt19937_64 rng(89);
  for (int rep = 0; rep < 25; ++rep) {
    const Circuit c = random_circuit(rng, 9, 60);
    const QasmLowering low = lower_for_qasm(c);
    REQUIRE(low.original_qubits == 9);

    // Only subset gates with positive controls remain.
    for (const Gate& g : low.circuit.gates()) {
      REQUIRE(g.controls.size() <= 2);
      for (const Control& ctl : g.controls) {
        REQUIRE(ctl.polarity == Polarity::Pos);
      }
    }

    const BitVec s = random_bits(rng, 9);
    BasisState wide(low.circuit.qubit_count());
    write_range(wide, {0, 9}, s);
    const BasisState out = simulate(low.circuit, wide);
    REQUIRE(read_range(out, {0, 9}) == simulate(c, s));
    for (uint32_t q = 9; q < low.circuit.qubit_count(); ++q) {
      REQUIRE_FALSE(out.get(q));  // scratch returns to zero
    }
  }
}
