#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fsmatch/circuit.hpp"
#include "test_util.hpp"

using namespace fsmatch;
using fsmatch::testutil::random_bits;

namespace {

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
        const size_t k = 1 + rng() % std::min<uint32_t>(4, qubits - 1);
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

TEST_CASE("registers allocate contiguously") {
  Circuit c;
  const QubitRange x = c.add_register("x", 8);
  const QubitRange y = c.add_register("y", 8);
  CHECK(x == QubitRange{0, 8});
  CHECK(y == QubitRange{8, 8});
  CHECK(c.qubit_count() == 16);
  CHECK(c.find_register("x") == x);
  CHECK_THROWS_AS(c.add_register("x", 4), CircuitError);
  CHECK_THROWS_AS(c.add_register("z", 0), CircuitError);
  CHECK_THROWS_AS(c.name_range("w", {4, 8}), CircuitError);  // overlaps y
  CHECK(c.name_range("w", {20, 2}) == QubitRange{20, 2});
  CHECK(c.qubit_count() == 22);
}

TEST_CASE("append and compose") {
  Circuit c(2);
  c.append(Gate::x(0));
  CHECK(size(c) == 1);

  Circuit frag(2);
  frag.append(Gate::cx(0, 1));
  frag.append(Gate::x(1));
  c.compose(frag);
  CHECK(size(c) == 3);

  CHECK_THROWS_AS(c.append(Gate::x(2)), CircuitError);
  CHECK_THROWS_AS(c.append(Gate::ccx(0, 0, 1)), CircuitError);
  CHECK_THROWS_AS(c.append(Gate::cx(1, 1)), CircuitError);
  Gate no_targets;
  no_targets.kind = GateKind::X;
  CHECK_THROWS_AS(c.append(no_targets), CircuitError);

  Circuit wide(3);
  wide.append(Gate::x(2));
  CHECK_THROWS_AS(c.compose(wide), CircuitError);
}

TEST_CASE("gate semantics") {
  SUBCASE("toffoli flips the target only when both controls are set") {
    Circuit c(3);
    c.append(Gate::ccx(0, 1, 2));
    CHECK(simulate(c, BitVec::from_string("110")).to_string() == "111");
    CHECK(simulate(c, BitVec::from_string("100")).to_string() == "100");
    CHECK(simulate(c, BitVec::from_string("111")).to_string() == "110");
  }
  SUBCASE("unsatisfied cswap is the identity") {
    Circuit c(3);
    c.append(Gate::cswap(0, 1, 2));
    CHECK(simulate(c, BitVec::from_string("010")).to_string() == "010");
    CHECK(simulate(c, BitVec::from_string("110")).to_string() == "101");
  }
  SUBCASE("negative controls fire on zero") {
    Circuit c(4);
    c.append(Gate::mcx({neg(0), neg(1), neg(2)}, 3));
    CHECK(simulate(c, BitVec::from_string("0000")).to_string() == "0001");
    CHECK(simulate(c, BitVec::from_string("0100")).to_string() == "0100");
  }
  SUBCASE("mixed polarities against the truth table") {
    Circuit c(5);
    const std::vector<Control> cs{pos(0), neg(1), pos(2), neg(3)};
    c.append(Gate::mcx(cs, 4));
    for (uint32_t pattern = 0; pattern < 32; ++pattern) {
      BitVec in(5);
      for (uint32_t q = 0; q < 5; ++q) in.set(q, (pattern >> q) & 1u);
      bool satisfied = true;
      for (const Control& ctl : cs) {
        satisfied &= in.get(ctl.qubit) == (ctl.polarity == Polarity::Pos);
      }
      const BasisState out = simulate(c, in);
      REQUIRE(out.get(4) == (in.get(4) ^ satisfied));
      for (uint32_t q = 0; q < 4; ++q) REQUIRE(out.get(q) == in.get(q));
    }
  }
  SUBCASE("state width must match") {
    Circuit c(3);
    CHECK_THROWS_AS(simulate(c, BitVec(2)), CircuitError);
  }
}

TEST_CASE("inverse reverses the gate order and undoes the action") {
  Circuit c(2);
  c.append(Gate::x(0));
  c.append(Gate::cx(0, 1));
  const Circuit inv = inverse(c);
  REQUIRE(size(inv) == 2);
  CHECK(inv.gates()[0] == c.gates()[1]);
  CHECK(inv.gates()[1] == c.gates()[0]);

  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 30; ++rep) {
    const Circuit rc = random_circuit(rng, 8, 40);
    const BasisState s = random_bits(rng, 8);
    CHECK(simulate(inverse(rc), simulate(rc, s)) == s);
  }
}

TEST_CASE("controlled version") {
  SUBCASE("controlled X is CX") {
    Circuit c(1);
    c.append(Gate::x(0));
    const Circuit cc = controlled_version(c, 1);
    REQUIRE(size(cc) == 1);
    CHECK(cc.gates()[0] == Gate::cx(1, 0));
  }
  SUBCASE("collision is rejected") {
    Circuit c(2);
    c.append(Gate::cx(0, 1));
    CHECK_THROWS_AS(controlled_version(c, 1), CircuitError);
  }
  SUBCASE("acts like the original iff the control is set") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 30; ++rep) {
      const Circuit rc = random_circuit(rng, 7, 30);
      const Circuit cc = controlled_version(rc, 7);
      const BitVec s = random_bits(rng, 7);

      BitVec off(8);
      write_range(off, {0, 7}, s);
      const BasisState out_off = simulate(cc, off);
      REQUIRE(read_range(out_off, {0, 7}) == s);
      REQUIRE_FALSE(out_off.get(7));

      BitVec on(8);
      write_range(on, {0, 7}, s);
      on.set(7, true);
      const BasisState out_on = simulate(cc, on);
      REQUIRE(read_range(out_on, {0, 7}) == simulate(rc, s));
      REQUIRE(out_on.get(7));
    }
  }
}

TEST_CASE("layering") {
  SUBCASE("disjoint gates share a layer") {
    Circuit c(2);
    c.append(Gate::x(0));
    c.append(Gate::x(1));
    CHECK(depth(c) == 1);
  }
  SUBCASE("colliding gates stack") {
    Circuit c(1);
    c.append(Gate::x(0));
    c.append(Gate::x(0));
    CHECK(depth(c) == 2);
  }
  SUBCASE("parallel cx block has depth one") {
    Circuit c(64);
    for (uint32_t i = 0; i < 32; ++i) c.append(Gate::cx(2 * i, 2 * i + 1));
    CHECK(depth(c) == 1);
    CHECK(size(c) == 32);
  }
  SUBCASE("layers are valid and order-equivalent") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 20; ++rep) {
      const Circuit c = random_circuit(rng, 9, 60);
      const Layering layering = compute_layers(c);

      size_t total = 0;
      for (const auto& layer : layering.layers) {
        std::set<QubitId> seen;
        for (uint32_t idx : layer) {
          const Gate& g = c.gates()[idx];
          for (QubitId t : g.targets) REQUIRE(seen.insert(t).second);
          for (const Control& ctl : g.controls) {
            REQUIRE(seen.insert(ctl.qubit).second);
          }
        }
        total += layer.size();
      }
      REQUIRE(total == size(c));

      // Replaying the flattened layering gives the same permutation.
      Circuit flat(c.qubit_count());
      for (const auto& layer : layering.layers) {
        for (uint32_t idx : layer) flat.append(c.gates()[idx]);
      }
      const BasisState s = random_bits(rng, 9);
      REQUIRE(simulate(flat, s) == simulate(c, s));
    }
  }
  SUBCASE("depth is subadditive under composition") {
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 20; ++rep) {
      const Circuit a = random_circuit(rng, 6, 25);
      const Circuit b = random_circuit(rng, 6, 25);
      Circuit ab(6);
      ab.compose(a);
      ab.compose(b);
      CHECK(depth(ab) <= depth(a) + depth(b));
    }
  }
}

TEST_CASE("swap expansion preserves the action and only adds depth") {
  std::mt19937_64 rng(37);
  for (int rep = 0; rep < 25; ++rep) {
    const Circuit c = random_circuit(rng, 8, 50);
    const Circuit expanded = expand_swaps(c);
    for (const Gate& g : expanded.gates()) {
      REQUIRE(g.kind != GateKind::Swap);
      REQUIRE(g.kind != GateKind::CSwap);
    }
    const BasisState s = random_bits(rng, 8);
    REQUIRE(simulate(expanded, s) == simulate(c, s));
    REQUIRE(depth(expanded) >= depth(c));
  }

  Circuit one(3);
  one.append(Gate::cswap(neg(0), 1, 2));
  const Circuit expanded = expand_swaps(one);
  CHECK(size(expanded) == 3);
  CHECK(depth(expanded) == 3);
}

TEST_CASE("circuits act as permutations of the basis states") {
  std::mt19937_64 rng(31);
  SUBCASE("exhaustive bijectivity on small circuits") {
    for (int rep = 0; rep < 10; ++rep) {
      const uint32_t q = 4 + rng() % 9;  // up to 12 qubits
      const Circuit c = random_circuit(rng, q, 50);
      std::vector<bool> hit(size_t{1} << q, false);
      for (uint64_t v = 0; v < (uint64_t{1} << q); ++v) {
        BitVec in(q);
        for (uint32_t bit = 0; bit < q; ++bit) in.set(bit, (v >> bit) & 1u);
        const BasisState out = simulate(c, in);
        uint64_t outv = 0;
        for (uint32_t bit = 0; bit < q; ++bit) {
          if (out.get(bit)) outv |= uint64_t{1} << bit;
        }
        REQUIRE_FALSE(hit[outv]);
        hit[outv] = true;
      }
    }
  }
  SUBCASE("random distinct pairs stay distinct on bigger circuits") {
    const Circuit c = random_circuit(rng, 48, 300);
    for (int rep = 0; rep < 200; ++rep) {
      const BitVec a = random_bits(rng, 48);
      BitVec b = random_bits(rng, 48);
      if (a == b) b.set(0, !b.get(0));
      REQUIRE_FALSE(simulate(c, a) == simulate(c, b));
    }
  }
}
