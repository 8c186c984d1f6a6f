#include "fsmatch/operators.hpp"

#include <algorithm>
#include <bit>
#include <initializer_list>

namespace fsmatch {

namespace {

uint32_t ceil_log2_u32(uint32_t v) {
  if (v <= 1) return 0;
  return 32u - static_cast<uint32_t>(std::countl_zero(v - 1));
}

void require_disjoint(const char* op,
                      std::initializer_list<QubitRange> ranges) {
  for (auto it = ranges.begin(); it != ranges.end(); ++it) {
    for (auto jt = it + 1; jt != ranges.end(); ++jt) {
      if (it->width != 0 && jt->width != 0 && it->overlaps(*jt)) {
        throw CircuitError(std::string(op) + ": registers overlap");
      }
    }
  }
}

QubitRange single(QubitId q) { return {q, 1}; }

// Accumulates a fragment: roles, pool ancillae handed out so far, and the
// circuit itself.
class FragBuild {
 public:
  FragBuild(std::string op, QubitRange pool)
      : op_(std::move(op)), pool_(pool) {}

  void role(const std::string& name, QubitRange r) {
    frag_.fragment.name_range(name, r);
    frag_.io.emplace_back(name, r);
  }
  void role(const std::string& name, QubitId q) { role(name, single(q)); }

  // Makes the fragment span a qubit that is not part of a named range.
  void cover(QubitId q) { frag_.fragment.grow_to(q + 1); }

  QubitRange alloc(uint32_t k) {
    if (used_ + k > pool_.width) {
      throw CircuitError(op_ + ": ancilla pool too small");
    }
    QubitRange r = pool_.sub(used_, k);
    used_ += k;
    frag_.fragment.grow_to(r.end());
    return r;
  }

  QubitRange remaining_pool() const {
    return pool_.sub(used_, pool_.width - used_);
  }

  void add(Gate g) { frag_.fragment.append(std::move(g)); }

  // Appends an inner builder's gates, accounting for its ancilla use. The
  // inner fragment must have drawn from remaining_pool().
  void absorb(const OperatorFragment& inner) {
    used_ += inner.ancillae.width;
    frag_.fragment.grow_to(inner.fragment.qubit_count());
    frag_.fragment.compose(inner.fragment);
  }

  Circuit& circuit() { return frag_.fragment; }

  OperatorFragment finish(std::string form, uint32_t bound) {
    if (used_ > 0) {
      QubitRange anc = pool_.sub(0, used_);
      frag_.ancillae = anc;
      frag_.fragment.name_range("anc", anc);
      frag_.fragment.mark_ancilla(anc);
    } else {
      frag_.ancillae = QubitRange{pool_.start, 0};
    }
    frag_.depth_bound = {std::move(form), bound};
    return std::move(frag_);
  }

 private:
  std::string op_;
  QubitRange pool_;
  uint32_t used_ = 0;
  OperatorFragment frag_;
};

// Emits the CX doubling tree; returns the number of rounds.
uint32_t emit_fanout_tree(Circuit& c, QubitId control, QubitRange targets) {
  std::vector<QubitId> sources{control};
  uint32_t next = 0;
  uint32_t rounds = 0;
  while (next < targets.width) {
    const size_t wave = sources.size();
    for (size_t s = 0; s < wave && next < targets.width; ++s) {
      const QubitId tgt = targets[next++];
      c.append(Gate::cx(sources[s], tgt));
      sources.push_back(tgt);
    }
    ++rounds;
  }
  return rounds;
}

void emit_fanout_tree_inverse(Circuit& c, QubitId control, QubitRange targets) {
  Circuit tree(c.qubit_count());
  emit_fanout_tree(tree, control, targets);
  c.compose(inverse(tree));
}

// One layer of swaps reversing positions [lo, lo+len) of reg, each promoted
// to a CSWAP on its own control copy. Returns the number of swaps emitted.
uint32_t emit_controlled_segment_reversal(Circuit& c, QubitRange reg,
                                          uint32_t lo, uint32_t len,
                                          QubitRange controls,
                                          uint32_t control_offset) {
  const uint32_t pairs = len / 2;
  for (uint32_t i = 0; i < pairs; ++i) {
    c.append(Gate::cswap(controls[control_offset + i], reg[lo + i],
                         reg[lo + len - 1 - i]));
  }
  return pairs;
}

}  // namespace

OperatorFragment build_fanout(QubitId control, QubitRange targets) {
  require_disjoint("build_fanout", {single(control), targets});
  FragBuild fb("build_fanout", QubitRange{0, 0});
  fb.role("control", control);
  if (targets.width > 0) fb.role("targets", targets);
  emit_fanout_tree(fb.circuit(), control, targets);
  return fb.finish("clog2(k+1)", ceil_log2_u32(targets.width + 1));
}

OperatorFragment build_mcx(std::span<const Control> controls, QubitId target,
                           QubitRange ancilla_pool) {
  if (controls.empty()) {
    throw CircuitError("build_mcx: at least one control is required");
  }
  const auto k = static_cast<uint32_t>(controls.size());
  FragBuild fb("build_mcx", ancilla_pool);
  {
    // Validate all operands pairwise distinct and outside the pool.
    Gate probe = Gate::mcx(std::vector<Control>(controls.begin(),
                                                controls.end()),
                           target);
    if (auto why = probe.malformed()) {
      throw CircuitError("build_mcx: " + *why);
    }
    for (const Control& c : controls) {
      if (ancilla_pool.contains(c.qubit)) {
        throw CircuitError("build_mcx: control inside the ancilla pool");
      }
    }
    if (ancilla_pool.contains(target)) {
      throw CircuitError("build_mcx: target inside the ancilla pool");
    }
  }
  fb.role("target", target);
  for (const Control& c : controls) fb.cover(c.qubit);
  const uint32_t bound = 2 * ceil_log2_u32(k) + 1;

  if (k == 1) {
    fb.add(Gate::cx(controls[0], target));
    return fb.finish("2*clog2(k)+1", bound);
  }
  if (k == 2) {
    fb.add(Gate::ccx(controls[0], controls[1], target));
    return fb.finish("2*clog2(k)+1", bound);
  }

  QubitRange anc = fb.alloc(k - 1);
  uint32_t anc_next = 0;
  std::vector<Control> level(controls.begin(), controls.end());
  std::vector<Gate> compute;
  while (level.size() > 1) {
    std::vector<Control> merged;
    for (size_t i = 0; i + 1 < level.size(); i += 2) {
      const QubitId a = anc[anc_next++];
      compute.push_back(Gate::ccx(level[i], level[i + 1], a));
      merged.push_back(pos(a));
    }
    if (level.size() % 2 != 0) merged.push_back(level.back());
    level = std::move(merged);
  }
  for (const Gate& g : compute) fb.add(g);
  fb.add(Gate::cx(level[0], target));
  for (auto it = compute.rbegin(); it != compute.rend(); ++it) fb.add(*it);
  return fb.finish("2*clog2(k)+1", bound);
}

OperatorFragment build_match(QubitRange x, QubitRange y, QubitRange out) {
  if (x.width != y.width || x.width != out.width) {
    throw CircuitError("build_match: register widths must agree");
  }
  require_disjoint("build_match", {x, y, out});
  FragBuild fb("build_match", QubitRange{0, 0});
  fb.role("x", x);
  fb.role("y", y);
  fb.role("out", out);
  Circuit& c = fb.circuit();
  auto half = [&] {
    for (uint32_t j = 0; j < x.width; ++j) {
      c.append(Gate::ccx(x[j], y[j], out[j]));
    }
    for (uint32_t j = 0; j < x.width; ++j) {
      c.append(Gate::x(x[j]));
      c.append(Gate::x(y[j]));
    }
  };
  half();
  half();
  return fb.finish("4", 4);
}

OperatorFragment build_match_block(QubitRange x, QubitRange y, QubitRange out,
                                   const BlockEncoding& enc,
                                   QubitRange ancilla_pool) {
  const uint32_t b = enc.bits();
  const uint32_t n = out.width;
  if (x.width != n * b || y.width != n * b) {
    throw CircuitError(
        "build_match_block: register widths do not match the encoding");
  }
  require_disjoint("build_match_block", {x, y, out, ancilla_pool});
  FragBuild fb("build_match_block", ancilla_pool);
  fb.role("x", x);
  fb.role("y", y);
  fb.role("out", out);

  QubitRange eq = fb.alloc(n * b);  // per-bit XNOR results
  std::vector<Gate> xnor;
  for (uint32_t p = 0; p < n * b; ++p) xnor.push_back(Gate::ccx(x[p], y[p], eq[p]));
  for (uint32_t p = 0; p < n * b; ++p) {
    xnor.push_back(Gate::x(x[p]));
    xnor.push_back(Gate::x(y[p]));
  }
  for (uint32_t p = 0; p < n * b; ++p) xnor.push_back(Gate::ccx(x[p], y[p], eq[p]));
  for (uint32_t p = 0; p < n * b; ++p) {
    xnor.push_back(Gate::x(x[p]));
    xnor.push_back(Gate::x(y[p]));
  }
  for (const Gate& g : xnor) fb.add(g);

  // All-bits-equal conjunction per character block, trees side by side.
  QubitRange trees = (b >= 3) ? fb.alloc(n * (b - 1)) : QubitRange{eq.end(), 0};
  for (uint32_t j = 0; j < n; ++j) {
    std::vector<Control> cs;
    for (uint32_t kbit = 0; kbit < b; ++kbit) cs.push_back(pos(eq[j * b + kbit]));
    QubitRange tree_pool =
        (b >= 3) ? trees.sub(j * (b - 1), b - 1) : QubitRange{trees.start, 0};
    OperatorFragment mcx = build_mcx(cs, out[j], tree_pool);
    fb.circuit().grow_to(mcx.fragment.qubit_count());
    fb.circuit().compose(mcx.fragment);
  }

  for (auto it = xnor.rbegin(); it != xnor.rend(); ++it) fb.add(*it);
  return fb.finish("2*clog2(b)+9", 2 * ceil_log2_u32(b) + 9);
}

OperatorFragment build_ext(QubitRange prev, QubitRange out, uint32_t level) {
  if (prev.width != out.width) {
    throw CircuitError("build_ext: register widths must agree");
  }
  if (level == 0) {
    throw CircuitError("build_ext: level must be at least 1");
  }
  require_disjoint("build_ext", {prev, out});
  FragBuild fb("build_ext", QubitRange{0, 0});
  fb.role("prev", prev);
  fb.role("out", out);
  const uint32_t n = prev.width;
  const uint64_t half = uint64_t{1} << (level - 1);
  const uint64_t window = half * 2;
  // Gates at block-even positions commute freely with each other, likewise
  // block-odd ones; emitting the two groups separately keeps the depth at 2.
  for (uint32_t parity = 0; parity < 2; ++parity) {
    for (uint64_t j = 0; j + window <= n; ++j) {
      if ((j / half) % 2 != parity) continue;
      fb.add(Gate::ccx(prev[static_cast<uint32_t>(j)],
                       prev[static_cast<uint32_t>(j + half)],
                       out[static_cast<uint32_t>(j)]));
    }
  }
  return fb.finish("2", 2);
}

OperatorFragment build_reversal(QubitRange reg) {
  FragBuild fb("build_reversal", QubitRange{0, 0});
  fb.role("reg", reg);
  for (uint32_t i = 0; i < reg.width / 2; ++i) {
    fb.add(Gate::swap(reg[i], reg[reg.width - 1 - i]));
  }
  return fb.finish("1", 1);
}

OperatorFragment build_ctrl_rot_pow2(QubitId control, QubitRange reg,
                                     uint32_t m, QubitRange ancilla_pool) {
  const uint32_t L = reg.width;
  if (m >= 32 || (uint64_t{1} << m) >= L) {
    throw CircuitError("build_ctrl_rot_pow2: rotation amount must be < width");
  }
  require_disjoint("build_ctrl_rot_pow2", {single(control), reg, ancilla_pool});
  const auto s = static_cast<uint32_t>(uint64_t{1} << m);
  FragBuild fb("build_ctrl_rot_pow2", ancilla_pool);
  fb.role("control", control);
  fb.role("reg", reg);
  QubitRange copies = fb.alloc(L / 2);
  Circuit& c = fb.circuit();

  emit_fanout_tree(c, control, copies);
  // Rotation by two reversals: reverse the whole register, then reverse the
  // leading s positions and the trailing L-s positions. The two segment
  // passes use disjoint control copies so they share a layer.
  emit_controlled_segment_reversal(c, reg, 0, L, copies, 0);
  const uint32_t used_low =
      emit_controlled_segment_reversal(c, reg, 0, s, copies, 0);
  emit_controlled_segment_reversal(c, reg, s, L - s, copies, used_low);
  emit_fanout_tree_inverse(c, control, copies);

  return fb.finish("2*clog2(L)+3", 2 * ceil_log2_u32(L) + 3);
}

OperatorFragment build_ctrl_bitwise_and(QubitId control, QubitRange a,
                                        QubitRange b, QubitRange out,
                                        QubitRange ancilla_pool) {
  const uint32_t W = a.width;
  if (b.width != W || out.width != W) {
    throw CircuitError("build_ctrl_bitwise_and: register widths must agree");
  }
  require_disjoint("build_ctrl_bitwise_and",
                   {single(control), a, b, out, ancilla_pool});
  FragBuild fb("build_ctrl_bitwise_and", ancilla_pool);
  fb.role("control", control);
  fb.role("a", a);
  fb.role("b", b);
  fb.role("out", out);
  QubitRange copies = fb.alloc(W);
  Circuit& c = fb.circuit();
  emit_fanout_tree(c, control, copies);
  for (uint32_t i = 0; i < W; ++i) {
    c.append(Gate::mcx({pos(copies[i]), pos(a[i]), pos(b[i])}, out[i]));
  }
  emit_fanout_tree_inverse(c, control, copies);
  return fb.finish("2*clog2(L)+3", 2 * ceil_log2_u32(W) + 3);
}

OperatorFragment build_crc(QubitId control, QubitRange a, QubitRange b,
                           QubitRange ancilla_pool) {
  const uint32_t W = a.width;
  if (b.width != W) {
    throw CircuitError("build_crc: register widths must agree");
  }
  require_disjoint("build_crc", {single(control), a, b, ancilla_pool});
  FragBuild fb("build_crc", ancilla_pool);
  fb.role("control", control);
  fb.role("a", a);
  fb.role("b", b);
  QubitRange copies = fb.alloc(W);
  Circuit& c = fb.circuit();
  // X conjugation turns the plain copy into a copy-on-zero.
  c.append(Gate::x(control));
  emit_fanout_tree(c, control, copies);
  for (uint32_t i = 0; i < W; ++i) {
    c.append(Gate::ccx(copies[i], a[i], b[i]));
  }
  emit_fanout_tree_inverse(c, control, copies);
  c.append(Gate::x(control));
  return fb.finish("2*clog2(L)+5", 2 * ceil_log2_u32(W) + 5);
}

OperatorFragment build_disjunction(QubitRange a, QubitId r,
                                   QubitRange ancilla_pool) {
  const uint32_t W = a.width;
  if (W == 0) {
    throw CircuitError("build_disjunction: empty input register");
  }
  require_disjoint("build_disjunction", {a, single(r), ancilla_pool});
  FragBuild fb("build_disjunction", ancilla_pool);
  fb.role("a", a);
  fb.role("r", r);
  Circuit& c = fb.circuit();
  for (uint32_t i = 0; i < W; ++i) c.append(Gate::x(a[i]));
  std::vector<Control> cs;
  for (uint32_t i = 0; i < W; ++i) cs.push_back(pos(a[i]));
  OperatorFragment mcx = build_mcx(cs, r, fb.remaining_pool());
  fb.absorb(mcx);
  for (uint32_t i = 0; i < W; ++i) c.append(Gate::x(a[i]));
  c.append(Gate::x(r));
  return fb.finish("2*clog2(L)+4", 2 * ceil_log2_u32(W) + 4);
}

}  // namespace fsmatch
