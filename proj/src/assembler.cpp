#include "fsmatch/assembler.hpp"

#include <bit>
#include <stdexcept>

#include "fsmatch/operators.hpp"

namespace fsmatch {

namespace {

uint32_t floor_log2_u32(uint32_t v) {
  return 31u - static_cast<uint32_t>(std::countl_zero(v));
}

void load_constant(Circuit& c, QubitRange reg, const BitVec& value) {
  for (uint32_t i = 0; i < reg.width; ++i) {
    if (value.get(i)) c.append(Gate::x(reg[i]));
  }
}

}  // namespace

Assembly assemble(const InputPair& pair, const ProblemSpec& spec,
                  const BlockEncoding& enc) {
  spec.validate(pair.n());
  for (char ch : pair.x() + pair.y()) {
    if (!enc.covers(ch)) {
      throw std::invalid_argument(
          "assemble: encoding does not cover the input alphabet");
    }
  }

  const uint32_t n = pair.n();
  const uint32_t b = enc.bits();
  const uint32_t levels = floor_log2_u32(spec.d);
  const uint32_t sv_width = n + 1;

  Assembly out;
  Circuit& c = out.circuit;
  RegisterLayout& L = out.layout;
  L.n = n;
  L.bits = b;
  L.levels = levels;

  L.x = c.add_register("x", n * b);
  L.y = c.add_register("y", n * b);
  L.dbits = c.add_register("d", levels + 1);
  for (uint32_t i = 0; i <= levels; ++i) {
    L.match.push_back(c.add_register("m" + std::to_string(i), n));
  }
  for (uint32_t i = 0; i <= levels + 1; ++i) {
    L.survivor.push_back(c.add_register("s" + std::to_string(i), sv_width));
  }
  L.result = c.add_register("r", 1);
  const uint32_t pool_width =
      std::max(sv_width, (b >= 2) ? n * b + n * (b - 1) : 0);
  L.ancilla = c.add_register("anc", pool_width);
  c.mark_ancilla(L.ancilla);
  L.qubit_count = c.qubit_count();

  auto close_stage = [&](const std::string& name) {
    const size_t begin = out.stages.empty() ? 0 : out.stages.back().gate_end;
    out.stages.push_back({name, begin, c.gates().size()});
  };

  // Init: write the inputs, the digits of d (most significant first), and
  // the seed survivor pattern, then swap the digit register into LSB-first
  // order. Loading by X gates keeps the circuit runnable from |0...0>.
  {
    BitVec xbits(n * b);
    BitVec ybits(n * b);
    for (uint32_t j = 0; j < n; ++j) {
      const uint32_t cx = enc.code(pair.x()[j]);
      const uint32_t cy = enc.code(pair.y()[j]);
      for (uint32_t k = 0; k < b; ++k) {
        xbits.set(j * b + k, (cx >> k) & 1u);
        ybits.set(j * b + k, (cy >> k) & 1u);
      }
    }
    load_constant(c, L.x, xbits);
    load_constant(c, L.y, ybits);

    const PowerDecomposition dec(spec.d);
    BitVec dmsb(levels + 1);
    for (uint32_t i = 0; i <= levels; ++i) {
      dmsb.set(i, dec.digit(levels - i));
    }
    load_constant(c, L.dbits, dmsb);
    load_constant(c, L.survivor[0], initial_survivor(spec, n).bits);

    OperatorFragment rev = build_reversal(L.dbits);
    c.compose(rev.fragment);
    close_stage("init");
  }

  // Match vectors: base comparison then one doubling step per level.
  {
    if (b == 1) {
      c.compose(build_match(L.x, L.y, L.match[0]).fragment);
    } else {
      c.compose(
          build_match_block(L.x, L.y, L.match[0], enc, L.ancilla).fragment);
    }
    for (uint32_t i = 1; i <= levels; ++i) {
      c.compose(build_ext(L.match[i - 1], L.match[i], i).fragment);
    }
    close_stage("match");
  }

  // One survivor stage per digit of d. When the digit is set, the previous
  // survivor vector is ANDed with the level match vector and rotated right
  // by 2^i; when it is clear, it is copied through unchanged. The survivor
  // register is one qubit wider than the match register; position n of the
  // conjunction reads a constant 0, so no gate is placed there.
  for (uint32_t i = 0; i <= levels; ++i) {
    const QubitId digit = L.dbits[i];
    const QubitRange prev = L.survivor[i];
    const QubitRange cur = L.survivor[i + 1];
    c.compose(build_ctrl_bitwise_and(digit, prev.sub(0, n), L.match[i],
                                     cur.sub(0, n), L.ancilla)
                  .fragment);
    c.compose(build_ctrl_rot_pow2(digit, cur, i, L.ancilla).fragment);
    c.compose(build_crc(digit, prev, cur, L.ancilla).fragment);
    close_stage("step" + std::to_string(i));
  }

  {
    c.compose(
        build_disjunction(L.survivor[levels + 1], L.result[0], L.ancilla)
            .fragment);
    close_stage("disjunction");
  }

  return out;
}

RunReport run(const InputPair& pair, const ProblemSpec& spec,
              const BlockEncoding& enc) {
  Assembly assembly = assemble(pair, spec, enc);
  const Circuit& c = assembly.circuit;

  BasisState zero(c.qubit_count());
  BasisState final_state = simulate(c, zero);

  RunReport report;
  report.answer = final_state.get(assembly.layout.result.start);
  report.size = c.gates().size();
  report.qubits = c.qubit_count();
  report.ancillae = assembly.layout.ancilla.width;
  for (const Stage& stage : assembly.stages) {
    const uint32_t d = slice_depth(c, stage.gate_begin, stage.gate_end);
    report.stage_depths.emplace_back(stage.name, d);
    report.depth += d;
  }
  report.asap_depth = depth(c);
  report.swap_expanded_depth = depth(expand_swaps(c));
  return report;
}

std::vector<ScanRow> depth_scan(std::span<const uint32_t> n_values,
                                const std::function<uint32_t(uint32_t)>& d_policy,
                                ProblemKind kind, uint32_t enc_bits) {
  std::vector<ScanRow> rows;
  for (uint32_t n : n_values) {
    if (n < 2 || !std::has_single_bit(n)) {
      throw std::invalid_argument("depth_scan: n values must be powers of two");
    }
    // A fixed instance shape: the stage structure (and hence the depth)
    // depends only on (n, floor(log2 d), bits), so any deterministic pair
    // of this padded size will do.
    std::string x_raw(n - 1, '0');
    std::string y_raw(n - 1, '0');
    for (uint32_t i = 0; i < n - 1; i += 2) x_raw[i] = '1';
    for (uint32_t i = 0; i < n - 1; i += 3) y_raw[i] = '1';
    InputPair pair = pad_inputs(x_raw, y_raw);
    const uint32_t d = std::max<uint32_t>(1, d_policy(n));
    ProblemSpec spec = (kind == ProblemKind::FFM)
                           ? ProblemSpec::ffm(d, 0)
                           : ProblemSpec{kind, d, {}};
    BlockEncoding enc = BlockEncoding::for_pair(
        pair, enc_bits == 1 ? std::optional<uint32_t>{} : enc_bits);

    Assembly assembly = assemble(pair, spec, enc);
    ScanRow row;
    row.n = n;
    row.d = d;
    row.gate_count = assembly.circuit.gates().size();
    row.qubits = assembly.circuit.qubit_count();
    for (const Stage& stage : assembly.stages) {
      row.depth += slice_depth(assembly.circuit, stage.gate_begin,
                               stage.gate_end);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fsmatch
