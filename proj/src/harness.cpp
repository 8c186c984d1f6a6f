#include "fsmatch/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>

#include "fsmatch/assembler.hpp"
#include "fsmatch/reference.hpp"

namespace fsmatch {

RandomInstance random_instance(std::mt19937_64& rng, uint32_t n_padded,
                               uint32_t sigma) {
  const uint32_t lo = n_padded / 2;       // shortest raw length padding to n
  const uint32_t hi = n_padded - 1;       // leave room for the terminator
  std::uniform_int_distribution<uint32_t> len_dist(lo, hi);
  const uint32_t len = len_dist(rng);

  const auto letter = [&](uint32_t v) {
    return sigma <= 2 ? static_cast<char>('0' + v) : static_cast<char>('a' + v);
  };
  std::uniform_int_distribution<uint32_t> char_dist(0, sigma - 1);
  std::string x(len, '0');
  std::string y(len, '0');
  for (auto* s : {&x, &y}) {
    for (char& ch : *s) ch = letter(char_dist(rng));
  }

  // Plant a shared segment half the time; otherwise matches on larger
  // alphabets would be vanishingly rare.
  if (rng() % 2 == 0) {
    std::uniform_int_distribution<uint32_t> pos_dist(0, len - 1);
    const uint32_t start = pos_dist(rng);
    std::uniform_int_distribution<uint32_t> seg_dist(1, len - start);
    const uint32_t seg = seg_dist(rng);
    y.replace(start, seg, x, start, seg);
  }

  std::uniform_int_distribution<uint32_t> d_dist(1, n_padded);
  const uint32_t d = d_dist(rng);
  RandomInstance inst{std::move(x), std::move(y), ProblemSpec::sfsc(d)};
  switch (rng() % 3) {
    case 0:
      inst.spec = ProblemSpec::fpm(d);
      break;
    case 1: {
      std::uniform_int_distribution<uint32_t> j_dist(0, n_padded - d);
      inst.spec = ProblemSpec::ffm(d, j_dist(rng));
      break;
    }
    default:
      break;
  }
  return inst;
}

namespace {

struct CaseOutcome {
  bool classical = false;
  bool circuit = false;
  bool brute = false;
  bool agree() const { return classical == circuit && circuit == brute; }
};

CaseOutcome run_case(const RandomInstance& inst, uint32_t sigma) {
  InputPair pair = pad_inputs(inst.x_raw, inst.y_raw, sigma);
  BlockEncoding enc = BlockEncoding::for_pair(pair);
  CaseOutcome out;
  out.classical = fsm_classical(pair, inst.spec).answer;
  out.circuit = run(pair, inst.spec, enc).answer;
  out.brute = brute_force_check(pair, inst.spec);
  return out;
}

}  // namespace

VerifySummary run_verify(const VerifyConfig& config) {
  struct PendingCase {
    RandomInstance inst;
    uint32_t n = 0;
    uint64_t index = 0;
  };

  std::vector<PendingCase> cases;
  {
    std::mt19937_64 rng(config.seed);
    uint64_t index = 0;
    for (uint32_t n : config.n_values) {
      if (n < 4 || !std::has_single_bit(n)) {
        throw std::invalid_argument(
            "verify: padded sizes must be powers of two, at least 4");
      }
      if (config.sigma < 2) {
        throw std::invalid_argument("verify: sigma must be at least 2");
      }
      for (uint32_t t = 0; t < config.trials; ++t) {
        cases.push_back({random_instance(rng, n, config.sigma), n, index++});
      }
    }
  }

  std::vector<CaseOutcome> outcomes(cases.size());
  uint32_t threads = config.threads;
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = std::min<uint32_t>(threads, std::max<size_t>(cases.size(), 1));

  if (threads <= 1) {
    for (size_t i = 0; i < cases.size(); ++i) {
      outcomes[i] = run_case(cases[i].inst, config.sigma);
    }
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    for (uint32_t w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        while (true) {
          const size_t i = next.fetch_add(1);
          if (i >= cases.size()) break;
          outcomes[i] = run_case(cases[i].inst, config.sigma);
        }
      });
    }
    for (auto& worker : workers) worker.join();
  }

  VerifySummary summary;
  summary.cases = cases.size();
  for (size_t i = 0; i < cases.size(); ++i) {
    if (outcomes[i].agree()) continue;
    const PendingCase& pc = cases[i];
    Disagreement bad;
    bad.seed = config.seed;
    bad.index = pc.index;
    bad.n = pc.n;
    bad.x_raw = pc.inst.x_raw;
    bad.y_raw = pc.inst.y_raw;
    bad.kind = std::string(to_string(pc.inst.spec.kind));
    bad.d = pc.inst.spec.d;
    bad.j = pc.inst.spec.j ? static_cast<int64_t>(*pc.inst.spec.j) : -1;
    bad.classical = outcomes[i].classical;
    bad.circuit = outcomes[i].circuit;
    bad.brute = outcomes[i].brute;
    summary.disagreements.push_back(std::move(bad));
  }
  return summary;
}

}  // namespace fsmatch
