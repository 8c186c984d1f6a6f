// Command-line front end: single-instance runs, randomized verification
// against the naive reference, depth-scaling reports, and circuit export.

#include <bit>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsmatch/assembler.hpp"
#include "fsmatch/harness.hpp"
#include "fsmatch/netlist.hpp"
#include "fsmatch/reference.hpp"

using json = nlohmann::ordered_json;
using namespace fsmatch;

namespace {

constexpr int kExitMatch = 0;
constexpr int kExitNoMatch = 1;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct IoOptions {
  std::string format = "text";
  std::string out_path;
};

void add_io_options(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("--format", io.format, "Output format")
      ->check(CLI::IsMember({"text", "tsv", "jsonl"}))
      ->capture_default_str();
  cmd->add_option("--out", io.out_path, "Write output to a file");
}

// Prints to stdout or the chosen file; buffered so a run is all-or-nothing.
int emit(const IoOptions& io, const std::string& text) {
  if (io.out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(io.out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << io.out_path << "' for writing\n";
    return -1;
  }
  file << text;
  if (!file.good()) {
    std::cerr << "error: short write to '" << io.out_path << "'\n";
    return -1;
  }
  return 0;
}

struct InstanceOptions {
  std::string problem = "sfsc";
  std::string x;
  std::string y;
  uint32_t d = 1;
  std::optional<uint32_t> j;
  std::optional<uint32_t> sigma;
  std::optional<uint32_t> bits;
};

void add_instance_options(CLI::App* cmd, InstanceOptions& inst) {
  cmd->add_option("--problem", inst.problem,
                  "Problem kind: fpm, ffm or sfsc")
      ->check(CLI::IsMember({"fpm", "ffm", "sfsc"}))
      ->capture_default_str();
  cmd->add_option("--x", inst.x, "First input string")->required();
  cmd->add_option("--y", inst.y, "Second input string")->required();
  cmd->add_option("--d", inst.d, "Substring length")->required();
  cmd->add_option("--j", inst.j, "Start position (ffm only)");
  cmd->add_option("--sigma", inst.sigma,
                  "Alphabet size (default: inferred from the inputs)");
  cmd->add_option("--b", inst.bits, "Bits per character in the circuit");
}

struct PreparedInstance {
  InputPair pair;
  ProblemSpec spec;
  BlockEncoding enc;
};

PreparedInstance prepare(const InstanceOptions& inst) {
  const ProblemKind kind = *parse_problem_kind(inst.problem);
  if (kind == ProblemKind::FFM && !inst.j.has_value()) {
    throw std::invalid_argument("ffm needs --j");
  }
  if (kind != ProblemKind::FFM && inst.j.has_value()) {
    throw std::invalid_argument("--j is only valid with --problem ffm");
  }
  InputPair pair = pad_inputs(inst.x, inst.y, inst.sigma);
  ProblemSpec spec{kind, inst.d, inst.j};
  spec.validate(pair.n());
  BlockEncoding enc = BlockEncoding::for_pair(pair, inst.bits);
  return {std::move(pair), spec, std::move(enc)};
}

int cmd_run(const InstanceOptions& inst, const std::string& mode,
            const IoOptions& io) {
  const PreparedInstance prep = prepare(inst);
  json obj;
  std::optional<RunReport> report;
  if (mode == "classical") {
    obj["answer"] = fsm_classical(prep.pair, prep.spec).answer ? "MATCH"
                                                               : "NO-MATCH";
    obj["raw_n"] = inst.x.size();
    obj["padded_n"] = prep.pair.n();
  } else {
    report = run(prep.pair, prep.spec, prep.enc);
    obj["answer"] = report->answer ? "MATCH" : "NO-MATCH";
    obj["raw_n"] = inst.x.size();
    obj["padded_n"] = prep.pair.n();
    obj["bits_per_char"] = prep.enc.bits();
    obj["depth"] = report->depth;
    obj["asap_depth"] = report->asap_depth;
    obj["swap_expanded_depth"] = report->swap_expanded_depth;
    obj["gates"] = report->size;
    obj["qubits"] = report->qubits;
    obj["ancillae"] = report->ancillae;
    json stages = json::object();
    for (const auto& [name, d] : report->stage_depths) stages[name] = d;
    obj["stage_depths"] = stages;
  }

  std::ostringstream text;
  if (io.format == "jsonl") {
    text << obj.dump() << "\n";
  } else if (io.format == "tsv") {
    std::string header;
    std::string row;
    for (const auto& [key, value] : obj.items()) {
      if (value.is_object()) continue;
      header += key + "\t";
      row += (value.is_string() ? value.get<std::string>() : value.dump()) +
             "\t";
    }
    header.back() = '\n';
    row.back() = '\n';
    text << header << row;
  } else {
    text << "raw n: " << inst.x.size() << ", padded n: " << prep.pair.n();
    if (report.has_value()) text << ", bits per char: " << prep.enc.bits();
    text << "\n" << obj["answer"].get<std::string>() << "\n";
    if (report.has_value()) {
      text << "depth: " << report->depth << " (asap " << report->asap_depth
           << ", swap-expanded " << report->swap_expanded_depth
           << "), gates: " << report->size << ", qubits: " << report->qubits
           << ", ancillae: " << report->ancillae << "\n";
      for (const auto& [name, d] : report->stage_depths) {
        text << "  stage " << name << ": depth " << d << "\n";
      }
    }
  }
  if (emit(io, text.str()) != 0) return kExitFailure;
  return obj["answer"] == "MATCH" ? kExitMatch : kExitNoMatch;
}

int cmd_verify(const VerifyConfig& config, const IoOptions& io) {
  const VerifySummary summary = run_verify(config);
  std::ostringstream text;

  if (io.format == "jsonl") {
    for (const Disagreement& bad : summary.disagreements) {
      json obj;
      obj["seed"] = bad.seed;
      obj["index"] = bad.index;
      obj["n"] = bad.n;
      obj["x"] = bad.x_raw;
      obj["y"] = bad.y_raw;
      obj["kind"] = bad.kind;
      obj["d"] = bad.d;
      obj["j"] = bad.j;
      obj["classical"] = bad.classical;
      obj["circuit"] = bad.circuit;
      obj["brute"] = bad.brute;
      text << obj.dump() << "\n";
    }
    json tail;
    tail["cases"] = summary.cases;
    tail["disagreements"] = summary.disagreements.size();
    tail["seed"] = config.seed;
    text << tail.dump() << "\n";
  } else if (io.format == "tsv") {
    text << "seed\tindex\tn\tx\ty\tkind\td\tj\tclassical\tcircuit\tbrute\n";
    for (const Disagreement& bad : summary.disagreements) {
      text << bad.seed << "\t" << bad.index << "\t" << bad.n << "\t"
           << bad.x_raw << "\t" << bad.y_raw << "\t" << bad.kind << "\t"
           << bad.d << "\t" << bad.j << "\t" << bad.classical << "\t"
           << bad.circuit << "\t" << bad.brute << "\n";
    }
    text << "# cases=" << summary.cases
         << " disagreements=" << summary.disagreements.size() << "\n";
  } else {
    for (const Disagreement& bad : summary.disagreements) {
      text << "disagreement: seed=" << bad.seed << " index=" << bad.index
           << " n=" << bad.n << " kind=" << bad.kind << " d=" << bad.d;
      if (bad.j >= 0) text << " j=" << bad.j;
      text << " x=" << bad.x_raw << " y=" << bad.y_raw
           << " classical=" << bad.classical << " circuit=" << bad.circuit
           << " brute=" << bad.brute << "\n";
    }
    if (summary.cases == 0) {
      text << "verified 0 cases (vacuous pass)\n";
    } else {
      text << "verified " << summary.cases << " cases: "
           << summary.disagreements.size() << " disagreements\n";
    }
  }
  const int rc = emit(io, text.str());
  if (rc != 0) return kExitFailure;
  return summary.disagreements.empty() ? 0 : kExitFailure;
}

int cmd_stats(uint32_t n_min, uint32_t n_max, const std::string& d_policy,
              uint32_t bits, const IoOptions& io) {
  if (n_min < 2 || !std::has_single_bit(n_min) || !std::has_single_bit(n_max) ||
      n_min > n_max) {
    throw std::invalid_argument(
        "stats needs power-of-two sizes with --n-min <= --n-max");
  }
  std::vector<uint32_t> sizes;
  for (uint32_t n = n_min; n <= n_max; n *= 2) sizes.push_back(n);

  const auto policy = [&](uint32_t n) -> uint32_t {
    if (d_policy == "full") return n;
    if (d_policy == "unit") return 1;
    return n / 2;
  };
  const auto rows = depth_scan(sizes, policy, ProblemKind::SFSC, bits);

  // Polylog verdict: fit the constant on the smallest size, then require
  // depth(n) <= K * ceil(log2 n)^e everywhere. One extra log factor is
  // budgeted for multi-bit characters.
  const uint32_t exponent = bits >= 2 ? 4 : 3;
  const auto bound_at = [&](uint32_t n, double k) {
    const double lg = std::bit_width(n) - 1 + (std::has_single_bit(n) ? 0 : 1);
    double value = k;
    for (uint32_t e = 0; e < exponent; ++e) value *= lg;
    return value;
  };
  const double lg0 = std::bit_width(sizes[0]) - 1;
  double k = rows[0].depth * 1.5;
  for (uint32_t e = 0; e < exponent; ++e) k /= lg0;
  bool pass = true;
  for (const ScanRow& row : rows) {
    if (row.depth > bound_at(row.n, k)) pass = false;
  }

  std::ostringstream text;
  if (io.format == "jsonl") {
    for (const ScanRow& row : rows) {
      json obj;
      obj["n"] = row.n;
      obj["d"] = row.d;
      obj["depth"] = row.depth;
      obj["gates"] = row.gate_count;
      obj["qubits"] = row.qubits;
      obj["bound"] = bound_at(row.n, k);
      text << obj.dump() << "\n";
    }
    json tail;
    tail["exponent"] = exponent;
    tail["k"] = k;
    tail["verdict"] = pass ? "PASS" : "FAIL";
    text << tail.dump() << "\n";
  } else {
    const char* sep = io.format == "tsv" ? "\t" : "  ";
    text << "n" << sep << "d" << sep << "depth" << sep << "gates" << sep
         << "qubits" << sep << "bound\n";
    for (const ScanRow& row : rows) {
      text << row.n << sep << row.d << sep << row.depth << sep
           << row.gate_count << sep << row.qubits << sep << bound_at(row.n, k)
           << "\n";
    }
    text << (pass ? "PASS" : "FAIL") << ": depth within " << k << " * clog2(n)^"
         << exponent << "\n";
  }
  const int rc = emit(io, text.str());
  if (rc != 0) return kExitFailure;
  return pass ? 0 : kExitFailure;
}

int cmd_export(const InstanceOptions& inst, const std::string& circuit_format,
               const IoOptions& io) {
  const PreparedInstance prep = prepare(inst);
  const Assembly assembly = assemble(prep.pair, prep.spec, prep.enc);
  const std::string text = circuit_format == "qasm"
                               ? to_qasm(assembly.circuit)
                               : to_netlist(assembly.circuit);
  if (emit(io, text) != 0) return kExitFailure;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed substring matching, classically and by reversible "
               "circuit simulation"};
  app.require_subcommand(1);

  InstanceOptions run_inst;
  std::string run_mode = "classical";
  IoOptions run_io;
  CLI::App* run_cmd =
      app.add_subcommand("run", "Solve one instance and print MATCH status");
  add_instance_options(run_cmd, run_inst);
  run_cmd->add_option("--mode", run_mode, "classical or circuit")
      ->check(CLI::IsMember({"classical", "circuit"}))
      ->capture_default_str();
  add_io_options(run_cmd, run_io);

  VerifyConfig verify_config;
  IoOptions verify_io;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Cross-check classical, circuit and naive answers on "
                "seeded random instances");
  verify_cmd
      ->add_option("--n", verify_config.n_values,
                   "Padded sizes to draw from (repeatable)")
      ->capture_default_str();
  verify_cmd->add_option("--sigma", verify_config.sigma, "Alphabet size")
      ->capture_default_str();
  verify_cmd->add_option("--trials", verify_config.trials, "Cases per size")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_config.seed, "Random seed")
      ->capture_default_str();
  verify_cmd->add_option("--threads", verify_config.threads,
                         "Worker threads (0 = all cores)");
  add_io_options(verify_cmd, verify_io);

  uint32_t stats_n_min = 8;
  uint32_t stats_n_max = 1024;
  std::string stats_policy = "half";
  uint32_t stats_bits = 1;
  IoOptions stats_io;
  CLI::App* stats_cmd = app.add_subcommand(
      "stats", "Depth/size/qubit table over a size sweep, with the "
               "polylog-depth verdict");
  stats_cmd->add_option("--n-min", stats_n_min, "Smallest padded size")
      ->capture_default_str();
  stats_cmd->add_option("--n-max", stats_n_max, "Largest padded size")
      ->capture_default_str();
  stats_cmd->add_option("--d-policy", stats_policy, "half, full or unit")
      ->check(CLI::IsMember({"half", "full", "unit"}))
      ->capture_default_str();
  stats_cmd->add_option("--b", stats_bits, "Bits per character")
      ->capture_default_str();
  add_io_options(stats_cmd, stats_io);

  InstanceOptions export_inst;
  std::string export_format = "netlist";
  IoOptions export_io;
  CLI::App* export_cmd =
      app.add_subcommand("export", "Write the assembled circuit to a file");
  add_instance_options(export_cmd, export_inst);
  export_cmd
      ->add_option("--circuit-format", export_format, "netlist or qasm")
      ->check(CLI::IsMember({"netlist", "qasm"}))
      ->capture_default_str();
  add_io_options(export_cmd, export_io);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run_inst, run_mode, run_io);
    if (verify_cmd->parsed()) return cmd_verify(verify_config, verify_io);
    if (stats_cmd->parsed()) {
      return cmd_stats(stats_n_min, stats_n_max, stats_policy, stats_bits,
                       stats_io);
    }
    if (export_cmd->parsed()) {
      return cmd_export(export_inst, export_format, export_io);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
