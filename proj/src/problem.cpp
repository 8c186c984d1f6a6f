#include "fsmatch/problem.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace fsmatch {

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::FPM:
      return "fpm";
    case ProblemKind::FFM:
      return "ffm";
    case ProblemKind::SFSC:
      return "sfsc";
  }
  return "?";
}

std::optional<ProblemKind> parse_problem_kind(std::string_view name) {
  if (name == "fpm") return ProblemKind::FPM;
  if (name == "ffm") return ProblemKind::FFM;
  if (name == "sfsc") return ProblemKind::SFSC;
  return std::nullopt;
}

void ProblemSpec::validate(uint32_t n) const {
  if (d == 0 || d > n) {
    throw std::invalid_argument("ProblemSpec: require 0 < d <= n");
  }
  if (kind == ProblemKind::FFM) {
    if (!j.has_value()) {
      throw std::invalid_argument("ProblemSpec: FFM requires a position j");
    }
    if (*j > n - d) {
      throw std::invalid_argument("ProblemSpec: FFM requires j <= n - d");
    }
  } else if (j.has_value()) {
    throw std::invalid_argument("ProblemSpec: j is only meaningful for FFM");
  }
}

namespace {

std::string source_alphabet(std::string_view x, std::string_view y) {
  std::set<char> chars(x.begin(), x.end());
  chars.insert(y.begin(), y.end());
  chars.erase(kSentinelX);
  chars.erase(kSentinelY);
  return std::string(chars.begin(), chars.end());
}

uint32_t resolve_sigma(const std::string& alphabet,
                       std::optional<uint32_t> sigma) {
  const auto inferred = static_cast<uint32_t>(alphabet.size());
  if (!sigma.has_value()) return std::max(inferred, 1u);
  if (*sigma < inferred) {
    throw std::invalid_argument(
        "sigma is smaller than the number of distinct input characters");
  }
  return *sigma;
}

}  // namespace

InputPair InputPair::from_padded(std::string x, std::string y,
                                 std::optional<uint32_t> sigma) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("InputPair: strings must have equal length");
  }
  if (x.size() < 2 || !std::has_single_bit(x.size())) {
    throw std::invalid_argument(
        "InputPair: length must be a power of two, at least 2");
  }
  std::string alphabet = source_alphabet(x, y);
  const uint32_t sig = resolve_sigma(alphabet, sigma);
  return InputPair(std::move(x), std::move(y), std::move(alphabet), sig);
}

InputPair pad_inputs(std::string_view x_raw, std::string_view y_raw,
                     std::optional<uint32_t> sigma) {
  if (x_raw.empty()) {
    throw std::invalid_argument("pad_inputs: input strings are empty");
  }
  if (x_raw.size() != y_raw.size()) {
    throw std::invalid_argument("pad_inputs: strings must have equal length");
  }
  for (std::string_view s : {x_raw, y_raw}) {
    if (s.find(kSentinelX) != std::string_view::npos ||
        s.find(kSentinelY) != std::string_view::npos) {
      throw std::invalid_argument(
          "pad_inputs: inputs may not contain the reserved codes '$'/'%'");
    }
  }
  // Smallest power of two that fits the input plus one terminator.
  const size_t n = std::bit_ceil(x_raw.size() + 1);
  std::string x(x_raw);
  std::string y(y_raw);
  x.append(n - x.size(), kSentinelX);
  y.append(n - y.size(), kSentinelY);
  std::string alphabet = source_alphabet(x, y);
  const uint32_t sig = resolve_sigma(alphabet, sigma);
  return InputPair(std::move(x), std::move(y), std::move(alphabet), sig);
}

}  // namespace fsmatch
