#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fsmatch {

// Reserved terminator codes. x is closed with '$' and y with '%'; the two
// differ so the padded tails of x and y can never compare equal.
inline constexpr char kSentinelX = '$';
inline constexpr char kSentinelY = '%';

enum class ProblemKind : uint8_t { FPM, FFM, SFSC };

std::string_view to_string(ProblemKind kind);
std::optional<ProblemKind> parse_problem_kind(std::string_view name);

// Which fixed-length comparison to run: a length-d prefix (FPM), a length-d
// factor at a given position j (FFM), or a length-d factor at any shared
// position (SFSC).
struct ProblemSpec {
  ProblemKind kind = ProblemKind::SFSC;
  uint32_t d = 1;
  std::optional<uint32_t> j;  // FFM only

  static ProblemSpec fpm(uint32_t d) { return {ProblemKind::FPM, d, {}}; }
  static ProblemSpec ffm(uint32_t d, uint32_t j) {
    return {ProblemKind::FFM, d, j};
  }
  static ProblemSpec sfsc(uint32_t d) { return {ProblemKind::SFSC, d, {}}; }

  // Throws std::invalid_argument unless 0 < d <= n and, for FFM,
  // 0 <= j <= n - d. j must be absent for the other kinds.
  void validate(uint32_t n) const;
};

// Two equal-length strings of power-of-two size. The canonical way to build
// one is pad_inputs(), which appends the '$'/'%' terminators and pads both
// strings to the next power of two; pairs built that way always end in two
// different reserved characters. from_padded() accepts pre-sized strings
// as-is (useful for fixed test vectors) and checks only the width rules.
class InputPair {
 public:
  static InputPair from_padded(std::string x, std::string y,
                               std::optional<uint32_t> sigma = std::nullopt);

  const std::string& x() const { return x_; }
  const std::string& y() const { return y_; }
  uint32_t n() const { return static_cast<uint32_t>(x_.size()); }
  uint32_t sigma() const { return sigma_; }

  // Sorted distinct source characters (sentinels excluded).
  const std::string& alphabet() const { return alphabet_; }

 private:
  InputPair(std::string x, std::string y, std::string alphabet, uint32_t sigma)
      : x_(std::move(x)),
        y_(std::move(y)),
        alphabet_(std::move(alphabet)),
        sigma_(sigma) {}

  friend InputPair pad_inputs(std::string_view, std::string_view,
                              std::optional<uint32_t>);

  std::string x_;
  std::string y_;
  std::string alphabet_;
  uint32_t sigma_ = 0;
};

// Appends the '$'/'%' terminators and pads with further copies of them up to
// the next power of two, so the result always has room for at least one
// terminator. sigma overrides the inferred alphabet size (it may only
// enlarge it). Throws std::invalid_argument on empty input, length mismatch,
// or raw characters that collide with the reserved codes.
InputPair pad_inputs(std::string_view x_raw, std::string_view y_raw,
                     std::optional<uint32_t> sigma = std::nullopt);

}  // namespace fsmatch
