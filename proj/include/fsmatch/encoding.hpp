#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "fsmatch/problem.hpp"

namespace fsmatch {

// Maps characters to fixed-width bit patterns for the circuit registers.
//
// General mode assigns codes 0..sigma-1 to the sorted source alphabet and
// sigma / sigma+1 to '$' / '%', using b = ceil(log2(sigma + 2)) bits, so the
// map is injective. Binary mode packs '0','1','$','%' into a single bit
// ('$' -> 0, '%' -> 1). That folding is not injective, but it is faithful
// for equality tests on padded pairs: '$' only ever occurs in x and '%' only
// in y, at the same (padded) positions, where they must compare unequal.
class BlockEncoding {
 public:
  static BlockEncoding binary();

  // alphabet: sorted distinct source characters. sigma may enlarge the code
  // space beyond the listed characters (it only affects the bit width).
  static BlockEncoding general(std::string_view alphabet,
                               std::optional<uint32_t> sigma = std::nullopt);

  // Picks binary mode when the pair is over {'0','1'} with sigma <= 2,
  // general mode otherwise. force_bits overrides the width; it must be
  // at least the natural width (or exactly 1 where binary mode applies).
  static BlockEncoding for_pair(const InputPair& pair,
                                std::optional<uint32_t> force_bits = {});

  uint32_t bits() const { return bits_; }
  bool is_binary_mode() const { return binary_mode_; }
  uint32_t sigma() const { return sigma_; }

  bool covers(char c) const { return code_.count(c) != 0; }
  uint32_t code(char c) const;

 private:
  BlockEncoding() = default;

  uint32_t bits_ = 1;
  uint32_t sigma_ = 2;
  bool binary_mode_ = false;
  std::map<char, uint32_t> code_;
};

}  // namespace fsmatch
