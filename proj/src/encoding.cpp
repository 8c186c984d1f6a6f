#include "fsmatch/encoding.hpp"

#include <bit>
#include <stdexcept>

namespace fsmatch {

namespace {

uint32_t ceil_log2_u32(uint32_t v) {
  if (v <= 1) return 0;
  return 32u - static_cast<uint32_t>(std::countl_zero(v - 1));
}

}  // namespace

BlockEncoding BlockEncoding::binary() {
  BlockEncoding enc;
  enc.bits_ = 1;
  enc.sigma_ = 2;
  enc.binary_mode_ = true;
  enc.code_ = {{'0', 0}, {'1', 1}, {kSentinelX, 0}, {kSentinelY, 1}};
  return enc;
}

BlockEncoding BlockEncoding::general(std::string_view alphabet,
                                     std::optional<uint32_t> sigma) {
  BlockEncoding enc;
  enc.sigma_ = sigma.value_or(static_cast<uint32_t>(alphabet.size()));
  if (enc.sigma_ < alphabet.size()) {
    throw std::invalid_argument("BlockEncoding: sigma smaller than alphabet");
  }
  enc.bits_ = std::max(1u, ceil_log2_u32(enc.sigma_ + 2));
  uint32_t next = 0;
  char prev = 0;
  for (char c : alphabet) {
    if (next > 0 && c <= prev) {
      throw std::invalid_argument("BlockEncoding: alphabet must be sorted");
    }
    if (c == kSentinelX || c == kSentinelY) {
      throw std::invalid_argument(
          "BlockEncoding: alphabet may not contain reserved codes");
    }
    enc.code_[c] = next++;
    prev = c;
  }
  enc.code_[kSentinelX] = enc.sigma_;
  enc.code_[kSentinelY] = enc.sigma_ + 1;
  return enc;
}

BlockEncoding BlockEncoding::for_pair(const InputPair& pair,
                                      std::optional<uint32_t> force_bits) {
  const std::string& alpha = pair.alphabet();
  const bool binary_ok =
      pair.sigma() <= 2 &&
      alpha.find_first_not_of("01") == std::string::npos;
  if (force_bits.has_value() && *force_bits == 1) {
    if (!binary_ok) {
      throw std::invalid_argument(
          "BlockEncoding: 1-bit mode needs binary inputs with sigma <= 2");
    }
    return binary();
  }
  if (binary_ok && !force_bits.has_value()) return binary();
  BlockEncoding enc = general(alpha, pair.sigma());
  if (force_bits.has_value()) {
    if (*force_bits < enc.bits_) {
      throw std::invalid_argument(
          "BlockEncoding: requested width is too narrow for the alphabet");
    }
    enc.bits_ = *force_bits;
  }
  return enc;
}

uint32_t BlockEncoding::code(char c) const {
  auto it = code_.find(c);
  if (it == code_.end()) {
    throw std::invalid_argument(std::string("BlockEncoding: no code for '") +
                                c + "'");
  }
  return it->second;
}

}  // namespace fsmatch
