#include "fsmatch/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace fsmatch {

namespace {
constexpr uint32_t kWordBits = 64;
}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(static_cast<uint32_t>(bits.size()));
  for (uint32_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("BitVec::from_string: expected '0' or '1'");
    }
  }
  return v;
}

BitVec BitVec::ones(uint32_t size) {
  BitVec v(size);
  for (auto& w : v.words_) w = ~uint64_t{0};
  v.clear_tail();
  return v;
}

bool BitVec::get(uint32_t i) const {
  if (i >= size_) throw std::out_of_range("BitVec::get: index past end");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVec::set(uint32_t i, bool v) {
  if (i >= size_) throw std::out_of_range("BitVec::set: index past end");
  const uint64_t mask = uint64_t{1} << (i % kWordBits);
  if (v) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

bool BitVec::any() const {
  for (uint64_t w : words_) {
    if (w != 0) return true;
  }
  return false;
}

uint32_t BitVec::count() const {
  uint32_t c = 0;
  for (uint64_t w : words_) c += static_cast<uint32_t>(std::popcount(w));
  return c;
}

bool BitVec::any_in(uint32_t first, uint32_t last) const {
  if (size_ == 0 || first > last) return false;
  if (last >= size_) last = size_ - 1;
  for (uint32_t i = first; i <= last; ++i) {
    if (get(i)) return true;
  }
  return false;
}

BitVec BitVec::operator&(const BitVec& rhs) const {
  if (size_ != rhs.size_) {
    throw std::invalid_argument("BitVec::operator&: width mismatch");
  }
  BitVec out(size_);
  for (size_t w = 0; w < words_.size(); ++w) {
    out.words_[w] = words_[w] & rhs.words_[w];
  }
  return out;
}

BitVec BitVec::shifted_right(uint32_t s) const {
  BitVec out(size_);
  if (s >= size_) return out;
  const uint32_t word_shift = s / kWordBits;
  const uint32_t bit_shift = s % kWordBits;
  const size_t nw = words_.size();
  for (size_t w = nw; w-- > word_shift;) {
    uint64_t v = words_[w - word_shift] << bit_shift;
    if (bit_shift != 0 && w > word_shift) {
      v |= words_[w - word_shift - 1] >> (kWordBits - bit_shift);
    }
    out.words_[w] = v;
  }
  out.clear_tail();
  return out;
}

BitVec BitVec::shifted_left(uint32_t s) const {
  BitVec out(size_);
  if (s >= size_) return out;
  const uint32_t word_shift = s / kWordBits;
  const uint32_t bit_shift = s % kWordBits;
  const size_t nw = words_.size();
  for (size_t w = 0; w + word_shift < nw; ++w) {
    uint64_t v = words_[w + word_shift] >> bit_shift;
    if (bit_shift != 0 && w + word_shift + 1 < nw) {
      v |= words_[w + word_shift + 1] << (kWordBits - bit_shift);
    }
    out.words_[w] = v;
  }
  return out;
}

BitVec BitVec::rotated_right(uint32_t s) const {
  if (size_ == 0) return *this;
  s %= size_;
  if (s == 0) return *this;
  BitVec out = shifted_right(s);
  BitVec wrapped = shifted_left(size_ - s);
  for (size_t w = 0; w < out.words_.size(); ++w) {
    out.words_[w] |= wrapped.words_[w];
  }
  return out;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (uint32_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

void BitVec::clear_tail() {
  const uint32_t rem = size_ % kWordBits;
  if (rem != 0 && !words_.empty()) {
    words_.back() &= (uint64_t{1} << rem) - 1;
  }
}

}  // namespace fsmatch
