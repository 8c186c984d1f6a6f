#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fsmatch {

// Fixed-width bit-vector packed into 64-bit words.
//
// Index 0 is the first position (leftmost when printed). shifted_right(s)
// moves the bit at position p to position p+s, i.e. towards higher indices,
// matching the rightward-shift convention of the matching algorithm.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(uint32_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVec from_string(std::string_view bits);
  static BitVec ones(uint32_t size);

  uint32_t size() const { return size_; }

  bool get(uint32_t i) const;
  void set(uint32_t i, bool v);

  bool any() const;
  bool none() const { return !any(); }
  uint32_t count() const;

  // OR of positions [first, last], clamped to the vector width.
  bool any_in(uint32_t first, uint32_t last) const;

  BitVec operator&(const BitVec& rhs) const;

  // Logical shifts over the vector width; vacated positions become 0.
  BitVec shifted_right(uint32_t s) const;  // p -> p + s
  BitVec shifted_left(uint32_t s) const;   // p -> p - s

  // Cyclic: p -> (p + s) mod size.
  BitVec rotated_right(uint32_t s) const;

  std::string to_string() const;

  bool operator==(const BitVec& rhs) const = default;

 private:
  void clear_tail();

  uint32_t size_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace fsmatch
