#pragma once

#include <bit>
#include <string>
#include <string_view>

#include "gray16/errors.hpp"

namespace gray16 {

// A fixed-length vector over Z_2, at most 32 bits. Position 0 is the
// leftmost (most significant) bit, matching the usual table notation.
class BinaryWord {
 public:
  BinaryWord() = default;

  BinaryWord(unsigned bits, int length) : bits_(bits), len_(length) {
    if (length < 0 || length > 32)
      throw LengthMismatch("word length out of range");
    if (length < 32) bits_ &= (1u << length) - 1u;
  }

  static BinaryWord zero(int length) { return BinaryWord(0u, length); }

  static BinaryWord ones(int length) { return BinaryWord(~0u, length); }

  static BinaryWord parse(std::string_view text) {
    unsigned bits = 0;
    for (char c : text) {
      if (c != '0' && c != '1')
        throw LengthMismatch("word must consist of 0s and 1s");
      bits = (bits << 1) | static_cast<unsigned>(c - '0');
    }
    return BinaryWord(bits, static_cast<int>(text.size()));
  }

  int length() const { return len_; }
  unsigned raw() const { return bits_; }

  int bit(int pos) const { return (bits_ >> (len_ - 1 - pos)) & 1u; }

  // Componentwise sum mod 2.
  BinaryWord operator+(const BinaryWord& other) const {
    if (len_ != other.len_)
      throw LengthMismatch("word lengths differ");
    return BinaryWord(bits_ ^ other.bits_, len_);
  }

  BinaryWord concat(const BinaryWord& other) const {
    return BinaryWord((bits_ << other.len_) | other.bits_, len_ + other.len_);
  }

  std::string str() const {
    std::string out(static_cast<size_t>(len_), '0');
    for (int i = 0; i < len_; ++i)
      if (bit(i)) out[static_cast<size_t>(i)] = '1';
    return out;
  }

  bool operator==(const BinaryWord&) const = default;

 private:
  unsigned bits_ = 0;
  int len_ = 0;
};

inline int hamming_weight(const BinaryWord& u) {
  return std::popcount(u.raw());
}

inline int hamming_distance(const BinaryWord& u, const BinaryWord& v) {
  if (u.length() != v.length())
    throw LengthMismatch("word lengths differ");
  return std::popcount(u.raw() ^ v.raw());
}

}  // namespace gray16
