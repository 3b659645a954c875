#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nsring::detail {

// Fixed-length bit array used for membership windows. Bit i of a window
// anchored at some base integer stands for membership of base + i. The
// word-level shift-or is what keeps sumset arithmetic cheap on corpus runs.
class BitWindow {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitWindow() = default;
  explicit BitWindow(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & std::uint64_t(1);
  }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }

  // this |= (other << shift); bits shifted past size() are dropped.
  void or_shifted(const BitWindow& other, std::size_t shift) {
    if (shift >= nbits_) return;
    const std::size_t word_shift = shift >> 6;
    const unsigned bit_shift = static_cast<unsigned>(shift & 63);
    const std::size_t nw = words_.size();
    for (std::size_t j = 0; j < other.words_.size(); ++j) {
      const std::uint64_t w = other.words_[j];
      if (w == 0) continue;
      const std::size_t k = j + word_shift;
      if (k >= nw) break;
      if (bit_shift == 0) {
        words_[k] |= w;
      } else {
        words_[k] |= w << bit_shift;
        if (k + 1 < nw) words_[k + 1] |= w >> (64 - bit_shift);
      }
    }
    mask_tail();
  }

  void or_with(const BitWindow& other) { or_shifted(other, 0); }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  // Highest index with a zero bit, or npos when every bit is set.
  std::size_t last_zero() const {
    for (std::size_t j = words_.size(); j-- > 0;) {
      std::uint64_t w = ~words_[j];
      if (j + 1 == words_.size()) {
        const unsigned used = static_cast<unsigned>(nbits_ - 64 * j);
        if (used < 64) w &= (std::uint64_t(1) << used) - 1;
      }
      if (w != 0) return 64 * j + (63 - static_cast<std::size_t>(__builtin_clzll(w)));
    }
    return npos;
  }

  // Lowest set bit, or npos when empty.
  std::size_t first_set() const {
    for (std::size_t j = 0; j < words_.size(); ++j) {
      if (words_[j] != 0)
        return 64 * j + static_cast<std::size_t>(__builtin_ctzll(words_[j]));
    }
    return npos;
  }

  // Copy of bits [from, from + nbits).
  BitWindow slice(std::size_t from, std::size_t nbits) const {
    BitWindow out(nbits);
    for (std::size_t i = 0; i < nbits; ++i)
      if (get(from + i)) out.set(i);
    return out;
  }

  bool operator==(const BitWindow& other) const {
    return nbits_ == other.nbits_ && words_ == other.words_;
  }

private:
  void mask_tail() {
    if (words_.empty()) return;
    const unsigned used = static_cast<unsigned>(nbits_ - 64 * (words_.size() - 1));
    if (used < 64) words_.back() &= (std::uint64_t(1) << used) - 1;
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace nsring::detail
