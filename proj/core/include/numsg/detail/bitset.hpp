#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace numsg::detail {

// Fixed-width bit table over [0, size) with word-level shifted OR, used for
// sumset computations.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept {
    return i < size_ && ((words_[i >> 6] >> (i & 63)) & 1U);
  }
  void set(std::size_t i) noexcept {
    if (i < size_) words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  // this |= (src << shift), truncated to size().
  void or_shifted(const Bitset& src, std::size_t shift) noexcept {
    const std::size_t word_shift = shift >> 6;
    const unsigned bit_shift = shift & 63;
    const std::size_t n = words_.size();
    if (word_shift >= n) return;
    for (std::size_t i = 0; i + word_shift < n && i < src.words_.size(); ++i) {
      const std::uint64_t w = src.words_[i];
      if (w == 0) continue;
      words_[i + word_shift] |= w << bit_shift;
      if (bit_shift != 0 && i + word_shift + 1 < n) {
        words_[i + word_shift + 1] |= w >> (64 - bit_shift);
      }
    }
    trim();
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // |this \ other|
  std::size_t count_minus(const Bitset& other) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
      c += static_cast<std::size_t>(std::popcount(words_[i] & ~o));
    }
    return c;
  }

  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int b = std::countr_zero(w);
        f(i * 64 + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  void trim() noexcept {
    if (size_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace numsg::detail
