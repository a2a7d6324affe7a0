#ifndef RSUM_BITMASK_HPP
#define RSUM_BITMASK_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rsum {

/// Fixed-width bitset with the shift/rotate-or primitives the sumset DP needs.
/// Bits at positions >= size() are always zero.
class Bitmask {
 public:
  Bitmask() = default;
  explicit Bitmask(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return nbits_; }

  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  bool any() const noexcept {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  Bitmask& operator|=(const Bitmask& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  /// this |= (src << k), dropping bits shifted past size().
  void or_shifted_left(const Bitmask& src, std::size_t k) noexcept;
  /// this |= (src >> k).
  void or_shifted_right(const Bitmask& src, std::size_t k) noexcept;
  /// this |= src rotated left by k within size() bits (addition of k mod size()).
  void or_rotated_left(const Bitmask& src, std::size_t k) noexcept {
    k %= nbits_;
    or_shifted_left(src, k);
    if (k != 0) or_shifted_right(src, nbits_ - k);
  }

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        const auto b = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const Bitmask&, const Bitmask&) = default;

 private:
  void trim() noexcept {
    if (nbits_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
    }
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

inline void Bitmask::or_shifted_left(const Bitmask& src, std::size_t k) noexcept {
  const std::size_t ws = k / 64;
  const unsigned bs = static_cast<unsigned>(k % 64);
  const std::size_t n = words_.size();
  if (ws >= n) return;
  for (std::size_t i = n; i-- > ws;) {
    std::uint64_t v = src.words_[i - ws] << bs;
    if (bs != 0 && i > ws) v |= src.words_[i - ws - 1] >> (64 - bs);
    words_[i] |= v;
  }
  trim();
}

inline void Bitmask::or_shifted_right(const Bitmask& src, std::size_t k) noexcept {
  const std::size_t ws = k / 64;
  const unsigned bs = static_cast<unsigned>(k % 64);
  const std::size_t n = words_.size();
  if (ws >= n) return;
  for (std::size_t i = 0; i + ws < n; ++i) {
    std::uint64_t v = src.words_[i + ws] >> bs;
    if (bs != 0 && i + ws + 1 < n) v |= src.words_[i + ws + 1] << (64 - bs);
    words_[i] |= v;
  }
}

}  // namespace rsum

#endif  // RSUM_BITMASK_HPP
