#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace distk {

/// Fixed-width bitset sized at runtime; the workhorse of the exact searches.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }

  void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  void set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  bool intersects(const DynBitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const DynBitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::size_t count_and(const DynBitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  DynBitset& operator&=(const DynBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  DynBitset& operator|=(const DynBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Removes the bits of `o`.
  DynBitset& subtract(const DynBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
  friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }
  friend bool operator==(const DynBitset&, const DynBitset&) = default;

  /// Index of the lowest set bit at or after `from`, or size().
  std::size_t find_next(std::size_t from) const {
    if (from >= bits_) return bits_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return std::min(bits_, (wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
      if (++wi >= words_.size()) return bits_;
      w = words_[wi];
    }
  }
  std::size_t find_first() const { return find_next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

 private:
  void trim() {
    if (bits_ & 63) words_.back() &= (std::uint64_t{1} << (bits_ & 63)) - 1;
  }

  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace distk
