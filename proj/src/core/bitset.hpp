#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace relcat {

// Fixed-width bitset used for relation rows and subset masks.  Bit i of a
// row corresponds to the i-th label of a carrier in ascending label order.
// Ordering treats the bits as an unsigned integer (bit i has weight 2^i) so
// enumeration, canonicalization and witness selection are reproducible.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

  static Bitset from_word(std::uint64_t bits, std::size_t width) {
    Bitset b(width);
    if (!b.words_.empty()) {
      b.words_[0] = width >= 64 ? bits : (bits & ((std::uint64_t{1} << width) - 1));
    }
    return b;
  }

  std::size_t width() const { return width_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  // First word; only meaningful when width <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  const std::vector<std::uint64_t>& words() const { return words_; }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~o.words_[k]) return false;
    }
    return true;
  }

  template <class F>
  void for_each_set(F f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(64 * k + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.width_ == b.width_ && a.words_ == b.words_;
  }

  // Numeric order: most significant word first.  Widths must match.
  friend bool operator<(const Bitset& a, const Bitset& b) {
    for (std::size_t k = a.words_.size(); k-- > 0;) {
      if (a.words_[k] != b.words_[k]) return a.words_[k] < b.words_[k];
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = width_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h = h * 1099511628211ULL ^ static_cast<std::size_t>(w);
    return h;
  }

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

inline bool lex_less(const std::vector<Bitset>& a, const std::vector<Bitset>& b) {
  std::size_t n = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) continue;
    return a[i] < b[i];
  }
  return a.size() < b.size();
}

}  // namespace relcat
