#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sumgraph {

/// Fixed-size packed bit vector. Used for element sets and adjacency rows.
class BitSet {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitSet() = default;
  explicit BitSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

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

  bool intersects(const BitSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }
  bool is_subset_of(const BitSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  BitSet& operator|=(const BitSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  BitSet& operator&=(const BitSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend bool operator==(const BitSet&, const BitSet&) = default;

  /// First set index at or after `from`, or npos.
  std::size_t next(std::size_t from) const {
    if (from >= n_) return npos;
    std::size_t k = from >> 6;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) {
        std::size_t i = (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
        return i < n_ ? i : npos;
      }
      if (++k == words_.size()) return npos;
      w = words_[k];
    }
  }
  std::size_t first() const { return next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = first(); i != npos; i = next(i + 1)) f(i);
  }

  template <class Index = std::uint32_t>
  std::vector<Index> indices() const {
    std::vector<Index> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<Index>(i)); });
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sumgraph
