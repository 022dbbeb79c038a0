#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace oml {

/// Fixed-width dynamic bit set used for order rows and element subsets.
class BitSet {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitSet() = default;
  explicit BitSet(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void assign(std::size_t i, bool value) {
    if (value)
      set(i);
    else
      reset(i);
  }

  std::size_t count() const;
  bool none() const;
  bool is_subset_of(const BitSet &other) const;

  /// Index of the lowest set bit, or npos.
  std::size_t first() const;
  /// Index of the lowest set bit strictly above `i`, or npos.
  std::size_t next(std::size_t i) const;
  /// Index of the highest set bit, or npos.
  std::size_t last() const;

  /// Overwrites this set with `a & b`; all three must share a size.
  void assign_and(const BitSet &a, const BitSet &b);

  BitSet &operator&=(const BitSet &other);
  BitSet &operator|=(const BitSet &other);
  friend BitSet operator&(BitSet a, const BitSet &b) { return a &= b; }
  friend BitSet operator|(BitSet a, const BitSet &b) { return a |= b; }
  friend bool operator==(const BitSet &, const BitSet &) = default;

  std::vector<std::size_t> indices() const;

  template <typename Fn> void for_each(Fn &&fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace oml
