#include "oml/bitset.hpp"

#include <algorithm>

namespace oml {

std::size_t BitSet::count() const {
  std::size_t total = 0;
  for (auto w : words_)
    total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitSet::none() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool BitSet::is_subset_of(const BitSet &other) const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & ~other.words_[w]) != 0)
      return false;
  return true;
}

std::size_t BitSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0)
      return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return npos;
}

std::size_t BitSet::next(std::size_t i) const {
  ++i;
  if (i >= size_)
    return npos;
  std::size_t w = i >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (bits != 0)
      return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w == words_.size())
      return npos;
    bits = words_[w];
  }
}

std::size_t BitSet::last() const {
  for (std::size_t w = words_.size(); w-- > 0;)
    if (words_[w] != 0)
      return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
  return npos;
}

void BitSet::assign_and(const BitSet &a, const BitSet &b) {
  for (std::size_t w = 0; w < words_.size(); ++w)
    words_[w] = a.words_[w] & b.words_[w];
}

BitSet &BitSet::operator&=(const BitSet &other) {
  for (std::size_t w = 0; w < words_.size(); ++w)
    words_[w] &= other.words_[w];
  return *this;
}

BitSet &BitSet::operator|=(const BitSet &other) {
  for (std::size_t w = 0; w < words_.size(); ++w)
    words_[w] |= other.words_[w];
  return *this;
}

std::vector<std::size_t> BitSet::indices() const {
  std::vector<std::size_t> out;
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

} // namespace oml
