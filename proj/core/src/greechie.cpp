#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "oml/constructions.hpp"

namespace oml {

namespace {

constexpr std::size_t kMaxBlockSize = 16;

std::string block_name(const GreechieDiagram &d, std::size_t b) {
  std::string out = "{";
  for (std::size_t i = 0; i < d.blocks[b].size(); ++i) {
    if (i > 0)
      out += ' ';
    out += d.atoms[d.blocks[b][i]];
  }
  return out + "}";
}

} // namespace

GreechieDiagram GreechieDiagram::from_labels(
    const std::vector<std::vector<std::string>> &labelled_blocks,
    bool strict) {
  GreechieDiagram d;
  std::map<std::string, std::size_t> ids;
  for (const auto &labels : labelled_blocks) {
    std::vector<std::size_t> block;
    for (const auto &label : labels) {
      auto [it, fresh] = ids.try_emplace(label, d.atoms.size());
      if (fresh)
        d.atoms.push_back(label);
      if (std::find(block.begin(), block.end(), it->second) != block.end())
        throw InvalidDiagram("atom " + label + " repeated within a block");
      block.push_back(it->second);
    }
    d.blocks.push_back(std::move(block));
  }
  d.check(strict);
  return d;
}

void GreechieDiagram::check(bool strict) const {
  if (blocks.empty())
    throw InvalidDiagram("diagram has no blocks");
  {
    std::set<std::string> distinct(atoms.begin(), atoms.end());
    if (distinct.size() != atoms.size())
      throw InvalidDiagram("atom labels are not distinct");
  }
  std::vector<bool> seen(atoms.size(), false);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto &block = blocks[b];
    const std::size_t min_size = strict ? 3 : 2;
    if (block.size() < min_size)
      throw InvalidDiagram("block " + std::to_string(b) + " has " +
                           std::to_string(block.size()) + " atoms, need " +
                           std::to_string(min_size));
    if (block.size() > kMaxBlockSize)
      throw CapExceeded("block size", block.size(), kMaxBlockSize);
    std::set<std::size_t> distinct;
    for (auto a : block) {
      if (a >= atoms.size())
        throw InvalidDiagram("block " + std::to_string(b) +
                             " references an unknown atom");
      if (!distinct.insert(a).second)
        throw InvalidDiagram("atom " + atoms[a] + " repeated within block " +
                             block_name(*this, b));
      seen[a] = true;
    }
  }
  for (std::size_t a = 0; a < atoms.size(); ++a)
    if (!seen[a])
      throw InvalidDiagram("atom " + atoms[a] + " lies in no block");

  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t c = b + 1; c < blocks.size(); ++c) {
      std::vector<std::size_t> shared;
      for (auto a : blocks[b])
        if (std::find(blocks[c].begin(), blocks[c].end(), a) != blocks[c].end())
          shared.push_back(a);
      if (shared.size() == std::min(blocks[b].size(), blocks[c].size()))
        throw InvalidDiagram("block " + block_name(*this, b) +
                             (blocks[b].size() <= blocks[c].size()
                                  ? " is contained in "
                                  : " contains ") +
                             block_name(*this, c));
      if (shared.size() >= 2)
        throw InvalidDiagram("blocks " + block_name(*this, b) + " and " +
                             block_name(*this, c) + " share atoms " +
                             atoms[shared[0]] + " and " + atoms[shared[1]]);
    }
  }
}

Pasting paste(const GreechieDiagram &d, PastingOptions options) {
  d.check(options.strict);
  const std::size_t atom_count = d.atoms.size();

  // Atoms under a' are all block-mates of a.
  std::vector<std::vector<std::size_t>> coatom_atoms(atom_count);
  for (std::size_t a = 0; a < atom_count; ++a) {
    std::set<std::size_t> mates;
    for (const auto &block : d.blocks)
      if (std::find(block.begin(), block.end(), a) != block.end())
        for (auto x : block)
          if (x != a)
            mates.insert(x);
    coatom_atoms[a].assign(mates.begin(), mates.end());
  }

  using Kind = PastedElement::Kind;
  // Elements other than the top are identified by their atom sets.
  std::map<std::vector<std::size_t>, PastedElement> by_atoms;
  auto intern = [&](Kind kind, std::vector<std::size_t> atoms,
                    std::size_t atom) -> const std::vector<std::size_t> & {
    auto it = by_atoms.try_emplace(atoms, PastedElement{kind, atoms, atom});
    return it.first->first;
  };
  using Key = std::vector<std::size_t>;
  static const Key kTopKey{static_cast<std::size_t>(-1)};

  // For every block and every subset X, the key of X and of block \ X.
  std::vector<std::pair<Key, Key>> complements;
  for (const auto &block : d.blocks) {
    const std::size_t size = block.size();
    const std::size_t full = (std::size_t{1} << size) - 1;
    std::vector<Key> keys(full + 1);
    for (std::size_t mask = 0; mask <= full; ++mask) {
      const auto members = static_cast<std::size_t>(std::popcount(mask));
      Key subset;
      for (std::size_t i = 0; i < size; ++i)
        if (mask & (std::size_t{1} << i))
          subset.push_back(block[i]);
      std::sort(subset.begin(), subset.end());
      if (mask == 0) {
        keys[mask] = intern(Kind::Bottom, {}, 0);
      } else if (mask == full) {
        keys[mask] = kTopKey;
      } else if (members == 1) {
        keys[mask] = intern(Kind::Atom, subset, subset[0]);
      } else if (members == size - 1) {
        const auto missing =
            block[static_cast<std::size_t>(std::countr_zero(~mask & full))];
        keys[mask] = intern(Kind::Coatom, coatom_atoms[missing], missing);
      } else {
        keys[mask] = intern(Kind::Middle, subset, 0);
      }
    }
    for (std::size_t mask = 0; mask <= full; ++mask)
      complements.emplace_back(keys[mask], keys[full ^ mask]);
  }

  auto rank = [](Kind k) {
    switch (k) {
    case Kind::Bottom:
      return 0;
    case Kind::Atom:
      return 1;
    case Kind::Middle:
      return 2;
    case Kind::Coatom:
      return 3;
    case Kind::Top:
      return 4;
    }
    return 4;
  };
  std::vector<PastedElement> elements;
  for (auto &[key, element] : by_atoms)
    elements.push_back(element);
  std::stable_sort(elements.begin(), elements.end(),
                   [&](const PastedElement &a, const PastedElement &b) {
                     if (rank(a.kind) != rank(b.kind))
                       return rank(a.kind) < rank(b.kind);
                     if (a.kind == Kind::Atom || a.kind == Kind::Coatom)
                       return a.atom < b.atom;
                     return a.atoms < b.atoms;
                   });
  {
    std::vector<std::size_t> all(atom_count);
    for (std::size_t a = 0; a < atom_count; ++a)
      all[a] = a;
    elements.push_back(PastedElement{Kind::Top, std::move(all), 0});
  }

  const std::size_t n = elements.size();
  const Element top = n - 1;
  std::map<Key, Element> index;
  for (Element i = 0; i < top; ++i)
    index[elements[i].atoms] = i;
  index[kTopKey] = top;

  OmlCandidate c;
  c.n = n;
  c.bottom = 0;
  c.top = top;
  c.leq.assign(n, BitSet(n));
  for (Element i = 0; i < n; ++i) {
    const auto &x = elements[i].atoms;
    for (Element j = 0; j < n; ++j) {
      const auto &y = elements[j].atoms;
      if (j == top || std::includes(y.begin(), y.end(), x.begin(), x.end()))
        c.leq[i].set(j);
    }
  }

  constexpr Element kUnset = static_cast<Element>(-1);
  c.comp.assign(n, kUnset);
  for (const auto &[x, y] : complements) {
    const Element i = index.at(x), j = index.at(y);
    if (c.comp[i] == kUnset) {
      c.comp[i] = j;
    } else if (c.comp[i] != j) {
      ValidationReport report;
      report.violations.push_back({"complement-consistent", c.comp[i], j});
      throw NotPastable(std::move(report));
    }
  }

  try {
    return Pasting{FiniteOml::from_candidate(std::move(c)),
                   std::move(elements)};
  } catch (const ValidationFailed &e) {
    throw NotPastable(e.report());
  }
}

} // namespace oml
