#include "oml/algorithms.hpp"

#include <algorithm>
#include <functional>

namespace oml {

namespace {

// Above this size distributivity is established through pairwise
// compatibility instead of enumerating every triple.
constexpr std::size_t kTripleCheckLimit = 256;

// Extends `list`/`mask` (already closed when `processed` == list.size()) to
// the closure of everything in it.
void close_worklist(const FiniteOml &l, std::vector<Element> &list,
                    BitSet &mask, std::size_t processed) {
  auto push = [&](Element x) {
    if (!mask.test(x)) {
      mask.set(x);
      list.push_back(x);
    }
  };
  for (std::size_t k = processed; k < list.size(); ++k) {
    const Element x = list[k];
    push(l.comp(x));
    for (std::size_t j = 0; j <= k; ++j) {
      push(l.join(x, list[j]));
      push(l.meet(x, list[j]));
    }
  }
}

bool pairwise_compatible(const FiniteOml &l, std::span<const Element> members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!compatible(l, members[i], members[j]))
        return false;
  return true;
}

bool boolean_members(const FiniteOml &l, std::span<const Element> members) {
  if (members.size() <= kTripleCheckLimit)
    return is_distributive(l, members);
  return pairwise_compatible(l, members);
}

} // namespace

SubOml SubOml::verified(FiniteOml parent, const BitSet &members) {
  if (members.size() != parent.size())
    throw MalformedInput("member mask size does not match lattice");
  if (!is_closed(parent, members))
    throw InternalInvariantViolation("element set is not a subOML");
  return SubOml(std::move(parent), members);
}

FiniteOml SubOml::as_oml() const {
  const std::size_t k = members_.size();
  std::vector<std::size_t> index(parent_.size(), 0);
  for (std::size_t i = 0; i < k; ++i)
    index[members_[i]] = i;
  OmlCandidate c;
  c.n = k;
  c.leq.assign(k, BitSet(k));
  c.comp.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      if (parent_.leq(members_[i], members_[j]))
        c.leq[i].set(j);
    c.comp[i] = index[parent_.comp(members_[i])];
  }
  c.bottom = index[parent_.bottom()];
  c.top = index[parent_.top()];
  return FiniteOml::from_candidate(std::move(c));
}

bool is_closed(const FiniteOml &l, const BitSet &members) {
  if (!members.test(l.bottom()) || !members.test(l.top()))
    return false;
  const auto list = members.indices();
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (!members.test(l.comp(list[i])))
      return false;
    for (std::size_t j = i + 1; j < list.size(); ++j)
      if (!members.test(l.join(list[i], list[j])) ||
          !members.test(l.meet(list[i], list[j])))
        return false;
  }
  return true;
}

bool is_distributive(const FiniteOml &l, std::span<const Element> members) {
  for (Element a : members)
    for (Element b : members)
      for (Element c : members)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
          return false;
  return true;
}

bool compatible(const FiniteOml &l, Element a, Element b) {
  l.check_element(a);
  l.check_element(b);
  return a == l.join(l.meet(a, b), l.meet(a, l.comp(b)));
}

SubOml centre(const FiniteOml &l) {
  const std::size_t n = l.size();
  BitSet mask(n);
  for (Element a = 0; a < n; ++a) {
    bool central = true;
    for (Element b = 0; b < n && central; ++b)
      central = compatible(l, a, b);
    if (central)
      mask.set(a);
  }
  auto result = SubOml::verified(l, mask);
  if (!boolean_members(l, result.members()))
    throw InternalInvariantViolation("centre is not Boolean");
  return result;
}

bool is_boolean(const FiniteOml &l) { return centre(l).size() == l.size(); }

std::vector<SubOml> blocks(const FiniteOml &l) {
  const std::size_t n = l.size();
  std::vector<BitSet> adj(n, BitSet(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (compatible(l, a, b)) {
        adj[a].set(b);
        adj[b].set(a);
      }

  // Bron-Kerbosch with pivoting; every element is compatible with itself,
  // so the clique R is extended only through neighbours.
  std::vector<BitSet> cliques;
  std::function<void(BitSet, BitSet, BitSet)> expand = [&](BitSet r, BitSet p,
                                                           BitSet x) {
    if (p.none() && x.none()) {
      cliques.push_back(r);
      return;
    }
    std::size_t pivot = BitSet::npos, best = 0;
    (p | x).for_each([&](std::size_t u) {
      std::size_t c = (p & adj[u]).count();
      if (pivot == BitSet::npos || c > best) {
        pivot = u;
        best = c;
      }
    });
    BitSet candidates = p;
    adj[pivot].for_each([&](std::size_t v) { candidates.reset(v); });
    candidates.for_each([&](std::size_t v) {
      BitSet r2 = r;
      r2.set(v);
      expand(r2, p & adj[v], x & adj[v]);
      p.reset(v);
      x.set(v);
    });
  };
  BitSet all(n);
  for (Element a = 0; a < n; ++a)
    all.set(a);
  expand(BitSet(n), all, BitSet(n));

  std::vector<SubOml> out;
  out.reserve(cliques.size());
  BitSet covered(n);
  for (const auto &clique : cliques) {
    if (!is_closed(l, clique))
      throw InternalInvariantViolation(
          "maximal compatible set is not closed under the lattice operations");
    auto block = SubOml::verified(l, clique);
    if (!boolean_members(l, block.members()))
      throw InternalInvariantViolation("maximal compatible set is not Boolean");
    covered |= clique;
    out.push_back(std::move(block));
  }
  if (covered.count() != n)
    throw InternalInvariantViolation("blocks do not cover the lattice");
  std::sort(out.begin(), out.end(), [](const SubOml &a, const SubOml &b) {
    return a.members() < b.members();
  });
  return out;
}

SubOml generate_suboml(const FiniteOml &l,
                       std::span<const Element> generators) {
  BitSet mask(l.size());
  std::vector<Element> list;
  auto push = [&](Element x) {
    l.check_element(x);
    if (!mask.test(x)) {
      mask.set(x);
      list.push_back(x);
    }
  };
  push(l.bottom());
  push(l.top());
  for (Element g : generators)
    push(g);
  close_worklist(l, list, mask, 0);
  return SubOml::verified(l, mask);
}

MinGenerators min_generators(const FiniteOml &l,
                             GeneratorSearchOptions options) {
  const std::size_t n = l.size();
  if (n > options.element_cap)
    throw CapExceeded("min_generators element count", n, options.element_cap);

  // x and x' generate the same closure together with anything else, so only
  // the smaller index of each complementary pair is a candidate.
  std::vector<Element> candidates;
  for (Element x = 0; x < n; ++x)
    if (x != l.bottom() && x != l.top() && x < l.comp(x))
      candidates.push_back(x);

  std::vector<Element> base{l.bottom(), l.top()};
  BitSet base_mask(n);
  base_mask.set(l.bottom());
  base_mask.set(l.top());
  close_worklist(l, base, base_mask, 0);

  std::vector<Element> chosen;
  // Depth-first over increasing candidate indices. An element already inside
  // the closure of the chosen prefix can never be part of a minimum set.
  std::function<bool(std::size_t, std::size_t, const std::vector<Element> &,
                     const BitSet &)>
      search = [&](std::size_t start, std::size_t remaining,
                   const std::vector<Element> &list, const BitSet &mask) {
        if (remaining == 0)
          return list.size() == n;
        for (std::size_t i = start; i + remaining <= candidates.size(); ++i) {
          const Element x = candidates[i];
          if (mask.test(x))
            continue;
          std::vector<Element> next_list = list;
          BitSet next_mask = mask;
          const std::size_t processed = next_list.size();
          next_list.push_back(x);
          next_mask.set(x);
          close_worklist(l, next_list, next_mask, processed);
          chosen.push_back(x);
          if (search(i + 1, remaining - 1, next_list, next_mask))
            return true;
          chosen.pop_back();
        }
        return false;
      };

  for (std::size_t m = 0; m <= candidates.size(); ++m) {
    chosen.clear();
    if (search(0, m, base, base_mask)) {
      MinGenerators result;
      result.count = m;
      result.witness = chosen;
      result.cf = n - m;
      return result;
    }
  }
  throw InternalInvariantViolation("no generating set found");
}

OmlHom OmlHom::make(FiniteOml source, FiniteOml target,
                    std::vector<Element> map) {
  const std::size_t n = source.size();
  if (map.size() != n)
    throw MalformedInput("hom map length " + std::to_string(map.size()) +
                         " does not match source size " + std::to_string(n));
  for (Element x : map)
    target.check_element(x);
  if (map[source.top()] != target.top())
    throw MalformedInput("hom does not preserve top");
  for (Element a = 0; a < n; ++a) {
    if (map[source.comp(a)] != target.comp(map[a]))
      throw MalformedInput("hom does not preserve comp at " +
                           std::to_string(a));
    for (Element b = a + 1; b < n; ++b)
      if (map[source.join(a, b)] != target.join(map[a], map[b]))
        throw MalformedInput("hom does not preserve join at (" +
                             std::to_string(a) + ", " + std::to_string(b) +
                             ")");
  }
  // Meets and bottom follow by De Morgan.
  if (map[source.bottom()] != target.bottom())
    throw InternalInvariantViolation("hom does not preserve bottom");
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (map[source.meet(a, b)] != target.meet(map[a], map[b]))
        throw InternalInvariantViolation("hom does not preserve meet");
  return OmlHom(std::move(source), std::move(target), std::move(map));
}

bool OmlHom::is_bijective() const {
  if (source_.size() != target_.size())
    return false;
  BitSet seen(target_.size());
  for (Element x : map_) {
    if (seen.test(x))
      return false;
    seen.set(x);
  }
  return true;
}

SubOml hom_image(const OmlHom &h) {
  BitSet mask(h.target().size());
  for (Element x : h.map())
    mask.set(x);
  return SubOml::verified(h.target(), mask);
}

SubOml hom_image(const OmlHom &h, const SubOml &domain) {
  if (!(domain.parent() == h.source()))
    throw MalformedInput("subOML does not belong to the hom's source");
  BitSet mask(h.target().size());
  for (Element x : domain.members())
    mask.set(h(x));
  return SubOml::verified(h.target(), mask);
}

} // namespace oml
