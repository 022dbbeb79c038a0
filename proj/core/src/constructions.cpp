#include "oml/constructions.hpp"

#include "oml/algorithms.hpp"

namespace oml {

FiniteOml boolean_algebra(std::size_t k, std::size_t cap) {
  if (k > cap)
    throw CapExceeded("Boolean algebra atom count", k, cap);
  const std::size_t n = std::size_t{1} << k;
  const std::size_t full = n - 1;
  OmlCandidate c;
  c.n = n;
  c.leq.assign(n, BitSet(n));
  c.comp.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if ((i & j) == i)
        c.leq[i].set(j);
    c.comp[i] = full ^ i;
  }
  c.bottom = 0;
  c.top = full;
  return FiniteOml::from_candidate(std::move(c));
}

FiniteOml mo(std::size_t k) {
  if (k == 0)
    throw MalformedInput("MO_k needs k >= 1");
  std::vector<FiniteOml> parts(k, boolean_algebra(2));
  return horizontal_sum(parts);
}

FiniteOml horizontal_sum(std::span<const FiniteOml> parts) {
  if (parts.empty())
    throw MalformedInput("horizontal sum of no parts");

  // index[p][x] = index of element x of part p in the sum.
  std::vector<std::vector<Element>> index(parts.size());
  std::size_t n = 1;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto &part = parts[p];
    index[p].assign(part.size(), 0);
    for (Element x = 0; x < part.size(); ++x)
      if (x != part.bottom() && x != part.top())
        index[p][x] = n++;
  }
  const Element top = n++;
  for (std::size_t p = 0; p < parts.size(); ++p)
    index[p][parts[p].top()] = top;

  OmlCandidate c;
  c.n = n;
  c.leq.assign(n, BitSet(n));
  c.comp.assign(n, 0);
  c.bottom = 0;
  c.top = top;
  c.comp[0] = top;
  c.comp[top] = 0;
  for (Element i = 0; i < n; ++i) {
    c.leq[0].set(i);
    c.leq[i].set(top);
  }
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto &part = parts[p];
    for (Element x = 0; x < part.size(); ++x) {
      if (x == part.bottom() || x == part.top())
        continue;
      c.comp[index[p][x]] = index[p][part.comp(x)];
      part.up_set(x).for_each(
          [&](std::size_t y) { c.leq[index[p][x]].set(index[p][y]); });
    }
  }
  return FiniteOml::from_candidate(std::move(c));
}

FiniteOml product(std::span<const FiniteOml> parts, std::size_t cap) {
  if (parts.empty())
    throw MalformedInput("product of no parts");
  std::size_t n = 1;
  for (const auto &p : parts) {
    if (n * p.size() > cap)
      throw CapExceeded("product size", n * p.size(), cap);
    n *= p.size();
  }

  // Digits of index i, first factor most significant.
  std::vector<std::vector<Element>> digits(n, std::vector<Element>(parts.size()));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rest = i;
    for (std::size_t f = parts.size(); f-- > 0;) {
      digits[i][f] = rest % parts[f].size();
      rest /= parts[f].size();
    }
  }
  auto encode = [&](auto &&digit_of) {
    std::size_t idx = 0;
    for (std::size_t f = 0; f < parts.size(); ++f)
      idx = idx * parts[f].size() + digit_of(f);
    return idx;
  };

  OmlCandidate c;
  c.n = n;
  c.leq.assign(n, BitSet(n));
  c.comp.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool le = true;
      for (std::size_t f = 0; f < parts.size() && le; ++f)
        le = parts[f].leq(digits[i][f], digits[j][f]);
      if (le)
        c.leq[i].set(j);
    }
    c.comp[i] =
        encode([&](std::size_t f) { return parts[f].comp(digits[i][f]); });
  }
  c.bottom = encode([&](std::size_t f) { return parts[f].bottom(); });
  c.top = encode([&](std::size_t f) { return parts[f].top(); });
  return FiniteOml::from_candidate(std::move(c));
}

FiniteOml boolean_sum(const FiniteOml &l, const FiniteOml &b, std::size_t cap) {
  if (!is_boolean(b))
    throw NotBoolean("second argument of a Boolean sum must be Boolean");
  const std::size_t k = b.atoms().size();
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n * l.size() > cap)
      throw CapExceeded("Boolean sum size", n * l.size(), cap);
    n *= l.size();
  }

  // Element i is the function atom_t -> value(i, t), atoms in index order,
  // the first atom most significant.
  const std::size_t m = l.size();
  std::vector<std::vector<Element>> fn(n, std::vector<Element>(k));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rest = i;
    for (std::size_t t = k; t-- > 0;) {
      fn[i][t] = rest % m;
      rest /= m;
    }
  }
  auto index_of = [&](const std::vector<Element> &f) {
    std::size_t idx = 0;
    for (Element v : f)
      idx = idx * m + v;
    return idx;
  };

  OmlCandidate c;
  c.n = n;
  c.leq.assign(n, BitSet(n));
  c.comp.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool le = true;
      for (std::size_t t = 0; t < k && le; ++t)
        le = l.leq(fn[i][t], fn[j][t]);
      if (le)
        c.leq[i].set(j);
    }
    std::vector<Element> pointwise(k);
    for (std::size_t t = 0; t < k; ++t)
      pointwise[t] = l.comp(fn[i][t]);
    c.comp[i] = index_of(pointwise);
  }
  c.bottom = index_of(std::vector<Element>(k, l.bottom()));
  c.top = index_of(std::vector<Element>(k, l.top()));
  return FiniteOml::from_candidate(std::move(c));
}

} // namespace oml
