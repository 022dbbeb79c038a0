#include "oml/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace oml {

namespace {

using Colouring = std::vector<std::size_t>;

// Colours for both lattices drawn from one shared palette so that equal
// colours mean equal invariants across the two.
std::pair<Colouring, Colouring> joint_colouring(const FiniteOml &a,
                                                const FiniteOml &b) {
  using Initial = std::tuple<std::size_t, std::size_t, bool, bool, bool>;
  std::map<Initial, std::size_t> palette0;
  auto initial = [&](const FiniteOml &l) {
    Colouring c(l.size());
    for (Element x = 0; x < l.size(); ++x) {
      Initial key{l.up_set(x).count(), l.down_set(x).count(), l.is_atom(x),
                  x == l.bottom(), x == l.top()};
      c[x] = palette0.try_emplace(key, palette0.size()).first->second;
    }
    return c;
  };
  Colouring ca = initial(a), cb = initial(b);
  std::size_t colours = palette0.size();

  using Refined = std::tuple<std::size_t, std::size_t, std::vector<std::size_t>,
                             std::vector<std::size_t>>;
  while (true) {
    std::map<Refined, std::size_t> palette;
    auto refine = [&](const FiniteOml &l, const Colouring &c) {
      Colouring next(l.size());
      for (Element x = 0; x < l.size(); ++x) {
        std::vector<std::size_t> up, down;
        l.up_set(x).for_each([&](std::size_t y) { up.push_back(c[y]); });
        l.down_set(x).for_each([&](std::size_t y) { down.push_back(c[y]); });
        std::sort(up.begin(), up.end());
        std::sort(down.begin(), down.end());
        Refined key{c[x], c[l.comp(x)], std::move(up), std::move(down)};
        next[x] = palette.try_emplace(std::move(key), palette.size())
                      .first->second;
      }
      return next;
    };
    Colouring na = refine(a, ca), nb = refine(b, cb);
    ca = std::move(na);
    cb = std::move(nb);
    if (palette.size() == colours)
      break;
    colours = palette.size();
  }
  return {std::move(ca), std::move(cb)};
}

class Matcher {
public:
  Matcher(const FiniteOml &a, const FiniteOml &b, Colouring ca, Colouring cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
        fwd_(a.size(), kUnmapped), used_(b.size(), false) {
    std::vector<std::size_t> class_size(a.size() + b.size() + 1, 0);
    for (auto c : ca_)
      ++class_size[c];
    order_.resize(a.size());
    for (Element x = 0; x < a.size(); ++x)
      order_[x] = x;
    std::stable_sort(order_.begin(), order_.end(), [&](Element x, Element y) {
      return class_size[ca_[x]] < class_size[ca_[y]];
    });
  }

  bool solve() { return extend(0); }
  std::vector<Element> mapping() const { return fwd_; }

private:
  static constexpr Element kUnmapped = static_cast<Element>(-1);

  bool consistent(Element x, Element y) const {
    if (ca_[x] != cb_[y] || used_[y])
      return false;
    for (Element m : mapped_) {
      const Element my = fwd_[m];
      if (a_.leq(x, m) != b_.leq(y, my) || a_.leq(m, x) != b_.leq(my, y))
        return false;
    }
    return true;
  }

  void bind(Element x, Element y) {
    fwd_[x] = y;
    used_[y] = true;
    mapped_.push_back(x);
  }

  void unbind(Element x) {
    used_[fwd_[x]] = false;
    fwd_[x] = kUnmapped;
    mapped_.pop_back();
  }

  bool extend(std::size_t depth) {
    while (depth < order_.size() && fwd_[order_[depth]] != kUnmapped)
      ++depth;
    if (depth == order_.size())
      return true;
    const Element x = order_[depth];
    const Element xc = a_.comp(x);
    for (Element y = 0; y < b_.size(); ++y) {
      if (!consistent(x, y))
        continue;
      bind(x, y);
      const Element yc = b_.comp(y);
      if (consistent(xc, yc)) {
        bind(xc, yc);
        if (extend(depth + 1))
          return true;
        unbind(xc);
      }
      unbind(x);
    }
    return false;
  }

  const FiniteOml &a_;
  const FiniteOml &b_;
  Colouring ca_, cb_;
  std::vector<Element> order_;
  std::vector<Element> fwd_;
  std::vector<bool> used_;
  std::vector<Element> mapped_;
};

} // namespace

std::optional<OmlHom> find_isomorphism(const FiniteOml &a, const FiniteOml &b,
                                       IsomorphismOptions options) {
  const std::size_t biggest = std::max(a.size(), b.size());
  if (biggest > options.element_cap)
    throw CapExceeded("isomorphism search element count", biggest,
                      options.element_cap);
  if (a.size() != b.size())
    return std::nullopt;

  auto [ca, cb] = joint_colouring(a, b);
  auto histogram = [](const Colouring &c) {
    auto sorted = c;
    std::sort(sorted.begin(), sorted.end());
    return sorted;
  };
  if (histogram(ca) != histogram(cb))
    return std::nullopt;

  Matcher matcher(a, b, std::move(ca), std::move(cb));
  if (!matcher.solve())
    return std::nullopt;
  return OmlHom::make(a, b, matcher.mapping());
}

} // namespace oml
