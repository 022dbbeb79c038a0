#include "oml/states.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace oml {

bool is_state(const FiniteOml &l, std::span<const Rational> values) {
  if (values.size() != l.size())
    return false;
  if (values[l.top()] != 1)
    return false;
  for (const auto &v : values)
    if (sgn(v) < 0 || v > 1)
      return false;
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = a; b < l.size(); ++b)
      if (l.orthogonal(a, b) && values[l.join(a, b)] != values[a] + values[b])
        return false;
  return true;
}

bool is_two_valued_state(const FiniteOml &l,
                         std::span<const std::uint8_t> values) {
  if (values.size() != l.size() || values[l.top()] != 1)
    return false;
  for (auto v : values)
    if (v > 1)
      return false;
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = a; b < l.size(); ++b)
      if (l.orthogonal(a, b) && values[l.join(a, b)] != values[a] + values[b])
        return false;
  return true;
}

RationalState RationalState::verified(FiniteOml lattice,
                                      std::vector<Rational> values) {
  if (!is_state(lattice, values))
    throw PreconditionViolated("values do not form a state");
  return RationalState(std::move(lattice), std::move(values));
}

TwoValuedState TwoValuedState::verified(FiniteOml lattice,
                                        std::vector<std::uint8_t> values) {
  if (!is_two_valued_state(lattice, values))
    throw PreconditionViolated("values do not form a two-valued state");
  return TwoValuedState(std::move(lattice), std::move(values));
}

std::vector<std::pair<Element, Element>> orthogonal_pairs(const FiniteOml &l) {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = a; b < l.size(); ++b)
      if (l.orthogonal(a, b))
        out.emplace_back(a, b);
  return out;
}

FeasibilitySystem state_constraints(const FiniteOml &l) {
  FeasibilitySystem sys;
  sys.variables = l.size();
  sys.equations.push_back({{{l.top(), Rational(1)}}, Rational(1)});
  for (auto [a, b] : orthogonal_pairs(l)) {
    LinearEquation eq;
    eq.terms = {{l.join(a, b), Rational(1)},
                {a, Rational(-1)},
                {b, Rational(-1)}};
    eq.rhs = 0;
    sys.equations.push_back(std::move(eq));
  }
  return sys;
}

StateExistence has_state(const FiniteOml &l) {
  auto outcome = lp_feasible(state_constraints(l));
  StateExistence result;
  if (auto *w = std::get_if<Witness>(&outcome))
    result.state = RationalState::verified(l, std::move(w->values));
  else
    result.certificate = std::get<InfeasibilityCertificate>(std::move(outcome));
  return result;
}

namespace {

// Backtracking over {0,1}-assignments with propagation on the constraints
// s(top) = 1 and s(a) + s(b) = s(a join b) for orthogonal a, b.
class TwoValuedSearch {
public:
  TwoValuedSearch(const FiniteOml &l, const TwoValuedQuery &query)
      : l_(l), query_(query), value_(l.size(), kFree),
        watch_(l.size()) {
    for (auto [a, b] : orthogonal_pairs(l)) {
      const std::size_t id = constraints_.size();
      constraints_.push_back({a, b, l.join(a, b)});
      for (Element v : {a, b, l.join(a, b)})
        if (watch_[v].empty() || watch_[v].back() != id)
          watch_[v].push_back(id);
    }
    order_.resize(l.size());
    std::iota(order_.begin(), order_.end(), Element{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Element x, Element y) {
      return watch_[x].size() > watch_[y].size();
    });
  }

  std::vector<TwoValuedState> run() {
    if (!assign(l_.top(), 1))
      return {};
    for (Element x : query_.force_one)
      if (!assign(x, 1))
        return {};
    for (Element x : query_.force_zero)
      if (!assign(x, 0))
        return {};
    if (!propagate())
      return {};
    search(0);
    return std::move(found_);
  }

private:
  static constexpr std::int8_t kFree = -1;

  struct Constraint {
    Element a, b, join;
  };

  bool done() const { return query_.limit && found_.size() >= *query_.limit; }

  bool assign(Element x, std::int8_t v) {
    if (value_[x] == kFree) {
      value_[x] = v;
      trail_.push_back(x);
      queue_.push_back(x);
      return true;
    }
    return value_[x] == v;
  }

  // Tuples (s_a, s_b, s_join) allowed by additivity and the current values.
  bool revise(const Constraint &c) {
    static constexpr std::array<std::array<std::int8_t, 3>, 3> kTuples{
        {{0, 0, 0}, {1, 0, 1}, {0, 1, 1}}};
    const std::array<Element, 3> vars{c.a, c.b, c.join};
    std::array<int, 3> seen0{}, seen1{};
    int allowed = 0;
    for (const auto &t : kTuples) {
      bool ok = true;
      for (int p = 0; p < 3 && ok; ++p) {
        if (value_[vars[p]] != kFree && value_[vars[p]] != t[p])
          ok = false;
        for (int q = 0; q < p && ok; ++q)
          if (vars[q] == vars[p] && t[q] != t[p])
            ok = false;
      }
      if (!ok)
        continue;
      ++allowed;
      for (int p = 0; p < 3; ++p)
        (t[p] == 0 ? seen0 : seen1)[p]++;
    }
    if (allowed == 0)
      return false;
    for (int p = 0; p < 3; ++p) {
      if (value_[vars[p]] != kFree)
        continue;
      if (seen1[p] == 0 && !assign(vars[p], 0))
        return false;
      if (seen0[p] == 0 && !assign(vars[p], 1))
        return false;
    }
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      const Element x = queue_.back();
      queue_.pop_back();
      for (auto id : watch_[x])
        if (!revise(constraints_[id])) {
          queue_.clear();
          return false;
        }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = kFree;
      trail_.pop_back();
    }
  }

  void search(std::size_t pos) {
    while (pos < order_.size() && value_[order_[pos]] != kFree)
      ++pos;
    if (pos == order_.size()) {
      std::vector<std::uint8_t> values(value_.begin(), value_.end());
      found_.push_back(TwoValuedState::verified(l_, std::move(values)));
      return;
    }
    const Element x = order_[pos];
    for (std::int8_t v : {std::int8_t{1}, std::int8_t{0}}) {
      if (done())
        return;
      const std::size_t mark = trail_.size();
      if (assign(x, v) && propagate())
        search(pos + 1);
      undo(mark);
    }
  }

  const FiniteOml &l_;
  const TwoValuedQuery &query_;
  std::vector<std::int8_t> value_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::size_t>> watch_;
  std::vector<Element> order_;
  std::vector<Element> trail_;
  std::vector<Element> queue_;
  std::vector<TwoValuedState> found_;
};

} // namespace

std::vector<TwoValuedState> two_valued_states(const FiniteOml &l,
                                              const TwoValuedQuery &query) {
  for (Element x : query.force_one)
    l.check_element(x);
  for (Element x : query.force_zero) {
    l.check_element(x);
    if (std::find(query.force_one.begin(), query.force_one.end(), x) !=
        query.force_one.end())
      throw PreconditionViolated("element " + std::to_string(x) +
                                 " forced to both 0 and 1");
  }
  if (query.limit && *query.limit == 0)
    return {};
  return TwoValuedSearch(l, query).run();
}

RationalState extend_state(const FiniteOml &l, const SubOml &sub,
                           const RationalState &s) {
  if (!(sub.parent() == l))
    throw PreconditionViolated("subOML does not belong to the lattice");
  if (s.values().size() != sub.size())
    throw PreconditionViolated("state is not defined on the subOML");
  if (!is_state(sub.as_oml(), s.values()))
    throw PreconditionViolated("values are not a state on the subOML");

  FeasibilitySystem sys = state_constraints(l);
  for (std::size_t k = 0; k < sub.size(); ++k)
    sys.equations.push_back({{{sub.members()[k], Rational(1)}}, s[k]});

  auto outcome = lp_feasible(sys);
  if (auto *cert = std::get_if<InfeasibilityCertificate>(&outcome)) {
    if (is_boolean(l))
      throw InternalInvariantViolation(
          "state on a Boolean subalgebra failed to extend");
    throw Infeasible(std::move(*cert));
  }
  auto extended =
      RationalState::verified(l, std::get<Witness>(std::move(outcome)).values);
  for (std::size_t k = 0; k < sub.size(); ++k)
    if (extended[sub.members()[k]] != s[k])
      throw InternalInvariantViolation("extension disagrees on the subOML");
  return extended;
}

bool is_prime_ideal(const FiniteOml &b, std::span<const Element> ideal) {
  BitSet mask(b.size());
  for (Element x : ideal) {
    if (x >= b.size())
      return false;
    mask.set(x);
  }
  for (Element x : ideal) {
    if (!b.down_set(x).is_subset_of(mask))
      return false;
    for (Element y : ideal)
      if (!mask.test(b.join(x, y)))
        return false;
  }
  for (Element x = 0; x < b.size(); ++x)
    if (mask.test(x) == mask.test(b.comp(x)))
      return false;
  return true;
}

std::vector<Element> prime_ideal_containing(const FiniteOml &b, Element a) {
  b.check_element(a);
  if (!is_boolean(b))
    throw NotBoolean("prime ideals are computed on Boolean algebras only");
  if (a == b.top())
    throw PreconditionViolated("the top element lies in no proper ideal");

  Element atom = b.size();
  for (Element r : b.atoms())
    if (b.leq(r, b.comp(a))) {
      atom = r;
      break;
    }
  if (atom == b.size())
    throw InternalInvariantViolation("no atom below the complement");

  std::vector<Element> ideal;
  for (Element x = 0; x < b.size(); ++x)
    if (!b.leq(atom, x))
      ideal.push_back(x);
  if (!is_prime_ideal(b, ideal) ||
      !std::binary_search(ideal.begin(), ideal.end(), a))
    throw InternalInvariantViolation("constructed set is not a prime ideal");
  return ideal;
}

bool order_determining(const FiniteOml &l,
                       std::span<const TwoValuedState> states) {
  for (const auto &s : states)
    if (!(s.lattice() == l))
      throw PreconditionViolated("state belongs to a different lattice");
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = 0; b < l.size(); ++b) {
      if (l.leq(a, b))
        continue;
      bool separated = std::any_of(states.begin(), states.end(),
                                   [&](const TwoValuedState &s) {
                                     return s[a] && !s[b];
                                   });
      if (!separated)
        return false;
    }
  return true;
}

bool is_set_representable(const FiniteOml &l, RepresentabilityOptions options) {
  if (l.size() > options.element_cap)
    throw CapExceeded("set-representability element count", l.size(),
                      options.element_cap);
  const auto states = two_valued_states(l);
  return order_determining(l, states);
}

} // namespace oml
