#include "oml/finite_oml.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace oml {

std::string ValidationReport::describe() const {
  if (violations.empty())
    return "ok";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i > 0)
      out << "; ";
    const auto &v = violations[i];
    out << v.axiom << " (" << v.first << ", " << v.second << ")";
  }
  return out.str();
}

void close_order(std::vector<BitSet> &leq) {
  const std::size_t n = leq.size();
  for (std::size_t i = 0; i < n; ++i)
    leq[i].set(i);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (i != k && leq[i].test(k))
        leq[i] |= leq[k];
}

namespace {

struct Tables {
  std::vector<std::uint16_t> join;
  std::vector<std::uint16_t> meet;
  std::vector<BitSet> geq;
};

class Checker {
public:
  Checker(const OmlCandidate &c, ValidationMode mode)
      : c_(c), fail_fast_(mode == ValidationMode::FailFast) {}

  ValidationReport run(Tables *tables);

private:
  // Returns true when validation must stop.
  bool add(const char *axiom, Element a, Element b) {
    report_.violations.push_back({axiom, a, b});
    return fail_fast_;
  }
  bool stopped() const { return fail_fast_ && !report_.ok(); }

  void check_shape() const;
  bool check_order();
  bool build_tables(Tables &t);
  bool check_orthocomplement(const Tables &t);

  const OmlCandidate &c_;
  bool fail_fast_;
  ValidationReport report_;
};

void Checker::check_shape() const {
  const std::size_t n = c_.n;
  if (n == 0)
    throw MalformedInput("element count must be positive");
  if (n > kMaxElements)
    throw CapExceeded("element count", n, kMaxElements);
  if (c_.leq.size() != n)
    throw MalformedInput("order matrix has " + std::to_string(c_.leq.size()) +
                         " rows, expected " + std::to_string(n));
  for (const auto &row : c_.leq)
    if (row.size() != n)
      throw MalformedInput("order matrix row has width " +
                           std::to_string(row.size()) + ", expected " +
                           std::to_string(n));
  if (c_.comp.size() != n)
    throw MalformedInput("complement map has " +
                         std::to_string(c_.comp.size()) + " entries, expected " +
                         std::to_string(n));
  if (c_.bottom >= n || c_.top >= n)
    throw MalformedInput("bound index out of range");
}

bool Checker::check_order() {
  const std::size_t n = c_.n;
  const auto &le = c_.leq;
  if (n == 1 || c_.bottom == c_.top)
    if (add("nontrivial", c_.bottom, c_.top))
      return false;
  for (Element i = 0; i < n; ++i)
    if (!le[i].test(i) && add("reflexive", i, i))
      return false;
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (le[i].test(j) && le[j].test(i) && add("antisymmetric", i, j))
        return false;
  // i <= j and j <= k imply i <= k, i.e. up(j) is inside up(i).
  for (Element i = 0; i < n; ++i) {
    bool bad = false;
    le[i].for_each([&](std::size_t j) {
      if (bad || j == i || le[j].is_subset_of(le[i]))
        return;
      le[j].for_each([&](std::size_t k) {
        if (!bad && !le[i].test(k) && add("transitive", i, k))
          bad = true;
      });
    });
    if (bad)
      return false;
  }
  for (Element i = 0; i < n; ++i) {
    if (!le[c_.bottom].test(i) && add("bounds", c_.bottom, i))
      return false;
    if (!le[i].test(c_.top) && add("bounds", i, c_.top))
      return false;
  }
  return report_.ok();
}

bool Checker::build_tables(Tables &t) {
  const std::size_t n = c_.n;
  t.geq.assign(n, BitSet(n));
  for (Element i = 0; i < n; ++i)
    c_.leq[i].for_each([&](std::size_t j) { t.geq[j].set(i); });

  // Sorting by down-set size gives a linear extension; in that order the
  // least upper bound is the first common upper bound and the greatest lower
  // bound the last common lower bound.
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return t.geq[a].count() < t.geq[b].count();
  });
  std::vector<std::size_t> pos(n);
  for (std::size_t p = 0; p < n; ++p)
    pos[order[p]] = p;

  std::vector<BitSet> up(n, BitSet(n)), down(n, BitSet(n));
  std::vector<std::size_t> up_count(n), down_count(n);
  for (Element i = 0; i < n; ++i) {
    c_.leq[i].for_each([&](std::size_t j) {
      up[pos[i]].set(pos[j]);
      down[pos[j]].set(pos[i]);
    });
  }
  for (std::size_t p = 0; p < n; ++p) {
    up_count[p] = up[p].count();
    down_count[p] = down[p].count();
  }

  t.join.assign(n * n, 0);
  t.meet.assign(n * n, 0);
  BitSet scratch(n);
  bool lattice = true;
  for (std::size_t p = 0; p < n; ++p) {
    const Element i = order[p];
    t.join[i * n + i] = static_cast<std::uint16_t>(i);
    t.meet[i * n + i] = static_cast<std::uint16_t>(i);
    for (std::size_t q = p + 1; q < n; ++q) {
      const Element j = order[q];

      scratch.assign_and(up[p], up[q]);
      std::size_t lub = scratch.first();
      if (lub == BitSet::npos || scratch.count() != up_count[lub]) {
        lattice = false;
        if (add("join-exists", std::min(i, j), std::max(i, j)))
          return false;
      } else {
        t.join[i * n + j] = t.join[j * n + i] =
            static_cast<std::uint16_t>(order[lub]);
      }

      scratch.assign_and(down[p], down[q]);
      std::size_t glb = scratch.last();
      if (glb == BitSet::npos || scratch.count() != down_count[glb]) {
        lattice = false;
        if (add("meet-exists", std::min(i, j), std::max(i, j)))
          return false;
      } else {
        t.meet[i * n + j] = t.meet[j * n + i] =
            static_cast<std::uint16_t>(order[glb]);
      }
    }
  }
  return lattice;
}

bool Checker::check_orthocomplement(const Tables &t) {
  const std::size_t n = c_.n;
  const auto &le = c_.leq;
  const auto &cp = c_.comp;
  auto join = [&](Element a, Element b) { return t.join[a * n + b]; };
  auto meet = [&](Element a, Element b) { return t.meet[a * n + b]; };

  for (Element i = 0; i < n; ++i)
    if (cp[i] >= n) {
      if (add("comp-range", i, cp[i]))
        return false;
    }
  if (!report_.ok())
    return false;

  for (Element i = 0; i < n; ++i)
    if (cp[cp[i]] != i && add("involution", i, cp[i]))
      return false;
  for (Element i = 0; i < n; ++i) {
    bool bad = false;
    le[i].for_each([&](std::size_t j) {
      if (!bad && !le[cp[j]].test(cp[i]) && add("order-reversing", i, j))
        bad = true;
    });
    if (bad)
      return false;
  }
  for (Element i = 0; i < n; ++i) {
    if (join(i, cp[i]) != c_.top && add("complement-join", i, cp[i]))
      return false;
    if (meet(i, cp[i]) != c_.bottom && add("complement-meet", i, cp[i]))
      return false;
  }
  for (Element i = 0; i < n; ++i) {
    bool bad = false;
    le[i].for_each([&](std::size_t j) {
      if (!bad && join(i, meet(j, cp[i])) != j && add("orthomodular", i, j))
        bad = true;
    });
    if (bad)
      return false;
  }
  return report_.ok();
}

ValidationReport Checker::run(Tables *tables) {
  check_shape();
  Tables local;
  Tables &t = tables != nullptr ? *tables : local;
  bool order_ok = check_order();
  if (stopped())
    return report_;
  // Order and lattice failures make the tables meaningless, but the
  // complement-map checks that do not need them still run in full mode.
  if (order_ok && build_tables(t)) {
    check_orthocomplement(t);
  } else if (!stopped()) {
    for (Element i = 0; i < c_.n; ++i)
      if (c_.comp[i] >= c_.n)
        add("comp-range", i, c_.comp[i]);
  }
  return report_;
}

} // namespace

ValidationReport validate_oml(const OmlCandidate &candidate,
                              ValidationMode mode) {
  return Checker(candidate, mode).run(nullptr);
}

FiniteOml FiniteOml::from_candidate(OmlCandidate candidate) {
  Tables t;
  auto report = Checker(candidate, ValidationMode::FailFast).run(&t);
  if (!report.ok())
    throw ValidationFailed(std::move(report));

  auto data = std::make_shared<Data>();
  data->n = candidate.n;
  data->leq = std::move(candidate.leq);
  data->geq = std::move(t.geq);
  data->comp = std::move(candidate.comp);
  data->bottom = candidate.bottom;
  data->top = candidate.top;
  data->join = std::move(t.join);
  data->meet = std::move(t.meet);
  data->atom.assign(data->n, false);
  for (Element i = 0; i < data->n; ++i)
    data->atom[i] = i != data->bottom && data->geq[i].count() == 2;
  return FiniteOml(std::move(data));
}

std::vector<Element> FiniteOml::atoms() const {
  std::vector<Element> out;
  for (Element i = 0; i < size(); ++i)
    if (is_atom(i))
      out.push_back(i);
  return out;
}

void FiniteOml::check_element(Element a) const {
  if (a >= size())
    throw MalformedInput("element " + std::to_string(a) +
                         " out of range for lattice of size " +
                         std::to_string(size()));
}

OmlCandidate FiniteOml::candidate() const {
  return OmlCandidate{data_->n, data_->leq, data_->comp, data_->bottom,
                      data_->top};
}

bool operator==(const FiniteOml &a, const FiniteOml &b) {
  if (a.data_ == b.data_)
    return true;
  return a.data_->n == b.data_->n && a.data_->bottom == b.data_->bottom &&
         a.data_->top == b.data_->top && a.data_->comp == b.data_->comp &&
         a.data_->leq == b.data_->leq;
}

} // namespace oml
