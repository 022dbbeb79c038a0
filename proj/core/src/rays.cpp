#include "oml/rays.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "oml/errors.hpp"

namespace oml {

namespace {

using RationalRow = std::vector<Rational>;

// Reduced row echelon form in place; returns pivot columns of the nonzero
// rows, which are moved to the front.
std::vector<std::size_t> rref(std::vector<RationalRow> &m) {
  std::vector<std::size_t> pivots;
  if (m.empty())
    return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0)
      ++sel;
    if (sel == m.size())
      continue;
    std::swap(m[row], m[sel]);
    const Rational lead = m[row][col];
    for (auto &x : m[row])
      x /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0)
        continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < cols; ++c)
        m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Null space basis of an r x cols matrix already in reduced row echelon form.
std::vector<RationalRow> null_space(const std::vector<RationalRow> &reduced,
                                    const std::vector<std::size_t> &pivots,
                                    std::size_t cols) {
  std::vector<RationalRow> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end())
      continue;
    RationalRow v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -reduced[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

IntegerVector primitive(const RationalRow &row) {
  mpz_class den = 1;
  for (const auto &x : row)
    den = lcm(den, x.get_den());
  IntegerVector v;
  mpz_class g = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    Rational scaled = row[i] * den;
    v[i] = scaled.get_num();
    g = gcd(g, v[i]);
  }
  for (auto &x : v)
    x /= g;
  return v;
}

RationalRow to_rational(const IntegerVector &v) {
  return {Rational(v[0]), Rational(v[1]), Rational(v[2])};
}

} // namespace

RationalVector parse_rational_vector(const std::string &text) {
  RationalVector out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto comma = text.find(',', start);
    if ((i < 2) == (comma == std::string::npos))
      throw MalformedInput("expected three comma-separated components: '" +
                           text + "'");
    out[i] = parse_rational(text.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

RationalSubspace RationalSubspace::span_of(
    std::span<const RationalVector> vectors) {
  std::vector<RationalRow> m;
  for (const auto &v : vectors)
    m.push_back({v[0], v[1], v[2]});
  rref(m);
  // RREF rows have leading entry 1, so the primitive scaling keeps it
  // positive and the form stays unique.
  std::vector<IntegerVector> basis;
  for (const auto &row : m)
    basis.push_back(primitive(row));
  return RationalSubspace(std::move(basis));
}

RationalSubspace RationalSubspace::full() {
  const std::array<RationalVector, 3> e{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  return span_of(e);
}

RationalSubspace RationalSubspace::ortho() const {
  std::vector<RationalRow> m;
  for (const auto &v : basis_)
    m.push_back(to_rational(v));
  auto pivots = rref(m);
  std::vector<RationalVector> ns;
  for (const auto &v : null_space(m, pivots, 3))
    ns.push_back({v[0], v[1], v[2]});
  return span_of(ns);
}

RationalSubspace RationalSubspace::join(const RationalSubspace &other) const {
  std::vector<RationalVector> all;
  for (const auto *s : {this, &other})
    for (const auto &v : s->basis_)
      all.push_back({Rational(v[0]), Rational(v[1]), Rational(v[2])});
  return span_of(all);
}

RationalSubspace RationalSubspace::meet(const RationalSubspace &other) const {
  if (dim() == 0)
    return *this;
  // x = sum c_i s_i lies in `other` iff it is orthogonal to other's
  // complement; solve for the coefficient vectors c.
  const auto constraints = other.ortho().basis_;
  if (constraints.empty())
    return *this;
  std::vector<RationalRow> m;
  for (const auto &w : constraints) {
    RationalRow row;
    for (const auto &s : basis_) {
      mpz_class dot = w[0] * s[0] + w[1] * s[1] + w[2] * s[2];
      row.push_back(Rational(dot));
    }
    m.push_back(std::move(row));
  }
  auto pivots = rref(m);
  std::vector<RationalVector> vectors;
  for (const auto &c : null_space(m, pivots, dim())) {
    RationalVector x{0, 0, 0};
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t k = 0; k < 3; ++k)
        x[k] += c[i] * basis_[i][k];
    vectors.push_back(x);
  }
  return span_of(vectors);
}

bool RationalSubspace::contains(const RationalSubspace &other) const {
  if (other.dim() > dim())
    return false;
  for (const auto &w : ortho().basis_)
    for (const auto &v : other.basis_)
      if (w[0] * v[0] + w[1] * v[1] + w[2] * v[2] != 0)
        return false;
  return true;
}

std::string RationalSubspace::to_string() const {
  std::ostringstream out;
  out << dim();
  for (const auto &v : basis_)
    out << "; " << v[0] << ',' << v[1] << ',' << v[2];
  return out.str();
}

bool operator<(const RationalSubspace &a, const RationalSubspace &b) {
  if (a.dim() != b.dim())
    return a.dim() < b.dim();
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t k = 0; k < 3; ++k)
      if (a.basis_[r][k] != b.basis_[r][k])
        return a.basis_[r][k] < b.basis_[r][k];
  return false;
}

RayClosureResult ray_closure(std::span<const RationalSubspace> gens,
                             std::size_t cap) {
  if (cap < gens.size() + 2)
    throw PreconditionViolated("closure cap " + std::to_string(cap) +
                               " is below the generator count plus two");
  std::vector<RationalSubspace> list;
  std::set<RationalSubspace> seen;
  auto push = [&](RationalSubspace s) {
    if (seen.insert(s).second)
      list.push_back(std::move(s));
    return list.size() <= cap;
  };
  push(RationalSubspace());
  push(RationalSubspace::full());
  for (const auto &g : gens)
    push(g);

  for (std::size_t k = 0; k < list.size(); ++k) {
    if (!push(list[k].ortho()))
      return ClosureCapReached{list.size(), cap};
    for (std::size_t j = 0; j <= k; ++j) {
      if (!push(list[k].join(list[j])) || !push(list[k].meet(list[j])))
        return ClosureCapReached{list.size(), cap};
    }
  }
  return ClosedFamily{std::move(list)};
}

std::vector<RationalSubspace> canonical_order(const ClosedFamily &family) {
  auto sorted = family.members;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return sorted;
}

FiniteOml as_finite_oml(const ClosedFamily &family) {
  const auto members = canonical_order(family);
  const std::size_t n = members.size();
  auto index_of = [&](const RationalSubspace &s) {
    auto it = std::lower_bound(members.begin(), members.end(), s);
    if (it == members.end() || !(*it == s))
      throw InternalInvariantViolation("subspace family is not closed: " +
                                       s.to_string() + " missing");
    return static_cast<Element>(it - members.begin());
  };

  OmlCandidate c;
  c.n = n;
  c.leq.assign(n, BitSet(n));
  c.comp.resize(n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j)
      if (members[j].contains(members[i]))
        c.leq[i].set(j);
    c.comp[i] = index_of(members[i].ortho());
  }
  c.bottom = index_of(RationalSubspace());
  c.top = index_of(RationalSubspace::full());
  try {
    return FiniteOml::from_candidate(std::move(c));
  } catch (const ValidationFailed &e) {
    throw InternalInvariantViolation(std::string("subspace family: ") +
                                     e.what());
  }
}

} // namespace oml
