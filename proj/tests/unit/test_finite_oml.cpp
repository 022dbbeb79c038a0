#include <doctest.h>

#include "oml/oml.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace oml;

namespace {

OmlCandidate chain2() {
  OmlCandidate c;
  c.n = 2;
  c.leq = {BitSet(2), BitSet(2)};
  c.leq[0].set(0);
  c.leq[0].set(1);
  c.leq[1].set(1);
  c.comp = {1, 0};
  c.bottom = 0;
  c.top = 1;
  return c;
}

// 0 < a, b < 1 with a and b incomparable.
OmlCandidate diamond(std::vector<Element> comp) {
  OmlCandidate c;
  c.n = 4;
  c.leq.assign(4, BitSet(4));
  for (Element i = 0; i < 4; ++i) {
    c.leq[i].set(i);
    c.leq[0].set(i);
    c.leq[i].set(3);
  }
  c.comp = std::move(comp);
  c.bottom = 0;
  c.top = 3;
  return c;
}

bool has_violation(const ValidationReport &r, const std::string &axiom,
                   Element a, Element b) {
  for (const auto &v : r.violations)
    if (v.axiom == axiom && v.first == a && v.second == b)
      return true;
  return false;
}

} // namespace

TEST_CASE("two element lattice validates") {
  CHECK(validate_oml(chain2()).ok());
  auto l = FiniteOml::from_candidate(chain2());
  CHECK(l.size() == 2);
  CHECK(l.join(0, 1) == 1);
  CHECK(l.meet(0, 1) == 0);
  CHECK(l.is_atom(1));
}

TEST_CASE("diamond with fixed middle elements breaks the complement law") {
  auto report = validate_oml(diamond({3, 1, 2, 0}), ValidationMode::FullReport);
  CHECK_FALSE(report.ok());
  CHECK(has_violation(report, "complement-join", 1, 1));
  CHECK(has_violation(report, "complement-meet", 2, 2));
  CHECK_THROWS_AS(FiniteOml::from_candidate(diamond({3, 1, 2, 0})),
                  ValidationFailed);
  CHECK(validate_oml(diamond({3, 2, 1, 0})).ok());
}

TEST_CASE("fail fast stops at the first violation") {
  auto report = validate_oml(diamond({3, 1, 2, 0}), ValidationMode::FailFast);
  CHECK(report.violations.size() == 1);
}

TEST_CASE("one element candidate is rejected") {
  OmlCandidate c;
  c.n = 1;
  c.leq = {BitSet(1)};
  c.leq[0].set(0);
  c.comp = {0};
  auto report = validate_oml(c);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations[0].axiom == "nontrivial");
}

TEST_CASE("malformed candidates throw") {
  auto c = chain2();
  c.comp = {1};
  CHECK_THROWS_AS(validate_oml(c), MalformedInput);
  c = chain2();
  c.top = 5;
  CHECK_THROWS_AS(validate_oml(c), MalformedInput);
  c = chain2();
  c.leq.pop_back();
  CHECK_THROWS_AS(validate_oml(c), MalformedInput);
}

TEST_CASE("non-orthomodular benzene ring is caught") {
  // O6: 0 < a < b' < 1, 0 < b < a' < 1. The orthomodular law fails at a <= b'.
  OmlCandidate c;
  c.n = 6;
  c.leq.assign(6, BitSet(6));
  auto le = [&](Element i, Element j) { c.leq[i].set(j); };
  for (Element i = 0; i < 6; ++i) {
    le(i, i);
    le(0, i);
    le(i, 5);
  }
  // 1 = a, 2 = b, 3 = a', 4 = b'
  le(1, 4);
  le(2, 3);
  c.comp = {5, 3, 4, 1, 2, 0};
  c.bottom = 0;
  c.top = 5;
  auto report = validate_oml(c, ValidationMode::FullReport);
  CHECK_FALSE(report.ok());
  bool orthomodular = false;
  for (const auto &v : report.violations)
    orthomodular = orthomodular || v.axiom == "orthomodular";
  CHECK(orthomodular);
}

TEST_CASE("derived identities hold on every fixture") {
  for (const auto &[name, l] : fixtures::small_lattices()) {
    INFO(name);
    const oracle::Raw raw(l);
    for (Element i = 0; i < l.size(); ++i)
      for (Element j = 0; j < l.size(); ++j) {
        CHECK(l.leq(i, j) == (l.meet(i, j) == i));
        CHECK(l.comp(l.join(i, j)) == l.meet(l.comp(i), l.comp(j)));
        CHECK(l.join(i, j) == raw.join(i, j));
      }
  }
}

TEST_CASE("close_order computes the reflexive transitive closure") {
  std::vector<BitSet> leq(3, BitSet(3));
  leq[0].set(1);
  leq[1].set(2);
  close_order(leq);
  CHECK(leq[0].test(0));
  CHECK(leq[0].test(2));
  CHECK_FALSE(leq[2].test(0));
}
