#include <doctest.h>

#include "oml/oml.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace oml;

TEST_CASE("boolean algebras") {
  CHECK_THROWS_AS(boolean_algebra(0), ValidationFailed);
  CHECK(boolean_algebra(1).size() == 2);
  const auto b3 = boolean_algebra(3);
  CHECK(b3.size() == 8);
  CHECK(b3.leq(1, 3));
  CHECK(b3.comp(1) == 6);
  CHECK(blocks(b3).size() == 1);
  CHECK_THROWS_AS(boolean_algebra(13), CapExceeded);
}

TEST_CASE("mo") {
  CHECK(is_isomorphic(mo(1), boolean_algebra(2)));
  const auto m2 = mo(2);
  CHECK(m2.size() == 6);
  CHECK(m2.comp(1) == 2);
  CHECK(m2.comp(3) == 4);
  CHECK(mo(5).size() == 12);
  CHECK(blocks(mo(5)).size() == 5);
  CHECK_THROWS_AS(mo(0), MalformedInput);
}

TEST_CASE("horizontal sums") {
  const auto b2 = boolean_algebra(2), b3 = boolean_algebra(3);
  const std::vector<FiniteOml> one{b3};
  CHECK(horizontal_sum(one) == b3);
  const std::vector<FiniteOml> two{b2, b2};
  CHECK(horizontal_sum(two) == mo(2));
  const std::vector<FiniteOml> mixed{b3, b2};
  const auto h = horizontal_sum(mixed);
  CHECK(h.size() == 10);
  CHECK(centre(h).size() == 2);
  const std::vector<FiniteOml> with_trivial{b2, boolean_algebra(1), b2};
  CHECK(horizontal_sum(with_trivial).size() == 6);
  CHECK_THROWS_AS(horizontal_sum(std::vector<FiniteOml>{}), MalformedInput);
}

TEST_CASE("horizontal sums of several parts have trivial centre") {
  const std::vector<FiniteOml> parts{boolean_algebra(2), mo(2), boolean_algebra(3)};
  const auto h = horizontal_sum(parts);
  CHECK(h.size() == 4 + 6 + 8 - 4);
  CHECK(centre(h).size() == 2);
}

TEST_CASE("products") {
  const auto b3 = boolean_algebra(3);
  const std::vector<FiniteOml> one{b3};
  CHECK(product(one) == b3);
  const std::vector<FiniteOml> two{boolean_algebra(2), b3};
  CHECK(is_isomorphic(product(two), boolean_algebra(5)));
  const auto p = fixtures::two_by_mo2();
  CHECK(p.size() == 24);
  CHECK(centre(p).size() == 8);
  const std::vector<FiniteOml> big{boolean_algebra(7), boolean_algebra(6)};
  CHECK_THROWS_AS(product(big), CapExceeded);
}

TEST_CASE("boolean sums") {
  const auto m2 = mo(2);
  CHECK(is_isomorphic(boolean_sum(m2, boolean_algebra(1)), m2));
  const auto s = boolean_sum(m2, boolean_algebra(2));
  CHECK(s.size() == 36);
  const std::vector<FiniteOml> sq{m2, m2};
  CHECK(is_isomorphic(s, product(sq)));
  CHECK_THROWS_AS(boolean_sum(m2, m2), NotBoolean);
  CHECK_THROWS_AS(boolean_sum(m2, boolean_algebra(5)), CapExceeded);

  const std::vector<FiniteOml> parts{boolean_algebra(2), m2};
  const auto k = boolean_sum(horizontal_sum(parts), boolean_algebra(2));
  CHECK(is_isomorphic(centre(k).as_oml(), boolean_algebra(2)));
}

TEST_CASE("constructions are deterministic") {
  CHECK(serialize_oml(mo(3)) == serialize_oml(mo(3)));
  CHECK(serialize_oml(fixtures::two_by_mo2()) ==
        serialize_oml(fixtures::two_by_mo2()));
}

TEST_CASE("greechie pasting") {
  const auto one = GreechieDiagram::from_labels({{"a", "b", "c"}});
  CHECK(is_isomorphic(greechie_to_oml(one), boolean_algebra(3)));

  const auto two = fixtures::paste_file("two_blocks.gre");
  CHECK(two.size() == 12);
  CHECK(blocks(two).size() == 2);

  CHECK(is_isomorphic(fixtures::paste_file("mo2.gre"), mo(2)));
  CHECK_THROWS_AS(fixtures::paste_file("shared_pair.gre"), InvalidDiagram);
}

TEST_CASE("pasting element descriptions") {
  const auto p = paste(GreechieDiagram::from_labels({{"a", "b", "c"}, {"a", "d", "e"}}));
  REQUIRE(p.elements.size() == p.lattice.size());
  using Kind = PastedElement::Kind;
  CHECK(p.elements.front().kind == Kind::Bottom);
  CHECK(p.elements.back().kind == Kind::Top);
  std::size_t atoms = 0, coatoms = 0;
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    if (p.elements[i].kind == Kind::Atom) {
      ++atoms;
      CHECK(p.lattice.is_atom(i));
    }
    coatoms += p.elements[i].kind == Kind::Coatom;
  }
  CHECK(atoms == 5);
  CHECK(coatoms == 5);
  // a' lies above all four of a's block-mates.
  for (std::size_t i = 0; i < p.elements.size(); ++i)
    if (p.elements[i].kind == Kind::Coatom && p.elements[i].atom == 0)
      CHECK(p.elements[i].atoms.size() == 4);
}

TEST_CASE("diagram invariants") {
  CHECK_THROWS_AS(GreechieDiagram::from_labels({{"a", "b"}, {"a", "b", "c"}}),
                  InvalidDiagram);
  CHECK_THROWS_AS(GreechieDiagram::from_labels({{"a"}}), InvalidDiagram);
  CHECK_THROWS_AS(GreechieDiagram::from_labels({{"a", "b"}}, true),
                  InvalidDiagram);
  CHECK_THROWS_AS(GreechieDiagram::from_labels({{"a", "a", "b"}}), InvalidDiagram);
  CHECK_THROWS_AS(GreechieDiagram::from_labels({}), InvalidDiagram);
  try {
    fixtures::paste_file("shared_pair.gre");
    FAIL("expected InvalidDiagram");
  } catch (const InvalidDiagram &e) {
    const std::string what = e.what();
    CHECK(what.find("share atoms a and b") != std::string::npos);
  }
}

TEST_CASE("a triangle of blocks does not paste") {
  // Loop of order 3: a' and c' would need a join that the pasting lacks.
  const auto d = GreechieDiagram::from_labels(
      {{"a", "b", "c"}, {"c", "d", "e"}, {"e", "f", "a"}});
  CHECK_THROWS_AS(paste(d), NotPastable);
}

TEST_CASE("pasting then blocks recovers the diagram") {
  for (const auto *file : {"two_blocks.gre", "mo2.gre"}) {
    INFO(file);
    const auto d = parse_greechie(fixtures::read(file));
    const auto p = paste(d);
    std::set<std::vector<std::size_t>> expected, found;
    for (auto block : d.blocks) {
      std::sort(block.begin(), block.end());
      expected.insert(block);
    }
    for (const auto &b : blocks(p.lattice)) {
      std::vector<std::size_t> atoms;
      for (auto e : b.members())
        if (p.elements[e].kind == PastedElement::Kind::Atom)
          atoms.push_back(p.elements[e].atom);
      std::sort(atoms.begin(), atoms.end());
      found.insert(atoms);
    }
    CHECK(found == expected);
  }
}

TEST_CASE("stateless fixture pastes") {
  const auto d = parse_greechie(fixtures::read("stateless.gre"));
  CHECK(d.atoms.size() == 36);
  CHECK(d.blocks.size() == 21);
  const auto l = greechie_to_oml(d);
  CHECK(l.size() == 128);
  CHECK(blocks(l).size() == 21);
}
