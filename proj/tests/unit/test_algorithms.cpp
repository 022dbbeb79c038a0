#include <doctest.h>

#include <random>

#include "oml/oml.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace oml;

namespace {

std::vector<Element> all_of(const FiniteOml &l) {
  std::vector<Element> out(l.size());
  for (Element i = 0; i < l.size(); ++i)
    out[i] = i;
  return out;
}

} // namespace

TEST_CASE("compatibility") {
  const auto m = mo(2); // 0, a, a', b, b', 1
  for (Element x = 0; x < m.size(); ++x) {
    CHECK(compatible(m, x, m.comp(x)));
    for (Element y = 0; y < m.size(); ++y)
      if (m.leq(x, y))
        CHECK(compatible(m, x, y));
  }
  CHECK_FALSE(compatible(m, 1, 3));
  CHECK_THROWS_AS(compatible(m, 0, 6), MalformedInput);
}

TEST_CASE("centre") {
  CHECK(centre(boolean_algebra(3)).size() == 8);
  CHECK(centre(mo(2)).members() == std::vector<Element>{0, 5});

  const auto p = fixtures::two_by_mo2();
  const auto c = centre(p);
  CHECK(c.size() == 8);
  CHECK(c.members() == oracle::centre(oracle::Raw(p)));
  CHECK(is_boolean(c.as_oml()));
}

TEST_CASE("centre matches the oracle on every fixture") {
  for (const auto &[name, l] : fixtures::small_lattices()) {
    INFO(name);
    const auto c = centre(l);
    CHECK(c.members() == oracle::centre(oracle::Raw(l)));
    CHECK(is_distributive(l, c.members()));
  }
}

TEST_CASE("is_boolean") {
  CHECK(is_boolean(boolean_algebra(4)));
  CHECK_FALSE(is_boolean(mo(2)));
  CHECK_FALSE(is_boolean(fixtures::paste_file("two_blocks.gre")));
}

TEST_CASE("blocks") {
  auto b = blocks(boolean_algebra(3));
  REQUIRE(b.size() == 1);
  CHECK(b[0].size() == 8);

  b = blocks(mo(4));
  REQUIRE(b.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(b[i].members() == std::vector<Element>{0, 2 * i + 1, 2 * i + 2, 9});

  const auto two = fixtures::paste_file("two_blocks.gre");
  CHECK(two.size() == 12);
  b = blocks(two);
  REQUIRE(b.size() == 2);
  CHECK(b[0].size() == 8);
  CHECK(b[1].size() == 8);
}

TEST_CASE("blocks agree with maximal compatible sets") {
  for (const auto &[name, l] : fixtures::small_lattices()) {
    if (l.size() > 20)
      continue;
    INFO(name);
    std::set<std::vector<std::size_t>> found;
    for (const auto &b : blocks(l)) {
      CHECK(is_boolean(b.as_oml()));
      found.insert(b.members());
    }
    CHECK(found == oracle::maximal_compatible_sets(oracle::Raw(l)));
  }
}

TEST_CASE("generated subOMLs") {
  const auto b3 = boolean_algebra(3);
  const std::vector<Element> atom{1};
  CHECK(generate_suboml(b3, atom).members() == std::vector<Element>{0, 1, 6, 7});

  const auto m2 = mo(2);
  const std::vector<Element> ab{1, 3};
  CHECK(generate_suboml(m2, ab).size() == 6);

  const auto m3 = mo(3);
  const auto g = generate_suboml(m3, ab);
  CHECK(g.members() == std::vector<Element>{0, 1, 2, 3, 4, 7});
  CHECK(is_isomorphic(g.as_oml(), m2));

  CHECK(generate_suboml(m3, {}).members() == std::vector<Element>{0, 7});
}

TEST_CASE("generated subOMLs match the oracle fixpoint") {
  std::mt19937_64 rng(7);
  for (const auto &[name, l] : fixtures::small_lattices()) {
    INFO(name);
    const oracle::Raw raw(l);
    for (int trial = 0; trial < 20; ++trial) {
      const auto s = fixtures::random_subset(rng, l.size(), 3);
      CHECK(generate_suboml(l, s).members() ==
            oracle::members(oracle::closure(raw, s)));
    }
  }
}

TEST_CASE("closure is monotone and directed") {
  std::mt19937_64 rng(11);
  for (const auto &[name, l] : fixtures::small_lattices()) {
    INFO(name);
    for (int trial = 0; trial < 20; ++trial) {
      auto f1 = fixtures::random_subset(rng, l.size(), 3);
      auto f2 = fixtures::random_subset(rng, l.size(), 3);
      auto both = f1;
      both.insert(both.end(), f2.begin(), f2.end());
      const auto g1 = generate_suboml(l, f1);
      const auto g2 = generate_suboml(l, f2);
      const auto g12 = generate_suboml(l, both);
      CHECK(g1.mask().is_subset_of(g12.mask()));
      CHECK(g2.mask().is_subset_of(g12.mask()));
    }
  }
}

TEST_CASE("SubOml::verified rejects non-closed sets") {
  const auto m2 = mo(2);
  BitSet s(6);
  s.set(0);
  s.set(1);
  s.set(5);
  CHECK_THROWS_AS(SubOml::verified(m2, s), InternalInvariantViolation);
  s.set(2);
  CHECK(SubOml::verified(m2, s).size() == 4);
}

TEST_CASE("min_generators") {
  auto g = min_generators(boolean_algebra(2));
  CHECK(g.count == 1);
  CHECK(g.cf == 3);
  g = min_generators(mo(3));
  CHECK(g.count == 3);
  CHECK(g.cf == 5);
  g = min_generators(boolean_algebra(3));
  CHECK(g.count == 2);
  CHECK(g.cf == 6);
  const auto l = boolean_algebra(3);
  CHECK(generate_suboml(l, g.witness).size() == 8);

  CHECK(min_generators(boolean_algebra(1)).count == 0);
  CHECK_THROWS_AS(min_generators(boolean_algebra(7)), CapExceeded);
}

TEST_CASE("min_generators matches exhaustive search") {
  for (const auto &[name, l] : fixtures::small_lattices()) {
    if (l.size() > 16)
      continue;
    INFO(name);
    const auto g = min_generators(l);
    CHECK(g.count == oracle::min_generator_count(oracle::Raw(l)));
    CHECK(generate_suboml(l, g.witness).size() == l.size());
    CHECK(g.cf == l.size() - g.count);
  }
}

TEST_CASE("homomorphisms and images") {
  const auto m2 = mo(2);
  const auto id = OmlHom::make(m2, m2, all_of(m2));
  CHECK(id.is_bijective());
  CHECK(hom_image(id).size() == 6);

  // 2^2 = 2 x 2; projection onto the first factor.
  const auto b1 = boolean_algebra(1);
  const std::vector<FiniteOml> twos{b1, b1};
  const auto b2 = product(twos);
  std::vector<Element> proj(4);
  for (Element i = 0; i < 4; ++i)
    proj[i] = i / 2;
  const auto h = OmlHom::make(b2, b1, proj);
  CHECK(hom_image(h).members() == std::vector<Element>{0, 1});

  // A constant map is not a hom.
  CHECK_THROWS_AS(OmlHom::make(m2, m2, std::vector<Element>(6, 5)),
                  MalformedInput);
  CHECK_THROWS_AS(OmlHom::make(m2, m2, {0, 1}), MalformedInput);
}

TEST_CASE("projection of 2^2 x MO2 onto MO2") {
  const auto p = fixtures::two_by_mo2();
  const auto m2 = mo(2);
  std::vector<Element> proj(p.size());
  for (Element i = 0; i < p.size(); ++i)
    proj[i] = i % 6;
  const auto h = OmlHom::make(p, m2, proj);
  CHECK_FALSE(h.is_bijective());
  const auto image = hom_image(h);
  CHECK(image.size() == 6);

  const std::vector<Element> some{1, 7};
  const auto sub = generate_suboml(p, some);
  CHECK(hom_image(h, sub).mask().is_subset_of(image.mask()));
  const std::vector<Element> a{1};
  CHECK_THROWS_AS(hom_image(h, generate_suboml(m2, a)), MalformedInput);
}
