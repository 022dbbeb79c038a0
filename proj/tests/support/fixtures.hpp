#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oml/oml.hpp"

namespace fixtures {

inline std::string path(const std::string &name) {
  return std::string(OML_FIXTURE_DIR) + "/" + name;
}

inline std::string read(const std::string &name) {
  std::ifstream in(path(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline oml::FiniteOml paste_file(const std::string &name) {
  return oml::greechie_to_oml(oml::parse_greechie(read(name)));
}

inline oml::FiniteOml two_by_mo2() {
  const std::vector<oml::FiniteOml> parts{oml::boolean_algebra(2), oml::mo(2)};
  return oml::product(parts);
}

inline oml::FiniteOml ray_lattice(std::vector<oml::RationalVector> rays) {
  std::vector<oml::RationalSubspace> gens;
  for (const auto &v : rays) {
    const std::array<oml::RationalVector, 1> one{v};
    gens.push_back(oml::subspace_from_vectors(one));
  }
  return oml::as_finite_oml(std::get<oml::ClosedFamily>(oml::ray_closure(gens)));
}

struct Named {
  std::string name;
  oml::FiniteOml lattice;
};

// Every small lattice the tests use, all with at most 24 elements.
inline std::vector<Named> small_lattices() {
  std::vector<Named> out;
  for (std::size_t k = 1; k <= 4; ++k)
    out.push_back({"boolean " + std::to_string(k), oml::boolean_algebra(k)});
  for (std::size_t k = 1; k <= 5; ++k)
    out.push_back({"mo " + std::to_string(k), oml::mo(k)});
  out.push_back({"two_blocks.gre", paste_file("two_blocks.gre")});
  out.push_back({"mo2.gre", paste_file("mo2.gre")});
  {
    const std::vector<oml::FiniteOml> parts{oml::boolean_algebra(3),
                                            oml::boolean_algebra(2)};
    out.push_back({"hsum 2^3 2^2", oml::horizontal_sum(parts)});
  }
  {
    const std::vector<oml::FiniteOml> parts{oml::boolean_algebra(2), oml::mo(2)};
    out.push_back({"hsum 2^2 mo2", oml::horizontal_sum(parts)});
  }
  out.push_back({"2^2 x mo2", two_by_mo2()});
  out.push_back({"mo2 x 2", [] {
                   const std::vector<oml::FiniteOml> parts{oml::mo(2),
                                                           oml::boolean_algebra(1)};
                   return oml::product(parts);
                 }()});
  out.push_back({"rays orthogonal", ray_lattice({{1, 0, 0}, {0, 1, 0}})});
  out.push_back({"rays generic", ray_lattice({{1, 0, 0}, {1, 1, 0}})});
  return out;
}

inline std::vector<std::size_t> random_subset(std::mt19937_64 &rng,
                                              std::size_t n, std::size_t max) {
  std::uniform_int_distribution<std::size_t> count(0, max);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> out;
  for (std::size_t k = count(rng); k > 0; --k)
    out.push_back(pick(rng));
  return out;
}

} // namespace fixtures
