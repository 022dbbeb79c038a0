#include <doctest.h>

#include <random>

#include "oml/oml.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace oml;

namespace {

LinearEquation eq(std::vector<std::pair<std::size_t, Rational>> terms,
                  Rational rhs) {
  return LinearEquation{std::move(terms), std::move(rhs)};
}

} // namespace

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), MalformedInput);
  CHECK_THROWS_AS(parse_rational("x"), MalformedInput);
  CHECK_THROWS_AS(parse_rational(""), MalformedInput);
}

TEST_CASE("empty system is feasible") {
  FeasibilitySystem sys;
  sys.variables = 1;
  auto out = lp_feasible(sys);
  REQUIRE(std::holds_alternative<Witness>(out));
  CHECK(satisfies(sys, std::get<Witness>(out).values));
}

TEST_CASE("x = 1 and x = 0 is infeasible") {
  FeasibilitySystem sys;
  sys.variables = 1;
  sys.equations = {eq({{0, 1}}, 1), eq({{0, 1}}, 0)};
  auto out = lp_feasible(sys);
  REQUIRE(std::holds_alternative<InfeasibilityCertificate>(out));
  const auto &cert = std::get<InfeasibilityCertificate>(out);
  CHECK(certifies_infeasible(sys, cert));
  CHECK(oracle::farkas_holds(sys, cert));
}

TEST_CASE("bounds alone can make a system infeasible") {
  FeasibilitySystem sys;
  sys.variables = 2;
  sys.equations = {eq({{0, 1}, {1, 1}}, 3)};
  auto out = lp_feasible(sys);
  REQUIRE(std::holds_alternative<InfeasibilityCertificate>(out));
  CHECK(oracle::farkas_holds(sys, std::get<InfeasibilityCertificate>(out)));

  sys.equations = {eq({{0, 1}, {1, -1}}, -2)};
  out = lp_feasible(sys);
  REQUIRE(std::holds_alternative<InfeasibilityCertificate>(out));
  CHECK(oracle::farkas_holds(sys, std::get<InfeasibilityCertificate>(out)));
}

TEST_CASE("redundant and fractional systems") {
  FeasibilitySystem sys;
  sys.variables = 3;
  sys.equations = {eq({{0, 3}, {1, 3}}, 2), eq({{0, 6}, {1, 6}}, 4),
                   eq({{2, 1}, {0, -1}}, Rational(1, 5))};
  auto out = lp_feasible(sys);
  REQUIRE(std::holds_alternative<Witness>(out));
  CHECK(satisfies(sys, std::get<Witness>(out).values));
}

TEST_CASE("malformed systems are rejected") {
  FeasibilitySystem sys;
  sys.variables = 1;
  sys.equations = {eq({{3, 1}}, 0)};
  CHECK_THROWS_AS(lp_feasible(sys), MalformedInput);
}

TEST_CASE("tampered certificates are rejected") {
  FeasibilitySystem sys;
  sys.variables = 1;
  sys.equations = {eq({{0, 1}}, 1), eq({{0, 1}}, 0)};
  auto cert = std::get<InfeasibilityCertificate>(lp_feasible(sys));
  cert.equation_multipliers[0] *= 2;
  CHECK_FALSE(certifies_infeasible(sys, cert));
  CHECK_FALSE(oracle::farkas_holds(sys, cert));
}

TEST_CASE("random systems: witness or certificate, never neither") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> size(1, 5);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    FeasibilitySystem sys;
    sys.variables = static_cast<std::size_t>(size(rng));
    const int rows = size(rng);
    for (int r = 0; r < rows; ++r) {
      LinearEquation e;
      for (std::size_t v = 0; v < sys.variables; ++v)
        if (int c = coeff(rng); c != 0)
          e.terms.push_back({v, c});
      e.rhs = Rational(coeff(rng)) / 2;
      sys.equations.push_back(std::move(e));
    }
    auto out = lp_feasible(sys);
    if (auto *w = std::get_if<Witness>(&out)) {
      ++feasible;
      CHECK(satisfies(sys, w->values));
    } else {
      ++infeasible;
      CHECK(oracle::farkas_holds(sys, std::get<InfeasibilityCertificate>(out)));
    }
  }
  CHECK(feasible > 0);
  CHECK(infeasible > 0);
}
