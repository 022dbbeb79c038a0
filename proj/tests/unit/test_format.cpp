#include <doctest.h>

#include "oml/oml.hpp"
#include "support/fixtures.hpp"

using namespace oml;

TEST_CASE("two element file") {
  const auto l = parse_oml("n 2\nbottom 0\ntop 1\ncomp 1 0\nle 0 1\n");
  CHECK(l.size() == 2);
  CHECK(serialize_oml(l) == "n 2\nbottom 0\ntop 1\ncomp 1 0\nle 0 1\n");
}

TEST_CASE("comments and blank lines") {
  const auto l = parse_oml("# chain\n\nn 2 # count\nbottom 0\ntop 1\n"
                           "comp 1 0\n  le 0 1\n");
  CHECK(l.size() == 2);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string &text) -> std::size_t {
    try {
      parse_oml(text);
    } catch (const ParseError &e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("n 2\nbottom 0\ntop 1\nle 0 1\n") == 5); // missing comp
  CHECK(line_of("n 2\nbottom 0\ntop 1\ncomp 1 0\nle 0 7\n") == 5);
  CHECK(line_of("n 2\nbottom x\n") == 2);
  CHECK(line_of("bottom 0\n") == 1);
  CHECK(line_of("n 2\nn 2\n") == 2);
  CHECK(line_of("n 2\nfoo 1\n") == 2);
  CHECK(line_of("n 2\nbottom 0\ntop 1\ncomp 1\n") == 4);
}

TEST_CASE("invalid lattices fail validation") {
  CHECK_THROWS_AS(parse_oml("n 2\nbottom 0\ntop 1\ncomp 0 1\nle 0 1\n"),
                  ValidationFailed);
}

TEST_CASE("round trips") {
  for (const auto &[name, l] : fixtures::small_lattices()) {
    INFO(name);
    const auto text = serialize_oml(l);
    const auto back = parse_oml(text);
    CHECK(back == l);
    CHECK(serialize_oml(back) == text);
  }
  CHECK(parse_oml(serialize_oml(mo(2))) == mo(2));
}

TEST_CASE("greechie text") {
  const auto d = parse_greechie("# two blocks\na b c\na d e\n");
  CHECK(d.atoms == std::vector<std::string>{"a", "b", "c", "d", "e"});
  CHECK(serialize_greechie(d) == "a b c\na d e\n");
  CHECK_THROWS_AS(parse_greechie("# nothing\n"), ParseError);
  CHECK_THROWS_AS(parse_greechie("a b c\na b d\n"), InvalidDiagram);
  CHECK_THROWS_AS(parse_greechie("a b\n", true), InvalidDiagram);
  CHECK_THROWS_AS(parse_greechie("a b \xc3\xa9\n"), ParseError);
}

TEST_CASE("state and certificate text") {
  const auto m2 = mo(2);
  const auto s = *has_state(m2).state;
  const auto text = format_state(s);
  CHECK(text.find("5 1/1\n") != std::string::npos);
  CHECK(text.find("0 0/1\n") == 0);

  InfeasibilityCertificate c;
  c.equation_multipliers = {Rational(1, 2), 0, -3};
  c.bound_multipliers = {0, 2};
  const auto out = format_certificate(c);
  CHECK(out == "equation 0 1/2\nequation 2 -3\nbound 1 2\n");
  const auto back = parse_certificate(out, 3, 2);
  CHECK(back.equation_multipliers == c.equation_multipliers);
  CHECK(back.bound_multipliers == c.bound_multipliers);
  CHECK_THROWS_AS(parse_certificate("equation 5 1\n", 3, 2), ParseError);
  CHECK_THROWS_AS(parse_certificate("bound 0 1/0\n", 3, 2), ParseError);
}
