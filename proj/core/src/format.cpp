#include "oml/format.hpp"

#include <charconv>
#include <optional>
#include <sstream>

namespace oml {

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
      ++j;
    if (j > i)
      out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Calls fn(line_number, tokens) for every line with content.
template <typename Fn> std::size_t for_each_line(std::string_view text, Fn &&fn) {
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    ++number;
    auto line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tokens = tokens_of(line);
    if (!tokens.empty())
      fn(number, tokens);
    if (end == text.size())
      break;
    start = end + 1;
  }
  return number;
}

std::size_t parse_index(const std::string &token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, "expected a non-negative integer, got '" + token + "'");
  return value;
}

} // namespace

OmlCandidate parse_oml_candidate(std::string_view text) {
  std::optional<std::size_t> n, bottom, top;
  std::optional<std::vector<Element>> comp;
  std::vector<std::pair<Element, Element>> pairs;

  auto once = [](bool present, std::size_t line, const std::string &key) {
    if (present)
      throw ParseError(line, "duplicate '" + key + "' directive");
  };
  auto need_n = [&](std::size_t line, const std::string &key) {
    if (!n)
      throw ParseError(line, "'" + key + "' before 'n'");
  };

  const std::size_t lines = for_each_line(
      text, [&](std::size_t line, const std::vector<std::string> &tok) {
        const auto &key = tok[0];
        auto arity = [&](std::size_t k) {
          if (tok.size() != k + 1)
            throw ParseError(line, "'" + key + "' takes " + std::to_string(k) +
                                       " argument(s)");
        };
        auto in_range = [&](const std::string &token) {
          std::size_t v = parse_index(token, line);
          if (v >= *n)
            throw ParseError(line, "index " + token + " out of range");
          return v;
        };
        if (key == "n") {
          once(n.has_value(), line, key);
          arity(1);
          n = parse_index(tok[1], line);
          if (*n == 0)
            throw ParseError(line, "element count must be positive");
          if (*n > kMaxElements)
            throw ParseError(line, "element count above " +
                                       std::to_string(kMaxElements));
        } else if (key == "bottom" || key == "top") {
          auto &slot = key == "bottom" ? bottom : top;
          once(slot.has_value(), line, key);
          need_n(line, key);
          arity(1);
          slot = in_range(tok[1]);
        } else if (key == "comp") {
          once(comp.has_value(), line, key);
          need_n(line, key);
          arity(*n);
          std::vector<Element> values;
          for (std::size_t i = 1; i < tok.size(); ++i)
            values.push_back(in_range(tok[i]));
          comp = std::move(values);
        } else if (key == "le") {
          need_n(line, key);
          arity(2);
          pairs.emplace_back(in_range(tok[1]), in_range(tok[2]));
        } else {
          throw ParseError(line, "unknown directive '" + key + "'");
        }
      });

  const std::size_t end = lines;
  if (!n)
    throw ParseError(end, "missing 'n'");
  if (!bottom)
    throw ParseError(end, "missing 'bottom'");
  if (!top)
    throw ParseError(end, "missing 'top'");
  if (!comp)
    throw ParseError(end, "missing 'comp'");

  OmlCandidate c;
  c.n = *n;
  c.bottom = *bottom;
  c.top = *top;
  c.comp = std::move(*comp);
  c.leq.assign(c.n, BitSet(c.n));
  for (auto [i, j] : pairs)
    c.leq[i].set(j);
  close_order(c.leq);
  return c;
}

FiniteOml parse_oml(std::string_view text) {
  return FiniteOml::from_candidate(parse_oml_candidate(text));
}

std::string serialize_oml(const FiniteOml &l) {
  std::ostringstream out;
  const std::size_t n = l.size();
  out << "n " << n << '\n';
  out << "bottom " << l.bottom() << '\n';
  out << "top " << l.top() << '\n';
  out << "comp";
  for (Element i = 0; i < n; ++i)
    out << ' ' << l.comp(i);
  out << '\n';
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j)
      if (i != j && l.leq(i, j) &&
          (l.up_set(i) & l.down_set(j)).count() == 2)
        out << "le " << i << ' ' << j << '\n';
  return out.str();
}

GreechieDiagram parse_greechie(std::string_view text, bool strict) {
  std::vector<std::vector<std::string>> blocks;
  for_each_line(text, [&](std::size_t line, std::vector<std::string> tok) {
    for (const auto &label : tok)
      for (unsigned char ch : label)
        if (ch < 0x21 || ch > 0x7e)
          throw ParseError(line, "atom label '" + label + "' is not printable ASCII");
    blocks.push_back(std::move(tok));
  });
  if (blocks.empty())
    throw ParseError(1, "diagram has no blocks");
  return GreechieDiagram::from_labels(blocks, strict);
}

std::string serialize_greechie(const GreechieDiagram &d) {
  std::ostringstream out;
  for (const auto &block : d.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i)
      out << (i > 0 ? " " : "") << d.atoms[block[i]];
    out << '\n';
  }
  return out.str();
}

std::string format_rational(const Rational &r) {
  if (r.get_den() == 1)
    return r.get_num().get_str();
  return r.get_str();
}

std::string format_state(const RationalState &s) {
  std::ostringstream out;
  for (Element i = 0; i < s.values().size(); ++i)
    out << i << ' ' << s[i].get_num().get_str() << '/'
        << s[i].get_den().get_str() << '\n';
  return out.str();
}

std::string format_certificate(const InfeasibilityCertificate &c) {
  std::ostringstream out;
  for (std::size_t i = 0; i < c.equation_multipliers.size(); ++i)
    if (sgn(c.equation_multipliers[i]) != 0)
      out << "equation " << i << ' ' << format_rational(c.equation_multipliers[i])
          << '\n';
  for (std::size_t j = 0; j < c.bound_multipliers.size(); ++j)
    if (sgn(c.bound_multipliers[j]) != 0)
      out << "bound " << j << ' ' << format_rational(c.bound_multipliers[j])
          << '\n';
  return out.str();
}

InfeasibilityCertificate parse_certificate(std::string_view text,
                                           std::size_t equations,
                                           std::size_t variables) {
  InfeasibilityCertificate c;
  c.equation_multipliers.assign(equations, Rational(0));
  c.bound_multipliers.assign(variables, Rational(0));
  for_each_line(text, [&](std::size_t line, const std::vector<std::string> &tok) {
    if (tok.size() != 3 || (tok[0] != "equation" && tok[0] != "bound"))
      throw ParseError(line, "expected 'equation <i> <p/q>' or 'bound <j> <p/q>'");
    const bool eq = tok[0] == "equation";
    const std::size_t idx = parse_index(tok[1], line);
    if (idx >= (eq ? equations : variables))
      throw ParseError(line, "multiplier index out of range");
    try {
      (eq ? c.equation_multipliers : c.bound_multipliers)[idx] =
          parse_rational(tok[2]);
    } catch (const MalformedInput &e) {
      throw ParseError(line, e.what());
    }
  });
  return c;
}

} // namespace oml
