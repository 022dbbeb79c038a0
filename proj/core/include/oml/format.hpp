#pragma once

#include <string>
#include <string_view>

#include "oml/constructions.hpp"
#include "oml/finite_oml.hpp"
#include "oml/lp.hpp"
#include "oml/states.hpp"

namespace oml {

// .oml text format, one directive per line, '#' starts a comment:
//
//   n 6
//   bottom 0
//   top 5
//   comp 5 2 1 4 3 0
//   le 0 1
//   ...
//
// `le` lines list generating order pairs; the parser closes them
// reflexively and transitively and then validates. Serialization writes
// exactly the covering pairs in lexicographic order, so serializing a
// parsed canonical file reproduces it byte for byte.

/// Parses the raw candidate without validating it. Throws ParseError.
OmlCandidate parse_oml_candidate(std::string_view text);

/// Throws ParseError or ValidationFailed.
FiniteOml parse_oml(std::string_view text);

std::string serialize_oml(const FiniteOml &l);

/// .gre format: each non-blank, non-comment line is one block of
/// whitespace-separated atom labels. Throws ParseError or InvalidDiagram.
GreechieDiagram parse_greechie(std::string_view text, bool strict = false);

std::string serialize_greechie(const GreechieDiagram &d);

/// One line per element: "index num/den".
std::string format_state(const RationalState &s);

/// "equation <i> <p/q>" for every nonzero equation multiplier, then
/// "bound <j> <p/q>" for every nonzero bound multiplier.
std::string format_certificate(const InfeasibilityCertificate &c);

/// Inverse of format_certificate, given the system dimensions.
InfeasibilityCertificate parse_certificate(std::string_view text,
                                           std::size_t equations,
                                           std::size_t variables);

/// "p/q", or "p" for integers.
std::string format_rational(const Rational &r);

} // namespace oml
