#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace oml {

using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q" into a normalized rational. Throws
/// MalformedInput on anything else (including a zero denominator).
Rational parse_rational(const std::string &text);

/// sum(coefficient * x[variable]) = rhs
struct LinearEquation {
  std::vector<std::pair<std::size_t, Rational>> terms;
  Rational rhs;
};

/// Equalities over variables bounded to [0, 1].
struct FeasibilitySystem {
  std::size_t variables = 0;
  std::vector<LinearEquation> equations;

  /// Throws MalformedInput when a term references a missing variable.
  void check() const;
};

struct Witness {
  std::vector<Rational> values;
};

/// Multipliers y (one per equation) and u >= 0 (one per upper bound) with
///   A^T y - u <= 0   componentwise, and   y.b - sum(u) = 1.
/// Summing the equations with weights y and the bounds x <= 1 with weights u
/// gives 1 <= 0 for any x in [0,1]^n satisfying the system.
struct InfeasibilityCertificate {
  std::vector<Rational> equation_multipliers;
  std::vector<Rational> bound_multipliers;
};

using FeasibilityOutcome = std::variant<Witness, InfeasibilityCertificate>;

/// Exact feasibility test: phase-one simplex over the rationals
/// with Bland's rule. Redundant equations are dropped by an exact rank pass
/// before pivoting.
FeasibilityOutcome lp_feasible(const FeasibilitySystem &system);

bool satisfies(const FeasibilitySystem &system,
               const std::vector<Rational> &values);

bool certifies_infeasible(const FeasibilitySystem &system,
                          const InfeasibilityCertificate &certificate);

} // namespace oml
