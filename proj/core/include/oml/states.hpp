#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "oml/algorithms.hpp"
#include "oml/finite_oml.hpp"
#include "oml/lp.hpp"

namespace oml {

/// An exact probability assignment: value 1 at top, additive on every
/// orthogonal pair.
class RationalState {
public:
  /// Throws PreconditionViolated unless `values` satisfies the state axioms
  /// exactly.
  static RationalState verified(FiniteOml lattice, std::vector<Rational> values);

  const FiniteOml &lattice() const { return lattice_; }
  const std::vector<Rational> &values() const { return values_; }
  const Rational &operator[](Element a) const { return values_[a]; }

private:
  RationalState(FiniteOml lattice, std::vector<Rational> values)
      : lattice_(std::move(lattice)), values_(std::move(values)) {}

  FiniteOml lattice_;
  std::vector<Rational> values_;
};

/// A state taking only the values 0 and 1.
class TwoValuedState {
public:
  static TwoValuedState verified(FiniteOml lattice,
                                 std::vector<std::uint8_t> values);

  const FiniteOml &lattice() const { return lattice_; }
  const std::vector<std::uint8_t> &values() const { return values_; }
  bool operator[](Element a) const { return values_[a] != 0; }

  friend bool operator==(const TwoValuedState &a, const TwoValuedState &b) {
    return a.values_ == b.values_;
  }

private:
  TwoValuedState(FiniteOml lattice, std::vector<std::uint8_t> values)
      : lattice_(std::move(lattice)), values_(std::move(values)) {}

  FiniteOml lattice_;
  std::vector<std::uint8_t> values_;
};

/// Exact check of the state axioms: s(top) = 1, 0 <= s <= 1 and
/// s(a join b) = s(a) + s(b) whenever a <= b'.
bool is_state(const FiniteOml &l, std::span<const Rational> values);
bool is_two_valued_state(const FiniteOml &l,
                         std::span<const std::uint8_t> values);

/// Unordered orthogonal pairs {a, b} (a <= b', a <= b), in lexicographic
/// order. Includes {bottom, bottom}.
std::vector<std::pair<Element, Element>> orthogonal_pairs(const FiniteOml &l);

/// One variable per element; s_top = 1 and s_{a join b} - s_a - s_b = 0 for
/// every orthogonal pair, in that order.
FeasibilitySystem state_constraints(const FiniteOml &l);

struct StateExistence {
  std::optional<RationalState> state;
  std::optional<InfeasibilityCertificate> certificate;

  bool exists() const { return state.has_value(); }
};

StateExistence has_state(const FiniteOml &l);

struct TwoValuedQuery {
  std::vector<Element> force_one;
  std::vector<Element> force_zero;
  std::optional<std::size_t> limit;
};

/// All two-valued states honouring the forced values, in backtracking order
/// (most constrained element first, value 1 tried before 0). Throws
/// PreconditionViolated when the forced sets intersect.
std::vector<TwoValuedState> two_valued_states(const FiniteOml &l,
                                              const TwoValuedQuery &query = {});

/// Thrown by extend_state when no extension exists.
class Infeasible : public Error {
public:
  explicit Infeasible(InfeasibilityCertificate certificate)
      : Error("no state extension exists"),
        certificate_(std::move(certificate)) {}

  const InfeasibilityCertificate &certificate() const { return certificate_; }

private:
  InfeasibilityCertificate certificate_;
};

/// A state on `l` agreeing with `s` on every member of `sub`. `s` is a state
/// on sub.as_oml(), i.e. s[k] is the value at sub.members()[k].
///
/// Throws Infeasible when there is no extension; for Boolean `l` that can
/// never happen and is reported as InternalInvariantViolation instead.
RationalState extend_state(const FiniteOml &l, const SubOml &sub,
                           const RationalState &s);

/// Kernel {x : s(x) = 0} of the two-valued state concentrated on the
/// lowest-index atom under a'. Throws NotBoolean or PreconditionViolated
/// (a = top). The result is sorted and re-verified.
std::vector<Element> prime_ideal_containing(const FiniteOml &b, Element a);

/// Checks downward closure, join closure and that exactly one of x, x' lies
/// in the set.
bool is_prime_ideal(const FiniteOml &b, std::span<const Element> ideal);

/// Whether for every a not below b some state has s(a) = 1 and s(b) = 0.
bool order_determining(const FiniteOml &l,
                       std::span<const TwoValuedState> states);

struct RepresentabilityOptions {
  std::size_t element_cap = 256;
};

/// Whether the full set of two-valued states is order determining.
bool is_set_representable(const FiniteOml &l,
                          RepresentabilityOptions options = {});

} // namespace oml
