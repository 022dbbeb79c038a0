#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "oml/finite_oml.hpp"
#include "oml/lp.hpp"

namespace oml {

using RationalVector = std::array<Rational, 3>;
using IntegerVector = std::array<mpz_class, 3>;

/// Parses "x,y,z" with rational components such as "1,1/2,0".
RationalVector parse_rational_vector(const std::string &text);

/// A linear subspace of Q^3 in canonical form: reduced row echelon basis,
/// each row scaled to a primitive integer vector with positive leading
/// entry. Two subspaces are equal iff their canonical bases are equal.
class RationalSubspace {
public:
  /// The zero subspace.
  RationalSubspace() = default;

  static RationalSubspace span_of(std::span<const RationalVector> vectors);
  static RationalSubspace full();

  std::size_t dim() const { return basis_.size(); }
  const std::vector<IntegerVector> &basis() const { return basis_; }

  /// Orthogonal complement.
  RationalSubspace ortho() const;
  /// Span of the union.
  RationalSubspace join(const RationalSubspace &other) const;
  /// Intersection, computed directly as a null space inside this subspace.
  RationalSubspace meet(const RationalSubspace &other) const;
  bool contains(const RationalSubspace &other) const;

  /// "dim; r1; r2" with rows written as comma-separated integers.
  std::string to_string() const;

  friend bool operator==(const RationalSubspace &,
                         const RationalSubspace &) = default;
  friend bool operator<(const RationalSubspace &a, const RationalSubspace &b);

private:
  explicit RationalSubspace(std::vector<IntegerVector> basis)
      : basis_(std::move(basis)) {}

  std::vector<IntegerVector> basis_;
};

inline RationalSubspace subspace_from_vectors(
    std::span<const RationalVector> vectors) {
  return RationalSubspace::span_of(vectors);
}

struct ClosedFamily {
  std::vector<RationalSubspace> members; // insertion (breadth-first) order
};

struct ClosureCapReached {
  std::size_t count = 0; // size at the moment the cap was passed
  std::size_t cap = 0;
};

using RayClosureResult = std::variant<ClosedFamily, ClosureCapReached>;

/// Closure of gens together with the zero and full subspaces under ortho,
/// join and meet. Pairs are processed in insertion order; the search stops
/// as soon as the family grows past `cap`. Throws PreconditionViolated when
/// cap < gens.size() + 2.
RayClosureResult ray_closure(std::span<const RationalSubspace> gens,
                             std::size_t cap = 1000);

/// Members sorted by dimension then canonical basis, ordered by inclusion,
/// with ortho as complement. Throws InternalInvariantViolation if the family
/// is not closed or validation fails.
FiniteOml as_finite_oml(const ClosedFamily &family);

/// The sorted member list used for element indices by as_finite_oml.
std::vector<RationalSubspace> canonical_order(const ClosedFamily &family);

} // namespace oml
