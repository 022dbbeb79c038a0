#pragma once

#include <optional>

#include "oml/algorithms.hpp"
#include "oml/finite_oml.hpp"

namespace oml {

struct IsomorphismOptions {
  std::size_t element_cap = 200;
};

/// Finds an order- and complement-preserving bijection from `a` onto `b`.
///
/// Both lattices are coloured jointly by iterated refinement of vertex
/// invariants (up-set size, down-set size, atom flag, colour of the
/// complement, colour multisets of the up- and down-sets) and the search then
/// backtracks over same-coloured candidates, lowest index first. Throws
/// CapExceeded when either lattice is above the cap.
std::optional<OmlHom> find_isomorphism(const FiniteOml &a, const FiniteOml &b,
                                       IsomorphismOptions options = {});

inline bool is_isomorphic(const FiniteOml &a, const FiniteOml &b) {
  return find_isomorphism(a, b).has_value();
}

} // namespace oml
