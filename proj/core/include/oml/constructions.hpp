#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "oml/finite_oml.hpp"

namespace oml {

// Every construction indexes its elements lexicographically over its natural
// coordinates, so repeated calls produce identical lattices.

/// Power-set algebra on k atoms. Element index = bit mask of atoms.
/// k = 0 is rejected as degenerate (ValidationFailed); above the cap throws
/// CapExceeded.
FiniteOml boolean_algebra(std::size_t k, std::size_t cap = 12);

/// Horizontal sum of k copies of the four-element Boolean algebra:
/// 0, a1, a1', a2, a2', ..., 1. Throws MalformedInput for k = 0.
FiniteOml mo(std::size_t k);

/// Glues the parts along their bounds: index 0 is the shared bottom, then the
/// interior of each part in order, and the shared top last. Two-element
/// parts contribute nothing. Throws MalformedInput for an empty list.
FiniteOml horizontal_sum(std::span<const FiniteOml> parts);

/// Cartesian product with componentwise operations, first factor most
/// significant. Throws CapExceeded when the product is above the cap.
FiniteOml product(std::span<const FiniteOml> parts, std::size_t cap = 4096);

/// Functions from the atoms of the Boolean algebra `b` into `l` with
/// pointwise order and complement. Throws NotBoolean or CapExceeded.
FiniteOml boolean_sum(const FiniteOml &l, const FiniteOml &b,
                      std::size_t cap = 4096);

/// Atoms plus blocks (maximal orthogonal contexts) of a pasting.
struct GreechieDiagram {
  std::vector<std::string> atoms;
  std::vector<std::vector<std::size_t>> blocks; // indices into atoms

  /// Builds a diagram from labelled blocks; atoms are numbered in order of
  /// first appearance. Throws InvalidDiagram.
  static GreechieDiagram from_labels(
      const std::vector<std::vector<std::string>> &labelled_blocks,
      bool strict = false);

  /// Throws InvalidDiagram naming the offending blocks or atoms. Strict mode
  /// additionally rejects two-atom blocks.
  void check(bool strict = false) const;
};

struct PastingOptions {
  bool strict = false;
};

/// Thrown when a diagram is well formed but its pasting is not an OML.
class NotPastable : public Error {
public:
  explicit NotPastable(ValidationReport report)
      : Error("diagram does not paste to an OML: " + report.describe()),
        report_(std::move(report)) {}

  const ValidationReport &report() const { return report_; }

private:
  ValidationReport report_;
};

/// Element of a pasted lattice, described by its atom set.
struct PastedElement {
  enum class Kind { Bottom, Top, Atom, Coatom, Middle };
  Kind kind;
  std::vector<std::size_t> atoms; // sorted atom indices below the element
  std::size_t atom = 0;           // the atom a for Atom a and Coatom a'
};

struct Pasting {
  FiniteOml lattice;
  std::vector<PastedElement> elements; // aligned with lattice indices
};

/// Pastes the Boolean blocks of `d` and validates the result.
/// Throws InvalidDiagram or NotPastable.
Pasting paste(const GreechieDiagram &d, PastingOptions options = {});

inline FiniteOml greechie_to_oml(const GreechieDiagram &d,
                                 PastingOptions options = {}) {
  return paste(d, options).lattice;
}

} // namespace oml
