#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "oml/bitset.hpp"
#include "oml/finite_oml.hpp"

namespace oml {

/// A subset of a lattice closed under comp, join and meet and containing both
/// bounds.
class SubOml {
public:
  /// Checks closure by enumeration. Throws InternalInvariantViolation when
  /// `members` is not a subOML of `parent`.
  static SubOml verified(FiniteOml parent, const BitSet &members);

  const FiniteOml &parent() const { return parent_; }
  const std::vector<Element> &members() const { return members_; }
  const BitSet &mask() const { return mask_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Element a) const { return mask_.test(a); }

  /// The subOML as a lattice in its own right; element k of the result is
  /// members()[k].
  FiniteOml as_oml() const;

  friend bool operator==(const SubOml &a, const SubOml &b) {
    return a.members_ == b.members_;
  }

private:
  SubOml(FiniteOml parent, BitSet mask)
      : parent_(std::move(parent)), mask_(std::move(mask)),
        members_(mask_.indices()) {}

  FiniteOml parent_;
  BitSet mask_;
  std::vector<Element> members_;
};

/// True when `members` is closed under comp, join, meet and holds both bounds.
bool is_closed(const FiniteOml &l, const BitSet &members);

/// Distributivity of join over meet on every triple drawn from `members`.
bool is_distributive(const FiniteOml &l, std::span<const Element> members);

/// a = (a meet b) join (a meet b').
bool compatible(const FiniteOml &l, Element a, Element b);

/// Elements compatible with every element. The result is checked Boolean.
SubOml centre(const FiniteOml &l);

bool is_boolean(const FiniteOml &l);

/// Maximal Boolean subalgebras, found as maximal cliques of the
/// compatibility graph and each re-verified to be a Boolean subOML.
/// Ordered by their smallest non-bound member.
std::vector<SubOml> blocks(const FiniteOml &l);

/// Least subOML containing `generators`.
SubOml generate_suboml(const FiniteOml &l, std::span<const Element> generators);

struct GeneratorSearchOptions {
  std::size_t element_cap = 64;
};

struct MinGenerators {
  std::size_t count = 0;
  std::vector<Element> witness;
  /// Lattice size minus the minimum generator count.
  std::size_t cf = 0;
};

/// Smallest generating set, by exhaustive search in increasing size.
/// Throws CapExceeded above the element cap.
MinGenerators min_generators(const FiniteOml &l,
                             GeneratorSearchOptions options = {});

/// A map between lattices preserving comp, join and top.
class OmlHom {
public:
  /// Throws MalformedInput when `map` is not a homomorphism.
  static OmlHom make(FiniteOml source, FiniteOml target,
                     std::vector<Element> map);

  const FiniteOml &source() const { return source_; }
  const FiniteOml &target() const { return target_; }
  const std::vector<Element> &map() const { return map_; }
  Element operator()(Element a) const { return map_[a]; }

  bool is_bijective() const;

private:
  OmlHom(FiniteOml source, FiniteOml target, std::vector<Element> map)
      : source_(std::move(source)), target_(std::move(target)),
        map_(std::move(map)) {}

  FiniteOml source_;
  FiniteOml target_;
  std::vector<Element> map_;
};

SubOml hom_image(const OmlHom &h);

/// Image of a subOML of the source. Throws MalformedInput when `domain` does
/// not belong to the hom's source.
SubOml hom_image(const OmlHom &h, const SubOml &domain);

} // namespace oml
