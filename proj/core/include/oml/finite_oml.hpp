#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "oml/bitset.hpp"
#include "oml/errors.hpp"

namespace oml {

using Element = std::size_t;

/// Largest element count any FiniteOml may have (table entries are 16-bit).
inline constexpr std::size_t kMaxElements = 65535;

/// Unvalidated lattice data: a full order matrix, an orthocomplement map and
/// the two distinguished bounds.
struct OmlCandidate {
  std::size_t n = 0;
  std::vector<BitSet> leq; // leq[i].test(j) iff i <= j
  std::vector<Element> comp;
  Element bottom = 0;
  Element top = 0;
};

struct Violation {
  std::string axiom;
  Element first = 0;
  Element second = 0;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

enum class ValidationMode { FailFast, FullReport };

/// Checks every orthomodular-lattice axiom on `candidate`.
///
/// Throws MalformedInput when the dimensions are inconsistent or an index is
/// out of range. Axiom failures are reported, not thrown; in FailFast mode
/// the report holds the first violation only. Axiom names used in reports:
/// "nontrivial", "reflexive", "antisymmetric", "transitive", "bounds",
/// "join-exists", "meet-exists", "comp-range", "involution",
/// "order-reversing", "complement-join", "complement-meet", "orthomodular".
ValidationReport validate_oml(const OmlCandidate &candidate,
                              ValidationMode mode = ValidationMode::FailFast);

class ValidationFailed : public Error {
public:
  explicit ValidationFailed(ValidationReport report)
      : Error("not an orthomodular lattice: " + report.describe()),
        report_(std::move(report)) {}

  const ValidationReport &report() const { return report_; }

private:
  ValidationReport report_;
};

/// Reflexive-transitive closure of the relation in place (Warshall on rows).
void close_order(std::vector<BitSet> &leq);

/// An immutable, validated finite orthomodular lattice.
///
/// Copies share the underlying tables, so values are cheap to pass around
/// and safe to read from several threads.
class FiniteOml {
public:
  /// Validates and takes ownership of the candidate. Throws ValidationFailed.
  static FiniteOml from_candidate(OmlCandidate candidate);

  std::size_t size() const { return data_->n; }
  Element bottom() const { return data_->bottom; }
  Element top() const { return data_->top; }

  bool leq(Element a, Element b) const { return data_->leq[a].test(b); }
  Element comp(Element a) const { return data_->comp[a]; }
  Element join(Element a, Element b) const {
    return data_->join[a * data_->n + b];
  }
  Element meet(Element a, Element b) const {
    return data_->meet[a * data_->n + b];
  }
  bool orthogonal(Element a, Element b) const { return leq(a, comp(b)); }

  bool is_atom(Element a) const { return data_->atom[a]; }
  std::vector<Element> atoms() const;

  const BitSet &up_set(Element a) const { return data_->leq[a]; }
  const BitSet &down_set(Element a) const { return data_->geq[a]; }

  /// Throws MalformedInput unless `a` is a valid element index.
  void check_element(Element a) const;

  /// The candidate this lattice was built from.
  OmlCandidate candidate() const;

  friend bool operator==(const FiniteOml &a, const FiniteOml &b);

private:
  struct Data {
    std::size_t n = 0;
    std::vector<BitSet> leq;
    std::vector<BitSet> geq;
    std::vector<Element> comp;
    Element bottom = 0;
    Element top = 0;
    std::vector<std::uint16_t> join;
    std::vector<std::uint16_t> meet;
    std::vector<bool> atom;
  };

  explicit FiniteOml(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

} // namespace oml
