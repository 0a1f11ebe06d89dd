#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valtop/ordered_groups.hpp"
#include "valtop/rings.hpp"
#include "valtop/valuations.hpp"

namespace valtop {

/// Which axiom failed and where: multiplicativity (V1), the
/// ultrametric inequality (V2), or the unit/zero normalization (V3).
struct ViolationReport {
  enum class Axiom { V1, V2, V3 };
  Axiom axiom = Axiom::V3;
  std::vector<RingElem> witnesses;  // (a, b) for V1/V2; the single element for V3
  std::vector<ExtValue> observed;   // V1: f(a),f(b),f(ab); V2: f(a),f(b),f(a+b); V3: f(w)

  std::string axiom_name() const {
    switch (axiom) {
      case Axiom::V1: return "V1";
      case Axiom::V2: return "V2";
      case Axiom::V3: return "V3";
    }
    return "?";
  }
};

/// A finite fragment of a function R -> carrier, optionally backed by a
/// valuation for elements outside the explicit entries. Entries keep
/// their insertion order (the serialization order) and take precedence
/// over the backing.
class FnTable {
 public:
  FnTable(RingSpec ring, MonoidSpec monoid, std::optional<Valuation> backing = {});

  const RingSpec& ring() const { return ring_; }
  const MonoidSpec& monoid() const { return monoid_; }
  const GroupSpec& group() const { return monoid_.group; }
  const std::optional<Valuation>& backing() const { return backing_; }
  const std::vector<std::pair<RingElem, ExtValue>>& entries() const { return entries_; }

  /// Appends or overwrites; the value must live in the declared monoid.
  void set(const RingElem& a, const ExtValue& v);

  /// Entry value, then the backing valuation, then absent.
  std::optional<ExtValue> value_of(const RingElem& a) const;

 private:
  RingSpec ring_;
  MonoidSpec monoid_;
  std::vector<std::pair<RingElem, ExtValue>> entries_;
  std::map<std::string, std::size_t> index_;
  std::optional<Valuation> backing_;
};

/// First checkable violation in deterministic scan order: V3 (at 1,
/// then 0), then V1 over entry pairs, then V2; pairs iterate in
/// serialization order. Absent iff nothing checkable fails.
std::optional<ViolationReport> check_axioms(const FnTable& table);

}  // namespace valtop
