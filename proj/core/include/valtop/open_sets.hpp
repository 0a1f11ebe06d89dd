#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valtop/ordered_groups.hpp"

namespace valtop {

/// One generalized open interval of the extended carrier: the finite
/// part { x : lower < x < upper } plus, optionally, infinity. Missing
/// bounds are unbounded; the infinity flag requires an unbounded upper
/// bound.
class Interval {
 public:
  Interval(GroupSpec g, std::optional<GroupElem> lo, std::optional<GroupElem> hi,
           bool with_inf);

  const GroupSpec& group() const { return group_; }
  const std::optional<GroupElem>& lo() const { return lo_; }
  const std::optional<GroupElem>& hi() const { return hi_; }
  bool with_inf() const { return inf_; }

  bool member(const ExtValue& x) const;
  /// True when the finite part { x : lo < x < hi } has no elements.
  bool finite_part_empty() const;

  std::string str() const;

 private:
  GroupSpec group_;
  std::optional<GroupElem> lo_, hi_;
  bool inf_;
};

/// A finite union of intervals in canonical form: empty parts dropped,
/// parts sorted and maximally merged, so equal sets have identical part
/// lists and equality is syntactic.
class OpenSet {
 public:
  explicit OpenSet(GroupSpec g) : group_(std::move(g)) {}  // empty set
  static OpenSet of(GroupSpec g, std::vector<Interval> parts);

  /// ]lo,hi[ plus optional infinity; bounds given as extended values
  /// (an infinite lower bound empties the set, an infinite upper bound
  /// means unbounded).
  static OpenSet interval(const GroupSpec& g, const std::optional<GroupElem>& lo,
                          const std::optional<GroupElem>& hi, bool with_inf);
  static OpenSet empty(const GroupSpec& g) { return OpenSet(g); }
  static OpenSet whole(const GroupSpec& g, bool with_inf);
  /// {e} for groups with a smallest positive element (and the trivial
  /// group); not representable over dense groups.
  static OpenSet singleton(const GroupElem& e);
  /// The extended carrier minus one finite point.
  static OpenSet puncture(const GroupElem& e);

  const GroupSpec& group() const { return group_; }
  const std::vector<Interval>& parts() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }
  bool has_infinity() const;

  bool member(const ExtValue& x) const;
  OpenSet unite(const OpenSet& o) const;
  OpenSet intersect(const OpenSet& o) const;
  bool subset_of(const OpenSet& o) const;
  bool operator==(const OpenSet& o) const;

  /// Pointwise order: every element here is strictly below every
  /// element of `o`. Vacuously true when either set is empty.
  bool strictly_below(const OpenSet& o) const;

  std::string str() const;

 private:
  GroupSpec group_;
  std::vector<Interval> parts_;
};

/// Interval-hull superset of the pointwise sum { u + v }. Sound by
/// construction: hull(U,V) inside W implies U+V inside W. Over discrete
/// groups bounded endpoints tighten by one step; infinity absorbs.
OpenSet minkowski_hull(const OpenSet& u, const OpenSet& v);

/// A finite union of closed intervals of the finite carrier, used for
/// complements and compactness tests. Missing bounds are unbounded.
class ClosedSet {
 public:
  struct Component {
    std::optional<GroupElem> lo, hi;  // [lo, hi], inclusive
  };

  explicit ClosedSet(GroupSpec g) : group_(std::move(g)) {}
  static ClosedSet of(GroupSpec g, std::vector<Component> comps);
  static ClosedSet closed_interval(const GroupElem& lo, const GroupElem& hi);
  static ClosedSet point(const GroupElem& p);

  const GroupSpec& group() const { return group_; }
  const std::vector<Component>& components() const { return comps_; }
  bool is_empty() const { return comps_.empty(); }

  bool member(const GroupElem& x) const;
  std::string str() const;

 private:
  GroupSpec group_;
  std::vector<Component> comps_;
};

/// Complement of the finite part of U within the carrier (clipped at 0
/// for non-negative carriers).
ClosedSet complement_closed(const OpenSet& u, const MonoidSpec& carrier);

/// Complement of K within the extended carrier, together with infinity.
OpenSet complement_with_infinity(const ClosedSet& k, const MonoidSpec& carrier);

bool bounded_below(const ClosedSet& c, const MonoidSpec& carrier);
bool bounded_above(const ClosedSet& c, const MonoidSpec& carrier);

/// Exact compactness of a representable closed set, per carrier:
/// compact iff the set is finite (points always; bounded integer
/// ranges; lex ranges that pin every coordinate but a trailing
/// discrete one). Dense segments of positive length are never compact.
bool compactness_predicate(const ClosedSet& c, const MonoidSpec& carrier);

/// The three extended-carrier topologies plus the two pinned example
/// topologies used by the separation machinery: Pinned(p) admits an
/// open around p only when it carries both an upper and a lower ray;
/// NotT1(gamma, gamma') admits gamma' only in company of gamma.
struct TopologyId {
  enum class Kind { A1, A2, A3, Pinned, NotT1 };
  Kind kind = Kind::A1;
  std::optional<GroupElem> pin;   // Pinned / NotT1 (gamma)
  std::optional<GroupElem> pin2;  // NotT1 (gamma')

  static TopologyId a1() { return {Kind::A1, std::nullopt, std::nullopt}; }
  static TopologyId a2() { return {Kind::A2, std::nullopt, std::nullopt}; }
  static TopologyId a3() { return {Kind::A3, std::nullopt, std::nullopt}; }
  static TopologyId pinned(GroupElem p) {
    return {Kind::Pinned, std::move(p), std::nullopt};
  }
  static TopologyId not_t1(GroupElem gamma, GroupElem gamma_prime) {
    return {Kind::NotT1, std::move(gamma), std::move(gamma_prime)};
  }

  std::string str() const;
  /// Grammar: A1 | A2 | A3 | pinned(<elem>) | nont1(<elem>,<elem>)
  static TopologyId parse(std::string_view text, const GroupSpec& g);
};

bool is_open_in(const OpenSet& u, const TopologyId& t, const MonoidSpec& carrier);

/// Order-separating opens for gamma < gamma': U around gamma, U' around
/// gamma' with U strictly below U'. Uses the between witness when the
/// gap is non-empty, the adjacent-pair rays otherwise.
std::pair<OpenSet, OpenSet> separate_below(const ExtValue& gamma,
                                           const ExtValue& gamma_prime);

/// Basic neighborhood of infinity per topology.
OpenSet infinity_basis_a1(const GroupElem& x0);
OpenSet infinity_basis_a2(const GroupElem& x0, const GroupElem& x1);
OpenSet infinity_basis_a3(const ClosedSet& compact_k, const MonoidSpec& carrier);

/// Drops parts with no trace in the non-negative carrier (no-op for
/// full carriers). Gives certificates over restricted monoids one
/// canonical shape.
OpenSet clip_to_monoid(const OpenSet& u, const MonoidSpec& carrier);

}  // namespace valtop
