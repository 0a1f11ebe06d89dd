#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "valtop/errors.hpp"
#include "valtop/numbers.hpp"

namespace valtop {

/// Shape of an ordered abelian group: Z, Q, the trivial group {0}, or a
/// lexicographic product (left factor dominant). Lex leaves are Z or Q;
/// the trivial group only stands alone.
class GroupSpec {
 public:
  enum class Kind { Integers, Rationals, Trivial, Lex };

  GroupSpec() : GroupSpec(integers()) {}

  static GroupSpec integers();
  static GroupSpec rationals();
  static GroupSpec trivial();
  static GroupSpec lex(GroupSpec left, GroupSpec right);

  Kind kind() const { return node_->kind; }
  bool is_trivial() const { return kind() == Kind::Trivial; }
  bool is_leaf() const {
    return kind() == Kind::Integers || kind() == Kind::Rationals;
  }
  GroupSpec left() const;
  GroupSpec right() const;

  /// Flattened leaf kinds (Integers/Rationals), in lexicographic order.
  /// The trivial group has no leaves.
  const std::vector<Kind>& leaf_kinds() const { return node_->leaves; }
  std::size_t leaf_count() const { return node_->leaves.size(); }

  bool operator==(const GroupSpec& o) const;
  bool operator!=(const GroupSpec& o) const { return !(*this == o); }

  /// Grammar: Z | Q | 0 | lex(<spec>,<spec>)
  std::string str() const;
  static GroupSpec parse(std::string_view text);

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<const Node> l, r;
    std::vector<Kind> leaves;
  };
  explicit GroupSpec(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Carrier of values: the whole group or its non-negative submonoid
/// (plus infinity in either case).
struct MonoidSpec {
  GroupSpec group;
  bool nonneg = false;

  /// Grammar: <group spec> | nonneg(<group spec>)
  std::string str() const;
  static MonoidSpec parse(std::string_view text);
  bool operator==(const MonoidSpec& o) const {
    return nonneg == o.nonneg && group == o.group;
  }
};

/// An element of an ordered abelian group. Coordinates follow the
/// flattened leaf shape; integer leaves hold integral rationals.
class GroupElem {
 public:
  GroupElem(GroupSpec group, std::vector<Rat> coords);
  static GroupElem zero(const GroupSpec& g);

  const GroupSpec& group() const { return group_; }
  const std::vector<Rat>& coords() const { return coords_; }

  GroupElem operator+(const GroupElem& o) const;
  GroupElem operator-(const GroupElem& o) const;
  GroupElem operator-() const;

  std::strong_ordering operator<=>(const GroupElem& o) const;
  bool operator==(const GroupElem& o) const {
    return (*this <=> o) == std::strong_ordering::equal;
  }

  bool is_zero() const;
  bool positive() const { return *this > zero(group_); }
  bool negative() const { return *this < zero(group_); }

  /// "3", "-1/2" for rank one; "(1,-5)" for products; "()" for trivial.
  std::string str() const;
  static GroupElem parse(const GroupSpec& g, std::string_view text);

 private:
  GroupSpec group_;
  std::vector<Rat> coords_;
};

/// An element of the extended carrier with an absorbing maximum.
class ExtValue {
 public:
  static ExtValue infinity(GroupSpec g);
  static ExtValue finite(GroupElem e);
  static ExtValue zero(const GroupSpec& g) { return finite(GroupElem::zero(g)); }

  bool is_infinite() const { return !fin_.has_value(); }
  bool is_finite() const { return fin_.has_value(); }
  const GroupElem& finite_value() const;
  const GroupSpec& group() const { return group_; }

  ExtValue operator+(const ExtValue& o) const;  // absorbs infinity
  /// Finite difference; infinity minus a finite value is infinity.
  ExtValue minus(const ExtValue& o) const;

  std::strong_ordering operator<=>(const ExtValue& o) const;
  bool operator==(const ExtValue& o) const {
    return (*this <=> o) == std::strong_ordering::equal;
  }

  std::string str() const;  // "inf" or the element
  static ExtValue parse(const GroupSpec& g, std::string_view text);

 private:
  ExtValue(GroupSpec g, std::optional<GroupElem> f)
      : group_(std::move(g)), fin_(std::move(f)) {}
  GroupSpec group_;
  std::optional<GroupElem> fin_;
};

bool monoid_contains(const MonoidSpec& m, const ExtValue& v);

/// Smallest positive element, when the group has one (Z: 1; Q: none;
/// lex(L,R): lifts the right factor's).
std::optional<GroupElem> smallest_positive(const GroupSpec& g);

/// A canonical positive element, when any positive element exists
/// (absent only for the trivial group).
std::optional<GroupElem> unit_positive(const GroupSpec& g);

/// Deterministic witness of the open interval ]a,b[, absent iff the
/// interval is empty. Choice order: integers a+1; rationals the
/// midpoint; lex products the first coordinate with room; upper bound
/// infinity steps by the smallest positive element or the unit.
/// Requires a < b and a finite.
std::optional<ExtValue> between(const ExtValue& a, const ExtValue& b);

/// Splits a positive element into two strictly positive summands;
/// absent exactly when the argument is the smallest positive element.
std::optional<std::pair<GroupElem, GroupElem>> split_positive(const GroupElem& a);

/// Coordinatewise scaling; requires every leaf of the group to be Q.
GroupElem scalar_mul(const Rat& c, const GroupElem& e);

/// Canonical lattice element strictly above x (Z: x+1; Q: floor(x)+1;
/// lex: steps the dominant coordinate).
GroupElem next_above(const GroupElem& x);

/// Embeds a value into another group when a canonical embedding exists
/// (identity; Z leaf into Q leaf; trivial into anything; integral Q
/// into Z). Returns absent otherwise.
std::optional<GroupElem> coerce(const GroupElem& e, const GroupSpec& target);
std::optional<ExtValue> coerce(const ExtValue& v, const GroupSpec& target);

}  // namespace valtop
