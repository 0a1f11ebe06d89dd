#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "valtop/numbers.hpp"
#include "valtop/errors.hpp"

namespace valtop {

/// Supported coefficient domains: Z, Q, Q[x], Q[x,y] and the fraction
/// field of any of those four.
class RingSpec {
 public:
  enum class Kind { Integers, Rationals, Poly1, Poly2, Fractions };

  RingSpec() : kind_(Kind::Integers) {}
  static RingSpec integers() { return RingSpec(Kind::Integers); }
  static RingSpec rationals() { return RingSpec(Kind::Rationals); }
  static RingSpec poly1() { return RingSpec(Kind::Poly1); }
  static RingSpec poly2() { return RingSpec(Kind::Poly2); }
  static RingSpec fractions(const RingSpec& base);

  Kind kind() const { return kind_; }
  bool is_fractions() const { return kind_ == Kind::Fractions; }
  /// The underlying domain (identity for non-fraction rings).
  RingSpec base() const { return is_fractions() ? *inner_ : *this; }

  bool operator==(const RingSpec& o) const;
  bool operator!=(const RingSpec& o) const { return !(*this == o); }

  /// Grammar: Z | Q | poly1 | poly2 | frac(<base>)
  std::string str() const;
  static RingSpec parse(std::string_view text);

 private:
  explicit RingSpec(Kind k) : kind_(k) {}
  Kind kind_;
  std::shared_ptr<const RingSpec> inner_;
};

/// Sparse polynomials with exact rational coefficients. Zero
/// coefficients never appear in the maps.
using Poly1Coeffs = std::map<int, Rat>;                  // exponent -> coeff
using Poly2Coeffs = std::map<std::pair<int, int>, Rat>;  // (deg x, deg y) -> coeff

/// An exact element of one of the supported rings, kept in canonical
/// form, so equality is syntactic.
class RingElem {
 public:
  static RingElem integer(Int n);
  static RingElem rational(Rat q);
  static RingElem poly1(Poly1Coeffs c);
  static RingElem poly2(Poly2Coeffs c);
  /// Canonicalizes: gcd-reduced over Z and Q[x]; common monomial and
  /// leading-coefficient normalization over Q[x,y]; constant
  /// denominators fold away.
  static RingElem fraction(const RingSpec& spec, RingElem num, RingElem den);

  static RingElem zero(const RingSpec& spec);
  static RingElem one(const RingSpec& spec);

  const RingSpec& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;

  const Int& as_int() const;
  const Rat& as_rat() const;
  const Poly1Coeffs& as_poly1() const;
  const Poly2Coeffs& as_poly2() const;
  const RingElem& frac_num() const;
  const RingElem& frac_den() const;

  bool operator==(const RingElem& o) const;
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  /// Canonical text form; parse(str()) reproduces the element.
  std::string str() const;

 private:
  struct Frac {
    std::shared_ptr<const RingElem> num, den;
  };
  RingSpec ring_;
  std::variant<Int, Rat, Poly1Coeffs, Poly2Coeffs, Frac> v_;
};

RingElem ring_add(const RingElem& a, const RingElem& b);
RingElem ring_sub(const RingElem& a, const RingElem& b);
RingElem ring_mul(const RingElem& a, const RingElem& b);
RingElem ring_neg(const RingElem& a);

/// Parses the element grammar: integers, p/q, polynomials in x and y
/// with + - * / ^ and parentheses. Expressions are evaluated in the
/// fraction field of the base ring and must land in the target ring;
/// positions accompany every syntax error.
RingElem parse_elem(std::string_view text, const RingSpec& spec);

}  // namespace valtop
