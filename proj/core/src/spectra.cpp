#include "valtop/spectra.hpp"

namespace valtop {

const char* sign_name(SignValue s) {
  switch (s) {
    case SignValue::Zero: return "0";
    case SignValue::Minus: return "-";
    case SignValue::Plus: return "+";
  }
  return "?";
}

SignValue sign_map(const Valuation& nu, const RingElem& a) {
  ExtValue v = a.ring().is_fractions() ? evaluate_fraction(nu, a) : evaluate(nu, a);
  const ExtValue zero = ExtValue::zero(nu.value_group());
  if (v == zero) return SignValue::Zero;
  return v < zero ? SignValue::Minus : SignValue::Plus;
}

bool zariski_member(const Valuation& nu, const RingElem& a) {
  return sign_map(nu, a) != SignValue::Minus;
}

bool patch_member(const Valuation& nu, const RingElem& a, const RingElem& b) {
  return zariski_member(nu, a) && sign_map(nu, b) == SignValue::Plus;
}

bool valspec_member(const Valuation& nu, const RingElem& a, const RingElem& b) {
  ExtValue va = evaluate(nu, a), vb = evaluate(nu, b);
  return !vb.is_infinite() && !(va < vb);
}

Valuation normalize(const Valuation& nu) {
  const RingSpec ring = RingSpec::poly2();
  if (!is_centered(nu, ring))
    throw PreconditionError("normalization needs a centered valuation");
  ExtValue m = maximal_ideal_value(nu, ring);
  if (m.is_infinite() || m.finite_value().group().leaf_count() != 1 ||
      m.finite_value().group().leaf_kinds()[0] != GroupSpec::Kind::Rationals)
    throw PreconditionError("normalization needs a rational-valued valuation");
  const Rat c = m.finite_value().coords()[0];
  if (c == 1) return nu;
  return nu.scaled_by(Rat(1) / c);
}

bool weak_member(const Valuation& nu, const RingElem& a, const ExtValue& alpha,
                 WeakSide side) {
  ExtValue m = maximal_ideal_value(nu, RingSpec::poly2());
  if (!(m == ExtValue::finite(GroupElem(nu.value_group(), {Rat(1)}))))
    throw PreconditionError("weak membership expects a normalized valuation");
  ExtValue v = evaluate(nu, a);
  auto cmp = coerce(alpha, nu.value_group());
  if (!cmp) throw MismatchError("threshold lies outside the value group");
  return side == WeakSide::Above ? v > *cmp : v < *cmp;
}

}  // namespace valtop
