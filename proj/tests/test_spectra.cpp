#include <doctest.h>

#include "helpers.hpp"
#include "valtop/spectra.hpp"

using namespace valtop;
using namespace testutil;

namespace {
const RingSpec FZ = RingSpec::fractions(RingSpec::integers());
const RingSpec P2 = RingSpec::poly2();

Valuation mono(long wx, long wy) {
  return Valuation::monomial({qrat(Rat(wx)), qrat(Rat(wy))});
}
}  // namespace

TEST_CASE("sign map on fractions") {
  RingElem three_halves = parse_elem("3/2", FZ);
  CHECK(sign_map(Valuation::padic(2), three_halves) == SignValue::Minus);
  CHECK(sign_map(Valuation::padic(3), three_halves) == SignValue::Plus);
  CHECK(sign_map(Valuation::padic(5), parse_elem("1", FZ)) == SignValue::Zero);
  // Support values count as plus.
  CHECK(sign_map(Valuation::xadic(),
                 parse_elem("(0)/(1)", RingSpec::fractions(RingSpec::poly1()))) ==
        SignValue::Plus);
}

TEST_CASE("zariski membership matrix at 3/2") {
  RingElem a = parse_elem("3/2", FZ);
  CHECK_FALSE(zariski_member(Valuation::padic(2), a));
  CHECK(zariski_member(Valuation::padic(3), a));
  CHECK(zariski_member(Valuation::padic(5), a));
  CHECK(zariski_member(Valuation::padic(7), a));
}

TEST_CASE("patch membership") {
  RingElem three = parse_elem("3", FZ);
  RingElem two = parse_elem("2", FZ);
  CHECK(patch_member(Valuation::padic(2), three, two));
  CHECK_FALSE(patch_member(Valuation::padic(2), three, three));
  // The trivial valuation assigns zero everywhere outside the support.
  CHECK_FALSE(patch_member(Valuation::trivial(GroupSpec::integers()), three, two));
}

TEST_CASE("valuation-spectrum membership on ring elements") {
  const RingSpec Zr = RingSpec::integers();
  Valuation v2 = Valuation::padic(2);
  CHECK(valspec_member(v2, parse_elem("4", Zr), parse_elem("2", Zr)));
  CHECK_FALSE(valspec_member(v2, parse_elem("2", Zr), parse_elem("0", Zr)));
  CHECK_FALSE(valspec_member(v2, parse_elem("1", Zr), parse_elem("2", Zr)));
}

TEST_CASE("normalization rescales the maximal ideal to one") {
  Valuation n = normalize(mono(2, 3));
  CHECK(n.str() == "monomial(w=[1,3/2])");
  CHECK(maximal_ideal_value(n, P2) ==
        ExtValue::finite(qrat(Rat(1))));
  CHECK(normalize(mono(1, 1)) == mono(1, 1));
  CHECK_THROWS_AS(normalize(Valuation::monomial({qrat(Rat(1)), qrat(Rat(0))})),
                  PreconditionError);
  CHECK_THROWS_AS(normalize(Valuation::trivial(GroupSpec::integers())),
                  PreconditionError);
}

TEST_CASE("normalization is idempotent and order-preserving") {
  Rng rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    Valuation nu = mono(rng.pick(1, 9), rng.pick(1, 9));
    Valuation n = normalize(nu);
    CHECK(normalize(n) == n);
    std::vector<std::pair<RingElem, RingElem>> pairs;
    for (int k = 0; k < 30; ++k)
      pairs.emplace_back(random_ring_elem(rng, P2), random_ring_elem(rng, P2));
    CHECK(equivalent_on(nu, n, pairs));
  }
}

TEST_CASE("weak membership for normalized valuations") {
  Valuation n = mono(1, 1);
  CHECK(weak_member(n, parse_elem("x^2", P2), ExtValue::finite(qrat(Rat(3, 2))),
                    WeakSide::Above));
  CHECK_FALSE(
      weak_member(n, parse_elem("y", P2), ExtValue::finite(qrat(Rat(1))), WeakSide::Above));
  CHECK(weak_member(n, parse_elem("y", P2), ExtValue::infinity(GroupSpec::rationals()),
                    WeakSide::Below));
  CHECK_THROWS_AS(weak_member(mono(2, 3), parse_elem("x", P2),
                              ExtValue::finite(qrat(Rat(1))), WeakSide::Above),
                  PreconditionError);
}

TEST_CASE("valuation-spectrum restriction matches zariski on fractions") {
  Rng rng(97);
  struct Case {
    Valuation nu;
    RingSpec ring;
  };
  const Case cases[] = {
      {Valuation::padic(2), RingSpec::integers()},
      {Valuation::padic(5), RingSpec::integers()},
      {Valuation::xadic(), RingSpec::poly1()},
      {Valuation::gauss(3, Rat(1, 2)), RingSpec::poly1()},
      {mono(1, 2), P2},
  };
  int checked = 0;
  for (const auto& c : cases) {
    RingSpec frac = RingSpec::fractions(c.ring);
    while (checked < 600) {
      RingElem a = random_ring_elem(rng, c.ring);
      RingElem b = random_ring_elem(rng, c.ring);
      if (b.is_zero()) continue;
      bool vs = valspec_member(c.nu, a, b);
      bool zar = zariski_member(c.nu, RingElem::fraction(frac, a, b));
      CHECK(vs == zar);
      if (++checked % 120 == 0) break;
    }
  }
  CHECK(checked >= 600);
}

TEST_CASE("patch refines zariski on samples") {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    RingElem a = random_ring_elem(rng, RingSpec::integers());
    RingElem b = random_ring_elem(rng, RingSpec::integers());
    if (a.is_zero() || b.is_zero()) continue;
    RingElem fa = RingElem::fraction(FZ, a, RingElem::one(RingSpec::integers()));
    RingElem fb = RingElem::fraction(FZ, b, RingElem::one(RingSpec::integers()));
    for (const auto& nu : {Valuation::padic(2), Valuation::padic(3)}) {
      if (patch_member(nu, fa, fb)) CHECK(zariski_member(nu, fa));
    }
  }
}
