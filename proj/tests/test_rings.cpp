#include <doctest.h>

#include "helpers.hpp"

using namespace valtop;
using namespace testutil;

namespace {
const RingSpec Zr = RingSpec::integers();
const RingSpec Qr = RingSpec::rationals();
const RingSpec P1 = RingSpec::poly1();
const RingSpec P2 = RingSpec::poly2();
}  // namespace

TEST_CASE("ring arithmetic: examples") {
  RingElem prod = ring_mul(parse_elem("x+1", P1), parse_elem("x-1", P1));
  CHECK(prod == parse_elem("x^2-1", P1));
  CHECK(ring_add(RingElem::integer(3), RingElem::integer(4)) == RingElem::integer(7));
  RingElem xy = parse_elem("x*y", P2);
  CHECK(ring_add(xy, xy) == parse_elem("2*x*y", P2));
  CHECK_THROWS_AS(ring_add(RingElem::integer(1), RingElem::rational(1)), MismatchError);
}

TEST_CASE("element parsing: examples") {
  CHECK(parse_elem("3/2", Qr) == RingElem::rational(Rat(3, 2)));
  CHECK(parse_elem("x^2+2*x", P1).str() == "x^2+2*x");
  RingSpec fr = RingSpec::fractions(P2);
  RingElem f = parse_elem("(x^2)/(y)", fr);
  CHECK(f.frac_num() == parse_elem("x^2", P2));
  CHECK(f.frac_den() == parse_elem("y", P2));
  CHECK(f.str() == "(x^2)/(y)");
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_elem("x^2+", P1), ParseError);
  CHECK_THROWS_AS(parse_elem("y", P1), ParseError);
  CHECK_THROWS_AS(parse_elem("3/2", Zr), ParseError);
  CHECK_THROWS_AS(parse_elem("x/0", RingSpec::fractions(P1)), ParseError);
  CHECK_THROWS_AS(parse_elem("2x", P1), ParseError);
  try {
    parse_elem("x+$", P1);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("fractions reduce to canonical form") {
  RingSpec fp1 = RingSpec::fractions(P1);
  RingElem r = parse_elem("(x^2)/(x)", fp1);
  CHECK(r.frac_num() == parse_elem("x", P1));
  CHECK(r.frac_den().is_one());

  RingSpec fz = RingSpec::fractions(Zr);
  RingElem q = parse_elem("6/4", fz);
  CHECK(q.frac_num() == RingElem::integer(3));
  CHECK(q.frac_den() == RingElem::integer(2));
  CHECK(parse_elem("(-3)/(-2)", fz) == parse_elem("3/2", fz));

  // Common monomials cancel over two variables; constants fold away.
  RingSpec fp2 = RingSpec::fractions(P2);
  CHECK(parse_elem("(x^2*y)/(x*y)", fp2) == parse_elem("x", fp2));
  CHECK(parse_elem("(x)/(2)", fp2).frac_den().is_one());
}

TEST_CASE("parse-print-parse is the identity") {
  const char* samples[] = {"x^2+2*x",     "-x^3+x-1/2", "0",   "3/2*x^2",
                           "x^2*y+3*y^2", "-x*y",       "1",   "x^4+x^2+1",
                           "2*x^2*y^2-y", "-7"};
  for (const RingSpec& ring : {P1, P2}) {
    for (const char* text : samples) {
      RingElem e = [&]() -> RingElem {
        try {
          return parse_elem(text, ring);
        } catch (const ParseError&) {
          return RingElem::zero(ring);  // y-terms in poly1
        }
      }();
      CHECK(parse_elem(e.str(), ring) == e);
    }
  }
  Rng rng(31);
  for (const RingSpec& ring : {Zr, Qr, P1, P2, RingSpec::fractions(P2)}) {
    for (int trial = 0; trial < 200; ++trial) {
      RingElem e = random_ring_elem(rng, ring);
      CHECK(parse_elem(e.str(), ring) == e);
    }
  }
}

TEST_CASE("ring laws on random elements") {
  Rng rng(37);
  for (const RingSpec& ring : {Zr, Qr, P1, P2}) {
    const RingElem one = RingElem::one(ring);
    const RingElem zero = RingElem::zero(ring);
    for (int trial = 0; trial < 150; ++trial) {
      RingElem a = random_ring_elem(rng, ring);
      RingElem b = random_ring_elem(rng, ring);
      RingElem c = random_ring_elem(rng, ring);
      CHECK(ring_mul(a, b) == ring_mul(b, a));
      CHECK(ring_mul(ring_mul(a, b), c) == ring_mul(a, ring_mul(b, c)));
      CHECK(ring_mul(a, ring_add(b, c)) == ring_add(ring_mul(a, b), ring_mul(a, c)));
      CHECK(ring_mul(a, one) == a);
      CHECK(ring_add(a, zero) == a);
    }
  }
}

TEST_CASE("ring spec grammar") {
  for (const char* s : {"Z", "Q", "poly1", "poly2", "frac(poly2)", "frac(Z)"})
    CHECK(RingSpec::parse(s).str() == s);
  CHECK_THROWS_AS(RingSpec::parse("frac(frac(Z))"), Error);
}
