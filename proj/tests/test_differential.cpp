#include <doctest.h>

#include "helpers.hpp"
#include "valtop/serialize.hpp"
#include "valtop/spectra.hpp"
#include "valtop/topology_compare.hpp"

// Differential checks: independent first-principles characterizations
// over bounded integer windows against the implementation's decisions.

using namespace valtop;
using namespace testutil;

namespace {
const GroupSpec Z = GroupSpec::integers();
const MonoidSpec FULL_Z{Z, false};

long max_abs_endpoint(const OpenSet& u) {
  long b = 0;
  auto widen = [&](const std::optional<GroupElem>& e) {
    if (!e) return;
    Rat c = e->coords()[0];
    if (c < 0) c = -c;
    long v = numerator(c).convert_to<long>();
    if (v > b) b = v;
  };
  for (const auto& p : u.parts()) {
    widen(p.lo());
    widen(p.hi());
  }
  return b;
}

OpenSet two_ray(long x0, long x1) { return infinity_basis_a2(zint(x0), zint(x1)); }

}  // namespace

TEST_CASE("circle openness equals containment of an extreme two-ray neighborhood") {
  Rng rng(1201);
  for (int trial = 0; trial < 400; ++trial) {
    OpenSet u = random_open(rng, Z, 8);
    if (!u.has_infinity()) continue;
    // A basic neighborhood shrinks as its excluded box grows, so one
    // box past every endpoint decides the existential.
    long b = max_abs_endpoint(u) + 1;
    bool first_principles = two_ray(-b, b).subset_of(u);
    CHECK(is_open_in(u, TopologyId::a2(), FULL_Z) == first_principles);
    // Over the integers bounded complements are finite, so the
    // compactification agrees with the circle on every sample.
    CHECK(is_open_in(u, TopologyId::a3(), FULL_Z) ==
          is_open_in(u, TopologyId::a2(), FULL_Z));
  }
}

TEST_CASE("pinned openness equals containment of both extreme rays") {
  Rng rng(1202);
  const GroupElem pin = zint(3);
  const TopologyId topo = TopologyId::pinned(pin);
  for (int trial = 0; trial < 400; ++trial) {
    OpenSet u = random_open(rng, Z, 8);
    long b = max_abs_endpoint(u) + 1;
    bool first_principles =
        !u.member(fin(pin)) ||
        (OpenSet::interval(Z, std::nullopt, zint(-b), false).subset_of(u) &&
         OpenSet::interval(Z, zint(b), std::nullopt, false).subset_of(u));
    CHECK(is_open_in(u, topo, FULL_Z) == first_principles);
  }
}

TEST_CASE("complement agrees pointwise with negated membership") {
  Rng rng(1203);
  for (int trial = 0; trial < 200; ++trial) {
    OpenSet u = random_open(rng, Z, 8);
    ClosedSet c = complement_closed(u, FULL_Z);
    for (long k = -20; k <= 20; ++k)
      CHECK(c.member(zint(k)) == !u.member(fin(zint(k))));
  }
  // Non-negative carriers clip the complement at zero.
  const MonoidSpec nn{Z, true};
  for (int trial = 0; trial < 200; ++trial) {
    OpenSet u = random_open(rng, Z, 8);
    ClosedSet c = complement_closed(u, nn);
    for (long k = 0; k <= 20; ++k)
      CHECK(c.member(zint(k)) == !u.member(fin(zint(k))));
    for (long k = -20; k < 0; ++k) CHECK_FALSE(c.member(zint(k)));
  }
}

TEST_CASE("bounded hulls over Z equal the exact sum set") {
  Rng rng(1204);
  for (int trial = 0; trial < 200; ++trial) {
    // Bounded operands only: every part gets two finite endpoints.
    auto bounded = [&](long spread) {
      std::vector<Interval> parts;
      long n = rng.pick(1, 3);
      for (long k = 0; k < n; ++k) {
        long lo = rng.pick(-spread, spread);
        long hi = lo + rng.pick(0, 6);
        parts.emplace_back(Z, zint(lo), zint(hi), false);
      }
      return OpenSet::of(Z, parts);
    };
    OpenSet a = bounded(8), b = bounded(8);
    OpenSet hull = minkowski_hull(a, b);
    OpenSet sums = OpenSet::empty(Z);
    for (const auto& x : members_in_window_z(a, 20))
      for (const auto& y : members_in_window_z(b, 20))
        sums = sums.unite(OpenSet::singleton((x + y).finite_value()));
    CHECK(hull == sums);
  }
}

TEST_CASE("normalization is canonical: singleton reconstruction") {
  Rng rng(1205);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Interval> parts;
    long n = rng.pick(0, 4);
    for (long k = 0; k < n; ++k) {
      long lo = rng.pick(-10, 10);
      parts.emplace_back(Z, zint(lo), zint(lo + rng.pick(0, 5)), false);
    }
    OpenSet u = OpenSet::of(Z, parts);
    OpenSet rebuilt = OpenSet::empty(Z);
    for (const auto& x : members_in_window_z(u, 20))
      rebuilt = rebuilt.unite(OpenSet::singleton(x.finite_value()));
    CHECK(u == rebuilt);
  }
}

TEST_CASE("rank-two monomial valuations work end to end") {
  const GroupSpec lqq = GroupSpec::lex(GroupSpec::rationals(), GroupSpec::rationals());
  Valuation nu = Valuation::parse("monomial(w=[(1,0),(0,1)],group=lex(Q,Q))");
  const RingSpec ring = RingSpec::poly2();

  // x carries the dominant weight, y the subordinate one.
  CHECK(evaluate(nu, parse_elem("x", ring)) ==
        ExtValue::finite(GroupElem(lqq, {Rat(1), Rat(0)})));
  CHECK(evaluate(nu, parse_elem("y^3", ring)) ==
        ExtValue::finite(GroupElem(lqq, {Rat(0), Rat(3)})));
  CHECK(evaluate(nu, parse_elem("x+y^3", ring)) ==
        ExtValue::finite(GroupElem(lqq, {Rat(0), Rat(3)})));

  Rng rng(1206);
  for (int trial = 0; trial < 300; ++trial) {
    RingElem a = random_ring_elem(rng, ring);
    RingElem b = random_ring_elem(rng, ring);
    CHECK(evaluate(nu, ring_mul(a, b)) == evaluate(nu, a) + evaluate(nu, b));
    ExtValue low = evaluate(nu, a) < evaluate(nu, b) ? evaluate(nu, a) : evaluate(nu, b);
    CHECK(!(evaluate(nu, ring_add(a, b)) < low));
  }

  // Corrupted tables over the rank-two carrier still certify.
  for (int k = 0; k < 10; ++k) {
    FnTable f = make_corrupted_table(rng, nu, false);
    auto v = check_axioms(f);
    REQUIRE(v);
    Certificate cert = synthesize_separating_open(f, *v);
    auto probes = standard_probes(ring, lqq, 50);
    CHECK(verify_certificate(cert, f, probes).pass());
    Certificate back = certificate_from_json(to_json(cert));
    CHECK(to_json(back) == to_json(cert));
  }

  CHECK(is_centered(nu, ring));
  CHECK(maximal_ideal_value(nu, ring) ==
        ExtValue::finite(GroupElem(lqq, {Rat(0), Rat(1)})));
  // Rank-two values cannot be rescaled into the rationals.
  CHECK_THROWS_AS(normalize(nu), PreconditionError);
}

TEST_CASE("refinement verdicts survive adversarial sample injections") {
  Rng rng(1207);
  const MonoidSpec carriers[] = {{Z, false},
                                 {GroupSpec::rationals(), false},
                                 {GroupSpec::lex(Z, Z), false},
                                 {Z, true}};
  for (const auto& carrier : carriers) {
    std::vector<OpenSet> samples = standard_sample_suite(carrier);
    for (int k = 0; k < 200; ++k)
      samples.push_back(random_open(rng, carrier.group, 12));
    CHECK(refines(TopologyId::a1(), TopologyId::a2(), carrier, samples).consistent);
    CHECK(refines(TopologyId::a2(), TopologyId::a3(), carrier, samples).consistent);
    CHECK(refines(TopologyId::a1(), TopologyId::a3(), carrier, samples).consistent);
  }
}
