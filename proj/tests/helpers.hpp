#pragma once

// Test-only oracles and generators. The oracles re-derive expected
// values by brute force, independent of the library's own evaluation
// paths.

#include <random>
#include <vector>

#include "valtop/closeness.hpp"
#include "valtop/open_sets.hpp"
#include "valtop/rings.hpp"
#include "valtop/valuations.hpp"

namespace testutil {

using valtop::ExtValue;
using valtop::GroupElem;
using valtop::GroupSpec;
using valtop::Int;
using valtop::Interval;
using valtop::OpenSet;
using valtop::Poly1Coeffs;
using valtop::Poly2Coeffs;
using valtop::Rat;
using valtop::RingElem;
using valtop::RingSpec;

// Multiplicity of p in n by repeated division.
inline Int padic_oracle(const Int& p, Int n) {
  if (n == 0) throw valtop::Error("oracle: zero has no finite multiplicity");
  if (n < 0) n = -n;
  Int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline Rat padic_oracle_rat(const Int& p, const Rat& q) {
  return Rat(padic_oracle(p, numerator(q)) - padic_oracle(p, denominator(q)));
}

// Gauss value as a bare minimum over monomials.
inline Rat gauss_oracle(const Int& p, const Rat& gamma, const Poly1Coeffs& poly) {
  bool first = true;
  Rat best = 0;
  for (const auto& [e, c] : poly) {
    Rat v = padic_oracle_rat(p, c) + Rat(e) * gamma;
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  if (first) throw valtop::Error("oracle: zero polynomial");
  return best;
}

// Monomial value over rational weights as a bare minimum.
inline Rat monomial_oracle(const Rat& wx, const Rat& wy, const Poly2Coeffs& poly) {
  bool first = true;
  Rat best = 0;
  for (const auto& [e, c] : poly) {
    Rat v = Rat(e.first) * wx + Rat(e.second) * wy;
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  if (first) throw valtop::Error("oracle: zero polynomial");
  return best;
}

inline GroupElem zint(long long n) {
  return GroupElem(GroupSpec::integers(), {Rat(n)});
}
inline GroupElem qrat(const Rat& q) {
  return GroupElem(GroupSpec::rationals(), {q});
}
inline GroupElem lexzz(long long a, long long b) {
  return GroupElem(GroupSpec::lex(GroupSpec::integers(), GroupSpec::integers()),
                   {Rat(a), Rat(b)});
}

inline ExtValue fin(const GroupElem& e) { return ExtValue::finite(e); }

// Every element of lex(Z,Z) inside a coordinate window.
inline std::vector<GroupElem> lexzz_window(int lo, int hi) {
  std::vector<GroupElem> out;
  for (int a = lo; a <= hi; ++a)
    for (int b = lo; b <= hi; ++b) out.push_back(lexzz(a, b));
  return out;
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  long pick(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(eng);
  }
  Rat rat(long bound) {
    long num = pick(-bound, bound);
    long den = pick(1, 6);
    return Rat(num, den);
  }
  Rat positive_rat(long bound) {
    long num = pick(1, bound);
    long den = pick(1, 6);
    return Rat(num, den);
  }
};

inline GroupElem random_group_elem(Rng& rng, const GroupSpec& g, long bound) {
  std::vector<Rat> coords;
  for (auto kind : g.leaf_kinds())
    coords.push_back(kind == GroupSpec::Kind::Integers ? Rat(rng.pick(-bound, bound))
                                                       : rng.rat(bound));
  return GroupElem(g, std::move(coords));
}

inline ExtValue random_value(Rng& rng, const GroupSpec& g, long bound, bool allow_inf) {
  if (allow_inf && rng.pick(0, 7) == 0) return ExtValue::infinity(g);
  return ExtValue::finite(random_group_elem(rng, g, bound));
}

inline RingElem random_ring_elem(Rng& rng, const RingSpec& ring, long bound = 9) {
  switch (ring.kind()) {
    case RingSpec::Kind::Integers:
      return RingElem::integer(Int(rng.pick(-bound * bound, bound * bound)));
    case RingSpec::Kind::Rationals:
      return RingElem::rational(rng.rat(bound * bound));
    case RingSpec::Kind::Poly1: {
      Poly1Coeffs c;
      long terms = rng.pick(0, 4);
      for (long k = 0; k < terms; ++k) {
        Rat coeff = rng.rat(bound);
        if (coeff != 0) c[static_cast<int>(rng.pick(0, 5))] = coeff;
      }
      return RingElem::poly1(std::move(c));
    }
    case RingSpec::Kind::Poly2: {
      Poly2Coeffs c;
      long terms = rng.pick(0, 4);
      for (long k = 0; k < terms; ++k) {
        Rat coeff = rng.rat(bound);
        if (coeff != 0)
          c[{static_cast<int>(rng.pick(0, 3)), static_cast<int>(rng.pick(0, 3))}] = coeff;
      }
      return RingElem::poly2(std::move(c));
    }
    case RingSpec::Kind::Fractions: {
      RingElem num = random_ring_elem(rng, ring.base(), bound);
      RingElem den = random_ring_elem(rng, ring.base(), bound);
      if (den.is_zero()) den = RingElem::one(ring.base());
      return RingElem::fraction(ring, num, den);
    }
  }
  throw valtop::Error("unreachable");
}

// A random normalized open set with integer endpoints.
inline OpenSet random_open(Rng& rng, const GroupSpec& g, long bound) {
  std::vector<Interval> parts;
  long n = rng.pick(0, 3);
  for (long k = 0; k < n; ++k) {
    std::optional<GroupElem> lo, hi;
    if (rng.pick(0, 3) > 0) lo = random_group_elem(rng, g, bound);
    bool with_inf = false;
    if (rng.pick(0, 3) > 0)
      hi = random_group_elem(rng, g, bound);
    else
      with_inf = rng.pick(0, 1) == 1;
    if (lo && hi && *hi < *lo) std::swap(*lo, *hi);
    parts.emplace_back(g, lo, hi, with_inf);
  }
  return OpenSet::of(g, std::move(parts));
}

// Finite members of an open set over Z inside [-window, window], plus
// infinity when flagged.
inline std::vector<ExtValue> members_in_window_z(const OpenSet& u, long window) {
  std::vector<ExtValue> out;
  const GroupSpec z = GroupSpec::integers();
  for (long k = -window; k <= window; ++k) {
    ExtValue v = fin(zint(k));
    if (u.member(v)) out.push_back(v);
  }
  if (u.has_infinity()) out.push_back(ExtValue::infinity(z));
  return out;
}

// A valuation table with one deliberately wrong coordinate. The
// domain closes over a few products and sums so the corruption is
// always checkable.
inline valtop::FnTable make_corrupted_table(Rng& rng, const valtop::Valuation& backing,
                                            bool nonneg) {
  using valtop::FnTable;
  const RingSpec ring = backing.natural_ring();
  const GroupSpec group = backing.value_group();
  const valtop::MonoidSpec monoid{group, nonneg};

  std::vector<RingElem> domain;
  auto push = [&](const RingElem& e) {
    for (const auto& d : domain)
      if (d == e) return;
    domain.push_back(e);
  };
  std::vector<RingElem> base;
  for (int k = 0; k < 4; ++k) {
    RingElem e = random_ring_elem(rng, ring, 5);
    if (!e.is_zero()) base.push_back(e);
  }
  base.push_back(RingElem::one(ring));
  for (const auto& e : base) push(e);
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size() && domain.size() < 18; ++j) {
      push(valtop::ring_mul(base[i], base[j]));
      push(valtop::ring_add(base[i], base[j]));
    }
  push(RingElem::zero(ring));

  for (int attempt = 0; attempt < 64; ++attempt) {
    FnTable t(ring, monoid, backing);
    for (const auto& e : domain) t.set(e, evaluate(backing, e));
    const RingElem& target = domain[rng.pick(0, static_cast<long>(domain.size()) - 1)];
    ExtValue truth = evaluate(backing, target);
    ExtValue wrong = truth;
    for (int k = 0; k < 32 && wrong == truth; ++k) {
      wrong = random_value(rng, group, 9, true);
      if (nonneg && wrong.is_finite() && wrong.finite_value().negative()) wrong = truth;
    }
    if (wrong == truth) continue;
    t.set(target, wrong);
    if (valtop::check_axioms(t)) return t;
  }
  throw valtop::Error("corrupted-table generator failed to produce a violation");
}

// Enumerates every table over the cylinder's coordinates with values
// drawn from the constraint opens (integer window plus infinity) and
// checks that each one violates the certified axiom.
inline bool exclusion_exhaustive(const valtop::Certificate& cert, long window) {
  using valtop::ViolationReport;
  const GroupSpec z = GroupSpec::integers();
  if (!(cert.monoid.group == z)) throw valtop::Error("oracle handles integer groups");

  const auto& cons = cert.cylinder.constraints;
  std::vector<std::vector<ExtValue>> choices;
  for (const auto& [elem, open] : cons) choices.push_back(members_in_window_z(open, window));

  auto value_at = [&](const std::vector<std::size_t>& pick,
                      const RingElem& e) -> const ExtValue* {
    for (std::size_t k = 0; k < cons.size(); ++k)
      if (cons[k].first == e) return &choices[k][pick[k]];
    return nullptr;
  };

  std::vector<std::size_t> pick(cons.size(), 0);
  for (;;) {
    bool violates = false;
    switch (cert.violation.axiom) {
      case ViolationReport::Axiom::V1: {
        const RingElem &a = cert.violation.witnesses[0], &b = cert.violation.witnesses[1];
        const ExtValue* ga = value_at(pick, a);
        const ExtValue* gb = value_at(pick, b);
        const ExtValue* gab = value_at(pick, valtop::ring_mul(a, b));
        violates = ga && gb && gab && !(*gab == *ga + *gb);
        break;
      }
      case ViolationReport::Axiom::V2: {
        const RingElem &a = cert.violation.witnesses[0], &b = cert.violation.witnesses[1];
        const ExtValue* ga = value_at(pick, a);
        const ExtValue* gb = value_at(pick, b);
        const ExtValue* gsum = value_at(pick, valtop::ring_add(a, b));
        violates = ga && gb && gsum && (*gsum < (*ga < *gb ? *ga : *gb));
        break;
      }
      case ViolationReport::Axiom::V3: {
        const RingElem& w = cert.violation.witnesses[0];
        const ExtValue* gw = value_at(pick, w);
        if (gw)
          violates = w.is_one() ? !(*gw == ExtValue::zero(z)) : !gw->is_infinite();
        break;
      }
    }
    if (!violates) return false;
    // Advance the odometer.
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k == pick.size()) return true;
  }
}

}  // namespace testutil
