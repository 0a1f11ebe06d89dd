#include "valtop/topology_compare.hpp"

#include "valtop/valuations.hpp"

namespace valtop {

bool is_discrete(const GroupSpec& g) {
  return g.is_trivial() || smallest_positive(g).has_value();
}

bool completeness_flag(const GroupSpec& g) {
  switch (g.kind()) {
    case GroupSpec::Kind::Integers:
    case GroupSpec::Kind::Trivial:
      return true;
    case GroupSpec::Kind::Rationals:
      return false;
    case GroupSpec::Kind::Lex:
      return is_discrete(g.left()) && completeness_flag(g.left()) &&
             is_discrete(g.right()) && completeness_flag(g.right());
  }
  throw Error("unreachable");
}

RefinementVerdict refines(const TopologyId& fine, const TopologyId& coarse,
                          const MonoidSpec& carrier,
                          const std::vector<OpenSet>& samples) {
  RefinementVerdict out;
  for (const auto& s : samples) {
    ++out.samples_checked;
    const bool in_coarse = is_open_in(s, coarse, carrier);
    const bool in_fine = is_open_in(s, fine, carrier);
    if (in_coarse && !in_fine && !out.refutation) {
      out.consistent = false;
      out.refutation = s;
    }
    if (in_fine && !in_coarse && !out.strict_witness) out.strict_witness = s;
  }
  return out;
}

EqualityVerdict gamma_prime_equality(const GroupSpec& g,
                                     const std::vector<OpenSet>& samples) {
  const MonoidSpec carrier{g, true};
  EqualityVerdict out;
  for (const auto& s : samples) {
    ++out.samples_checked;
    const bool a1 = is_open_in(s, TopologyId::a1(), carrier);
    const bool a2 = is_open_in(s, TopologyId::a2(), carrier);
    if (a1 != a2 && out.equal) {
      out.equal = false;
      out.witness = s;
      out.witness_side = a1 ? "A1" : "A2";
    }
  }
  return out;
}

std::vector<OpenSet> standard_sample_suite(const MonoidSpec& carrier) {
  const GroupSpec& g = carrier.group;
  std::vector<OpenSet> out;
  out.push_back(OpenSet::empty(g));
  out.push_back(OpenSet::whole(g, false));
  out.push_back(OpenSet::whole(g, true));
  out.push_back(OpenSet::puncture(GroupElem::zero(g)));
  if (g.is_trivial()) {
    out.push_back(OpenSet::interval(g, GroupElem::zero(g), std::nullopt, true));
    return out;
  }

  const GroupElem unit = *unit_positive(g);
  auto emb = [&](int k) {
    GroupElem v = GroupElem::zero(g);
    const GroupElem u = unit;
    for (int i = 0; i < (k > 0 ? k : -k); ++i) v = k > 0 ? v + u : v - u;
    return v;
  };
  std::vector<GroupElem> anchors;
  if (carrier.nonneg) {
    for (int k : {0, 1, 2, 5, 9}) anchors.push_back(emb(k));
  } else {
    for (int k : {-6, -2, 0, 1, 5}) anchors.push_back(emb(k));
  }
  if (auto s = smallest_positive(g); s && !(*s == unit)) {
    anchors.push_back(*s);      // reaches into the fine coordinate of lex groups
    anchors.push_back(emb(2) + *s);
  }

  // Bounded intervals.
  for (std::size_t i = 0; i < anchors.size(); ++i)
    for (std::size_t j = i + 1; j < anchors.size(); ++j)
      if (anchors[i] < anchors[j])
        out.push_back(OpenSet::interval(g, anchors[i], anchors[j], false));
  // Rays.
  for (const auto& a : anchors) {
    out.push_back(OpenSet::interval(g, std::nullopt, a, false));
    out.push_back(OpenSet::interval(g, a, std::nullopt, false));
    out.push_back(OpenSet::interval(g, a, std::nullopt, true));
  }
  // Two-ray infinity neighborhoods.
  std::size_t two_rays = 0;
  for (std::size_t i = 0; i < anchors.size() && two_rays < 8; ++i) {
    for (std::size_t j = i; j < anchors.size() && two_rays < 8; ++j) {
      if (!(anchors[i] < anchors[j]) && i != j) continue;
      out.push_back(OpenSet::of(
          g, {Interval(g, std::nullopt, anchors[i], false),
              Interval(g, anchors[j], std::nullopt, true)}));
      ++two_rays;
    }
  }
  // Punctures and singletons.
  out.push_back(OpenSet::puncture(emb(1)));
  if (smallest_positive(g)) {
    out.push_back(OpenSet::singleton(GroupElem::zero(g)));
    out.push_back(OpenSet::singleton(emb(2)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cover reports

bool CoverReport::all_pass() const {
  for (const auto& p : points)
    if (!p.covered) return false;
  for (const auto& s : subfamilies)
    if (!s.verified) return false;
  return !points.empty() || !subfamilies.empty();
}

CoverReport cover_no_smallest(const GroupSpec& g, const std::vector<ExtValue>& points,
                              const std::vector<std::vector<GroupElem>>& subfamilies) {
  if (g.is_trivial()) throw PreconditionError("the ray cover needs a non-trivial group");
  const GroupElem step = smallest_positive(g).value_or(*unit_positive(g));
  CoverReport report;
  report.family = "{ ]x,inf] : x in the group }";

  for (const auto& p : points) {
    CoverReport::PointCheck check;
    check.point = p.str();
    GroupElem x = p.is_finite() ? p.finite_value() - step : GroupElem::zero(g);
    OpenSet member = OpenSet::interval(g, x, std::nullopt, true);
    check.covering_member = "]" + x.str() + ",inf]";
    check.covered = member.member(p);
    report.points.push_back(std::move(check));
  }

  for (const auto& fam : subfamilies) {
    CoverReport::SubfamilyCheck check;
    if (fam.empty()) throw PreconditionError("empty subfamily");
    GroupElem least = fam[0];
    std::string desc;
    for (const auto& x : fam) {
      if (!desc.empty()) desc += ", ";
      desc += "]" + x.str() + ",inf]";
      if (x < least) least = x;
    }
    check.members = desc;
    GroupElem missed = least - step;  // one step below the least index
    check.missed_point = missed.str();
    bool in_any = false;
    for (const auto& x : fam)
      if (OpenSet::interval(g, x, std::nullopt, true).member(ExtValue::finite(missed)))
        in_any = true;
    check.verified = !in_any;
    report.subfamilies.push_back(std::move(check));
  }
  return report;
}

// ---------------------------------------------------------------------------
// CutSet

namespace {

Rat eval_poly1_at(const RingElem& poly, const Rat& q) {
  Rat acc = 0;
  for (const auto& [e, c] : poly.as_poly1()) {
    Rat power = 1;
    for (int k = 0; k < e; ++k) power *= q;
    acc += c * power;
  }
  return acc;
}

}  // namespace

CutSet::CutSet(RingElem poly, Rat member, Rat upper)
    : poly_(std::move(poly)), member_(std::move(member)), upper_(std::move(upper)) {}

CutSet CutSet::sqrt2() {
  return CutSet(parse_elem("x^2-2", RingSpec::poly1()), Rat(1), Rat(3, 2));
}

CutSet CutSet::from_poly(RingElem poly1) {
  if (poly1.ring() != RingSpec::poly1())
    throw PreconditionError("cut sets are described by univariate polynomials");
  // Canonical member: first k in 1, 1/2, 1/4, ... with p(k) < 0.
  std::optional<Rat> member;
  Rat probe = 1;
  for (int k = 0; k < 32 && !member; ++k) {
    if (eval_poly1_at(poly1, probe) < 0) member = probe;
    probe /= 2;
  }
  if (!member) throw PreconditionError("cut region has no sampled member");
  // Canonical upper bound: first power of two with p > 0, halved toward
  // the boundary a few times.
  std::optional<Rat> upper;
  probe = 1;
  for (int k = 0; k < 64 && !upper; ++k) {
    if (eval_poly1_at(poly1, probe) > 0) upper = probe;
    probe *= 2;
  }
  if (!upper) throw PreconditionError("cut region has no sampled upper bound");
  Rat lo = *member, hi = *upper;
  for (int k = 0; k < 8; ++k) {
    Rat mid = (lo + hi) / 2;
    if (eval_poly1_at(poly1, mid) > 0)
      hi = mid;
    else
      lo = mid;
  }
  return CutSet(std::move(poly1), *member, hi);
}

bool CutSet::member(const Rat& q) const {
  return q > 0 && eval_poly1_at(poly_, q) < 0;
}

bool CutSet::upper_bound(const Rat& q) const {
  return q > 0 && eval_poly1_at(poly_, q) > 0 && q > member_ / 2;
}

std::string CutSet::str() const {
  return "{ q > 0 : " + poly_.str() + " < 0 }";
}

CoverReport cover_incomplete(const CutSet& s, const std::vector<std::optional<Rat>>& points,
                             const std::vector<std::vector<std::pair<Rat, Rat>>>&
                                 subfamilies) {
  if (!s.member(s.canonical_member()))
    throw PreconditionError("cut set canonical member fails its own test");
  if (!s.upper_bound(s.canonical_upper()))
    throw PreconditionError("cut set canonical upper bound fails its own test");

  CoverReport report;
  report.family = "{ {inf} u Q \\ [x0,x1] : x0 in S, x1 >= S } with S = " + s.str();
  auto in_member = [&](const std::optional<Rat>& x, const Rat& x0, const Rat& x1) {
    if (!x) return true;  // infinity lies in every member
    return *x < x0 || *x > x1;
  };

  for (const auto& p : points) {
    CoverReport::PointCheck check;
    check.point = p ? rat_str(*p) : "inf";
    Rat x0 = s.canonical_member(), x1 = s.canonical_upper();
    if (p) {
      if (s.upper_bound(*p)) {
        // Bisect a bound x1 with S <= x1 < p.
        Rat lo = s.canonical_member(), hi = *p;
        for (int k = 0; k < 128; ++k) {
          Rat mid = (lo + hi) / 2;
          if (s.upper_bound(mid)) {
            x1 = mid;
            break;
          }
          lo = mid;
        }
      } else if (!(*p < s.canonical_member())) {
        // Inside the cut region: bisect a member x0 above p.
        Rat lo = *p, hi = s.canonical_upper();
        for (int k = 0; k < 128; ++k) {
          Rat mid = (lo + hi) / 2;
          if (s.member(mid) && mid > *p) {
            x0 = mid;
            break;
          }
          hi = mid;
        }
      }
    }
    check.covering_member = "{inf} u Q \\ [" + rat_str(x0) + "," + rat_str(x1) + "]";
    check.covered = s.member(x0) && s.upper_bound(x1) && in_member(p, x0, x1);
    report.points.push_back(std::move(check));
  }

  for (const auto& fam : subfamilies) {
    if (fam.empty()) throw PreconditionError("empty subfamily");
    CoverReport::SubfamilyCheck check;
    Rat max_x0 = fam[0].first, min_x1 = fam[0].second;
    std::string desc;
    for (const auto& [x0, x1] : fam) {
      if (!s.member(x0) || !s.upper_bound(x1))
        throw PreconditionError("subfamily member indices escape the cut");
      if (!desc.empty()) desc += ", ";
      desc += "[" + rat_str(x0) + "," + rat_str(x1) + "]";
      if (x0 > max_x0) max_x0 = x0;
      if (x1 < min_x1) min_x1 = x1;
    }
    check.members = desc;
    const Rat missed = (max_x0 + min_x1) / 2;
    check.missed_point = rat_str(missed);
    bool escaped = false;
    for (const auto& [x0, x1] : fam)
      if (missed < x0 || missed > x1) escaped = true;
    check.verified = !escaped;
    report.subfamilies.push_back(std::move(check));
  }
  return report;
}

}  // namespace valtop
