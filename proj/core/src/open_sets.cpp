#include "valtop/open_sets.hpp"

#include <algorithm>
#include <cctype>

namespace valtop {

namespace {

// Nullopt-aware bound comparisons. Lower bounds: nullopt is -inf;
// upper bounds: nullopt is +inf.
bool lo_less(const std::optional<GroupElem>& a, const std::optional<GroupElem>& b) {
  if (!a) return b.has_value();
  if (!b) return false;
  return *a < *b;
}

bool hi_less(const std::optional<GroupElem>& a, const std::optional<GroupElem>& b) {
  if (!b) return a.has_value();
  if (!a) return false;
  return *a < *b;
}

std::optional<GroupElem> lo_max(const std::optional<GroupElem>& a,
                                const std::optional<GroupElem>& b) {
  return lo_less(a, b) ? b : a;
}

std::optional<GroupElem> hi_min(const std::optional<GroupElem>& a,
                                const std::optional<GroupElem>& b) {
  return hi_less(a, b) ? a : b;
}

std::optional<GroupElem> hi_max(const std::optional<GroupElem>& a,
                                const std::optional<GroupElem>& b) {
  return hi_less(a, b) ? b : a;
}

}  // namespace

// ---------------------------------------------------------------------------
// Interval

Interval::Interval(GroupSpec g, std::optional<GroupElem> lo,
                   std::optional<GroupElem> hi, bool with_inf)
    : group_(std::move(g)), lo_(std::move(lo)), hi_(std::move(hi)), inf_(with_inf) {
  if (lo_ && lo_->group() != group_) throw MismatchError("interval lower bound group");
  if (hi_ && hi_->group() != group_) throw MismatchError("interval upper bound group");
  if (inf_ && hi_) throw Error("infinity flag requires an unbounded upper end");
}

bool Interval::member(const ExtValue& x) const {
  if (x.group() != group_) throw MismatchError("membership across groups");
  if (x.is_infinite()) return inf_;
  const GroupElem& v = x.finite_value();
  if (lo_ && !(*lo_ < v)) return false;
  if (hi_ && !(v < *hi_)) return false;
  return true;
}

bool Interval::finite_part_empty() const {
  if (lo_ && hi_) {
    if (!(*lo_ < *hi_)) return true;
    return !between(ExtValue::finite(*lo_), ExtValue::finite(*hi_)).has_value();
  }
  // A one-sided interval misses every element only over the trivial group.
  if (lo_ || hi_) return group_.is_trivial();
  return false;  // unbounded both ways always contains zero
}

std::string Interval::str() const {
  std::string s = "]";
  s += lo_ ? lo_->str() : "-inf";
  s += ",";
  if (hi_) {
    s += hi_->str() + "[";
  } else {
    s += inf_ ? "inf]" : "inf[";
  }
  return s;
}

// ---------------------------------------------------------------------------
// OpenSet

OpenSet OpenSet::of(GroupSpec g, std::vector<Interval> parts) {
  for (const auto& p : parts)
    if (p.group() != g) throw MismatchError("interval group mismatch");

  std::vector<Interval> live;
  live.reserve(parts.size());
  for (auto& p : parts)
    if (!p.finite_part_empty() || p.with_inf()) live.push_back(std::move(p));

  std::sort(live.begin(), live.end(), [](const Interval& a, const Interval& b) {
    if (lo_less(a.lo(), b.lo())) return true;
    if (lo_less(b.lo(), a.lo())) return false;
    return hi_less(b.hi(), a.hi());  // wider first on ties
  });

  // Sweep-merge. Two parts join when the later one starts strictly
  // inside the earlier (open bounds leave the shared endpoint out, in
  // dense and discrete groups alike).
  OpenSet out(g);
  for (auto& p : live) {
    if (!out.parts_.empty()) {
      Interval& cur = out.parts_.back();
      bool join = !cur.hi() || !p.lo() || *p.lo() < *cur.hi();
      // A pure-infinity part (empty finite carrier) is a point at the
      // top; it joins only parts that already reach the top.
      if (p.finite_part_empty() && p.with_inf() && cur.hi()) join = false;
      if (join) {
        cur = Interval(g, cur.lo(), hi_max(cur.hi(), p.hi()),
                       cur.with_inf() || p.with_inf());
        continue;
      }
    }
    out.parts_.push_back(std::move(p));
  }
  return out;
}

OpenSet OpenSet::interval(const GroupSpec& g, const std::optional<GroupElem>& lo,
                          const std::optional<GroupElem>& hi, bool with_inf) {
  return of(g, {Interval(g, lo, hi, with_inf)});
}

OpenSet OpenSet::whole(const GroupSpec& g, bool with_inf) {
  return of(g, {Interval(g, std::nullopt, std::nullopt, with_inf)});
}

OpenSet OpenSet::singleton(const GroupElem& e) {
  const GroupSpec& g = e.group();
  if (g.is_trivial()) return whole(g, false);
  auto s = smallest_positive(g);
  if (!s) throw Error("singletons are not open over dense groups");
  return interval(g, e - *s, e + *s, false);
}

OpenSet OpenSet::puncture(const GroupElem& e) {
  const GroupSpec& g = e.group();
  return of(g, {Interval(g, std::nullopt, e, false),
                Interval(g, e, std::nullopt, true)});
}

bool OpenSet::has_infinity() const {
  for (const auto& p : parts_)
    if (p.with_inf()) return true;
  return false;
}

bool OpenSet::member(const ExtValue& x) const {
  for (const auto& p : parts_)
    if (p.member(x)) return true;
  return false;
}

OpenSet OpenSet::unite(const OpenSet& o) const {
  if (group_ != o.group_) throw MismatchError("union across groups");
  std::vector<Interval> all = parts_;
  all.insert(all.end(), o.parts_.begin(), o.parts_.end());
  return of(group_, std::move(all));
}

OpenSet OpenSet::intersect(const OpenSet& o) const {
  if (group_ != o.group_) throw MismatchError("intersection across groups");
  std::vector<Interval> out;
  for (const auto& a : parts_) {
    for (const auto& b : o.parts_) {
      auto lo = lo_max(a.lo(), b.lo());
      auto hi = hi_min(a.hi(), b.hi());
      bool inf = a.with_inf() && b.with_inf();  // both upper ends unbounded
      if (lo && hi && !(*lo < *hi)) continue;
      out.emplace_back(group_, lo, hi, hi ? false : inf);
    }
  }
  return of(group_, std::move(out));
}

bool OpenSet::operator==(const OpenSet& o) const {
  if (group_ != o.group_ || parts_.size() != o.parts_.size()) return false;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    const auto& a = parts_[k];
    const auto& b = o.parts_[k];
    if (a.lo().has_value() != b.lo().has_value()) return false;
    if (a.lo() && !(*a.lo() == *b.lo())) return false;
    if (a.hi().has_value() != b.hi().has_value()) return false;
    if (a.hi() && !(*a.hi() == *b.hi())) return false;
    if (a.with_inf() != b.with_inf()) return false;
  }
  return true;
}

bool OpenSet::subset_of(const OpenSet& o) const { return intersect(o) == *this; }

bool OpenSet::strictly_below(const OpenSet& o) const {
  if (group_ != o.group_) throw MismatchError("order comparison across groups");
  if (is_empty() || o.is_empty()) return true;
  if (has_infinity()) return false;  // infinity is never below anything
  bool o_all_infinite = true;
  for (const auto& p : o.parts_)
    if (!p.finite_part_empty()) o_all_infinite = false;
  if (o_all_infinite) return true;  // every finite element is below infinity
  const Interval& top = parts_.back();
  const Interval& bot = o.parts_.front();
  if (!top.hi()) return false;  // reaches arbitrarily high
  if (!bot.lo()) return false;  // o reaches arbitrarily low
  const GroupElem& h = *top.hi();
  const GroupElem& l = *bot.lo();
  // Some u >= w exists iff an element fits strictly between the facing
  // open bounds (dense: h > l; discrete: h >= l + 2 steps).
  if (!(l < h)) return true;
  return !between(ExtValue::finite(l), ExtValue::finite(h)).has_value();
}

std::string OpenSet::str() const {
  if (parts_.empty()) return "{}";
  std::string s;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += " u ";
    s += parts_[k].str();
  }
  return s;
}

// ---------------------------------------------------------------------------
// Minkowski hull

OpenSet minkowski_hull(const OpenSet& u, const OpenSet& v) {
  if (u.group() != v.group()) throw MismatchError("hull across groups");
  const GroupSpec& g = u.group();
  auto step = smallest_positive(g);
  std::vector<Interval> out;
  for (const auto& a : u.parts()) {
    for (const auto& b : v.parts()) {
      const bool a_live = !a.finite_part_empty();
      const bool b_live = !b.finite_part_empty();
      if (a_live && b_live) {
        std::optional<GroupElem> lo, hi;
        if (a.lo() && b.lo()) {
          lo = *a.lo() + *b.lo();
          if (step) lo = *lo + *step;  // x > p and y > q force x+y > p+q+s
        }
        if (a.hi() && b.hi()) {
          hi = *a.hi() + *b.hi();
          if (step) hi = *hi - *step;
        }
        out.emplace_back(g, lo, hi, hi ? false : (a.with_inf() || b.with_inf()));
      } else if ((a.with_inf() && (b_live || b.with_inf())) ||
                 (b.with_inf() && (a_live || a.with_inf()))) {
        // One side contributes only infinity; the sum is {inf}. Such
        // parts arise over the trivial group, where ]0,inf] is exactly
        // {inf}; elsewhere the ray is a sound over-approximation.
        out.emplace_back(g, GroupElem::zero(g), std::nullopt, true);
      }
    }
  }
  return OpenSet::of(g, std::move(out));
}

// ---------------------------------------------------------------------------
// ClosedSet

ClosedSet ClosedSet::of(GroupSpec g, std::vector<Component> comps) {
  for (const auto& c : comps) {
    if (c.lo && c.lo->group() != g) throw MismatchError("closed set group");
    if (c.hi && c.hi->group() != g) throw MismatchError("closed set group");
    if (c.lo && c.hi && *c.hi < *c.lo) throw Error("closed interval with hi < lo");
  }
  std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
    if (lo_less(a.lo, b.lo)) return true;
    if (lo_less(b.lo, a.lo)) return false;
    return hi_less(b.hi, a.hi);
  });
  ClosedSet out(std::move(g));
  for (auto& c : comps) {
    if (!out.comps_.empty()) {
      Component& cur = out.comps_.back();
      bool join = !cur.hi || !c.lo || !(*cur.hi < *c.lo);
      if (join) {
        cur.hi = hi_max(cur.hi, c.hi);
        continue;
      }
    }
    out.comps_.push_back(std::move(c));
  }
  return out;
}

ClosedSet ClosedSet::closed_interval(const GroupElem& lo, const GroupElem& hi) {
  return of(lo.group(), {Component{lo, hi}});
}

ClosedSet ClosedSet::point(const GroupElem& p) { return closed_interval(p, p); }

bool ClosedSet::member(const GroupElem& x) const {
  for (const auto& c : comps_) {
    if (c.lo && x < *c.lo) continue;
    if (c.hi && *c.hi < x) continue;
    return true;
  }
  return false;
}

std::string ClosedSet::str() const {
  if (comps_.empty()) return "{}";
  std::string s;
  for (std::size_t k = 0; k < comps_.size(); ++k) {
    if (k) s += " u ";
    s += "[";
    s += comps_[k].lo ? comps_[k].lo->str() : "-inf";
    s += ",";
    s += comps_[k].hi ? comps_[k].hi->str() : "inf";
    s += "]";
  }
  return s;
}

ClosedSet complement_closed(const OpenSet& u, const MonoidSpec& carrier) {
  const GroupSpec& g = u.group();
  if (g != carrier.group) throw MismatchError("carrier group mismatch");
  std::vector<ClosedSet::Component> comps;
  std::optional<GroupElem> gap_lo;  // nullopt at the very start means -inf
  bool reached_top = false;
  bool first = true;
  for (const auto& p : u.parts()) {
    if (p.finite_part_empty()) continue;
    if (p.lo()) comps.push_back({first ? std::nullopt : gap_lo, p.lo()});
    first = false;
    if (!p.hi()) {
      reached_top = true;
      break;
    }
    gap_lo = p.hi();
  }
  if (!reached_top) comps.push_back({first ? std::nullopt : gap_lo, std::nullopt});
  if (carrier.nonneg) {
    const GroupElem zero = GroupElem::zero(g);
    std::vector<ClosedSet::Component> clipped;
    for (auto& c : comps) {
      if (c.hi && *c.hi < zero) continue;
      if (!c.lo || *c.lo < zero) c.lo = zero;
      clipped.push_back(std::move(c));
    }
    comps = std::move(clipped);
  }
  return ClosedSet::of(g, std::move(comps));
}

OpenSet complement_with_infinity(const ClosedSet& k, const MonoidSpec& carrier) {
  const GroupSpec& g = k.group();
  if (g != carrier.group) throw MismatchError("carrier group mismatch");
  std::vector<Interval> parts;
  std::optional<GroupElem> cursor;
  bool first = true;
  for (const auto& c : k.components()) {
    if (c.lo) parts.emplace_back(g, first ? std::nullopt : cursor, c.lo, false);
    first = false;
    if (!c.hi) return OpenSet::of(g, std::move(parts));  // reaches the top
    cursor = c.hi;
  }
  parts.emplace_back(g, first ? std::nullopt : cursor, std::nullopt, true);
  return OpenSet::of(g, std::move(parts));
}

bool bounded_below(const ClosedSet& c, const MonoidSpec& carrier) {
  if (c.is_empty()) return true;
  if (carrier.group.is_trivial() || carrier.nonneg) return true;
  return c.components().front().lo.has_value();
}

bool bounded_above(const ClosedSet& c, const MonoidSpec& carrier) {
  if (c.is_empty()) return true;
  if (carrier.group.is_trivial()) return true;
  for (const auto& comp : c.components())
    if (!comp.hi) return false;
  return true;
}

namespace {

// Finiteness of the closed box [lo, hi] over the group's flattened
// leaves: finite iff every coordinate is pinned except possibly a
// trailing integer one.
bool closed_interval_finite(const GroupSpec& g, const GroupElem& lo,
                            const GroupElem& hi) {
  const auto& leaves = g.leaf_kinds();
  for (std::size_t k = 0; k < leaves.size(); ++k) {
    if (lo.coords()[k] == hi.coords()[k]) continue;
    if (k + 1 != leaves.size()) return false;
    return leaves[k] == GroupSpec::Kind::Integers;
  }
  return true;  // a point
}

}  // namespace

bool compactness_predicate(const ClosedSet& c, const MonoidSpec& carrier) {
  const GroupSpec& g = c.group();
  if (g != carrier.group) throw MismatchError("carrier group mismatch");
  if (g.is_trivial()) return true;
  for (const auto& comp : c.components()) {
    std::optional<GroupElem> lo = comp.lo, hi = comp.hi;
    if (!lo && carrier.nonneg) lo = GroupElem::zero(g);
    if (!lo || !hi) return false;  // unbounded over a non-trivial carrier
    if (!closed_interval_finite(g, *lo, *hi)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Topologies

std::string TopologyId::str() const {
  switch (kind) {
    case Kind::A1: return "A1";
    case Kind::A2: return "A2";
    case Kind::A3: return "A3";
    case Kind::Pinned: return "pinned(" + pin->str() + ")";
    case Kind::NotT1: return "nont1(" + pin->str() + "," + pin2->str() + ")";
  }
  throw Error("unreachable");
}

TopologyId TopologyId::parse(std::string_view text, const GroupSpec& g) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s == "A1") return a1();
  if (s == "A2") return a2();
  if (s == "A3") return a3();
  if (s.starts_with("pinned(") && s.ends_with(")")) {
    return pinned(GroupElem::parse(g, s.substr(7, s.size() - 8)));
  }
  if (s.starts_with("nont1(") && s.ends_with(")")) {
    std::string_view body = s.substr(6, s.size() - 7);
    int depth = 0;
    for (std::size_t k = 0; k < body.size(); ++k) {
      if (body[k] == '(') ++depth;
      if (body[k] == ')') --depth;
      if (body[k] == ',' && depth == 0) {
        return not_t1(GroupElem::parse(g, body.substr(0, k)),
                      GroupElem::parse(g, body.substr(k + 1)));
      }
    }
    throw ParseError("nont1 needs two elements", 6);
  }
  throw ParseError("unknown topology", 0);
}

namespace {

bool contains_lower_ray(const OpenSet& u, const MonoidSpec& carrier) {
  if (carrier.group.is_trivial()) return true;
  if (carrier.nonneg) return u.member(ExtValue::zero(carrier.group));
  return !u.is_empty() && !u.parts().front().lo().has_value();
}

bool contains_upper_ray(const OpenSet& u, const MonoidSpec& carrier) {
  if (carrier.group.is_trivial()) return true;
  return !u.is_empty() && !u.parts().back().hi().has_value() &&
         !u.parts().back().finite_part_empty();
}

}  // namespace

bool is_open_in(const OpenSet& u, const TopologyId& t, const MonoidSpec& carrier) {
  if (u.group() != carrier.group) throw MismatchError("carrier group mismatch");
  switch (t.kind) {
    case TopologyId::Kind::A1:
      return true;  // every representable set is a union of order opens
    case TopologyId::Kind::A2: {
      if (!u.has_infinity()) return true;
      ClosedSet c = complement_closed(u, carrier);
      return bounded_below(c, carrier) && bounded_above(c, carrier);
    }
    case TopologyId::Kind::A3: {
      if (!u.has_infinity()) return true;
      return compactness_predicate(complement_closed(u, carrier), carrier);
    }
    case TopologyId::Kind::Pinned: {
      if (!u.member(ExtValue::finite(*t.pin))) return true;
      return contains_lower_ray(u, carrier) && contains_upper_ray(u, carrier);
    }
    case TopologyId::Kind::NotT1: {
      if (!u.member(ExtValue::finite(*t.pin2))) return true;
      return u.member(ExtValue::finite(*t.pin));
    }
  }
  throw Error("unreachable");
}

std::pair<OpenSet, OpenSet> separate_below(const ExtValue& gamma,
                                           const ExtValue& gamma_prime) {
  if (!(gamma < gamma_prime))
    throw PreconditionError("separate_below requires gamma < gamma'");
  const GroupSpec& g = gamma.group();
  if (auto m = between(gamma, gamma_prime)) {
    const GroupElem& mid = m->finite_value();
    return {OpenSet::interval(g, std::nullopt, mid, false),
            OpenSet::interval(g, mid, std::nullopt, true)};
  }
  std::optional<GroupElem> hi;
  if (gamma_prime.is_finite()) hi = gamma_prime.finite_value();
  return {OpenSet::interval(g, std::nullopt, hi, false),
          OpenSet::interval(g, gamma.finite_value(), std::nullopt, true)};
}

OpenSet infinity_basis_a1(const GroupElem& x0) {
  return OpenSet::interval(x0.group(), x0, std::nullopt, true);
}

OpenSet infinity_basis_a2(const GroupElem& x0, const GroupElem& x1) {
  if (x1 < x0) throw PreconditionError("infinity_basis_a2 requires x0 <= x1");
  const GroupSpec& g = x0.group();
  return OpenSet::of(g, {Interval(g, std::nullopt, x0, false),
                         Interval(g, x1, std::nullopt, true)});
}

OpenSet infinity_basis_a3(const ClosedSet& compact_k, const MonoidSpec& carrier) {
  if (!compactness_predicate(compact_k, carrier))
    throw PreconditionError("A3 neighborhood needs a compact complement");
  return complement_with_infinity(compact_k, carrier);
}

OpenSet clip_to_monoid(const OpenSet& u, const MonoidSpec& carrier) {
  if (u.group() != carrier.group) throw MismatchError("carrier group mismatch");
  if (!carrier.nonneg) return u;
  const GroupElem zero = GroupElem::zero(carrier.group);
  std::vector<Interval> keep;
  for (const auto& p : u.parts()) {
    if (p.hi() && !(zero < *p.hi())) continue;  // no trace above zero
    keep.push_back(p);
  }
  return OpenSet::of(carrier.group, std::move(keep));
}

}  // namespace valtop
