#include "valtop/closeness.hpp"

#include <algorithm>
#include <set>

namespace valtop {

namespace {

GroupElem step_of(const GroupSpec& g) {
  if (auto s = smallest_positive(g)) return *s;
  if (auto u = unit_positive(g)) return *u;
  throw Error("no positive step in the trivial group");
}

GroupElem max_elem(const GroupElem& a, const GroupElem& b) { return a < b ? b : a; }

}  // namespace

// ---------------------------------------------------------------------------
// CylinderOpen / Certificate

const OpenSet* CylinderOpen::constraint_for(const RingElem& a) const {
  for (const auto& [elem, open] : constraints)
    if (elem == a) return &open;
  return nullptr;
}

bool CylinderOpen::contains(const FnTable& f) const {
  for (const auto& [elem, open] : constraints) {
    auto v = f.value_of(elem);
    if (!v || !open.member(*v)) return false;
  }
  return true;
}

bool CylinderOpen::contains_valuation(const Valuation& nu,
                                      const GroupSpec& table_group) const {
  for (const auto& [elem, open] : constraints) {
    ExtValue v = evaluate(nu, elem);
    auto in_group = coerce(v, table_group);
    if (!in_group) return false;  // not a point of the ambient space
    if (!open.member(*in_group)) return false;
  }
  return true;
}

const OpenSet* Certificate::side(const std::string& role) const {
  for (const auto& [name, open] : side_data)
    if (name == role) return &open;
  return nullptr;
}

// ---------------------------------------------------------------------------
// P1 order witness

std::pair<OpenSet, OpenSet> check_P1_order(const ExtValue& gamma,
                                           const ExtValue& gamma_prime,
                                           const OpenSet& u) {
  const GroupSpec& g = gamma.group();
  const ExtValue sigma = gamma + gamma_prime;
  if (!u.member(sigma))
    throw PreconditionError("check_P1_order needs gamma + gamma' inside U");

  if (sigma.is_finite()) {
    if (g.is_trivial()) {
      OpenSet whole = OpenSet::whole(g, false);
      return {whole, whole};
    }
    if (smallest_positive(g)) {
      return {OpenSet::singleton(gamma.finite_value()),
              OpenSet::singleton(gamma_prime.finite_value())};
    }
    // Dense: shrink the slack of the part of U around the sum.
    const Interval* part = nullptr;
    for (const auto& p : u.parts())
      if (p.member(sigma)) part = &p;
    const GroupElem s = sigma.finite_value();
    const GroupElem unit = step_of(g);
    GroupElem alpha = part->lo() ? s - *part->lo() : unit;
    GroupElem beta = part->hi() ? *part->hi() - s : unit;
    auto a_parts = split_positive(alpha);
    auto b_parts = split_positive(beta);
    if (!a_parts || !b_parts) throw Error("dense group failed to split");
    const GroupElem gf = gamma.finite_value(), gpf = gamma_prime.finite_value();
    OpenSet v = OpenSet::interval(g, gf - a_parts->first, gf + b_parts->first, false);
    OpenSet vp = OpenSet::interval(g, gpf - a_parts->second, gpf + b_parts->second, false);
    return {v, vp};
  }

  // Sum is infinity: follow the ray construction.
  const Interval* inf_part = nullptr;
  for (const auto& p : u.parts())
    if (p.with_inf()) inf_part = &p;
  if (!inf_part) throw PreconditionError("U does not contain infinity");
  const GroupElem alpha = inf_part->lo() ? *inf_part->lo() : GroupElem::zero(g);

  if (gamma.is_infinite() && gamma_prime.is_infinite()) {
    return {OpenSet::interval(g, alpha, std::nullopt, true),
            OpenSet::interval(g, GroupElem::zero(g), std::nullopt, true)};
  }
  const bool gamma_is_inf = gamma.is_infinite();
  const GroupElem fin = (gamma_is_inf ? gamma_prime : gamma).finite_value();
  OpenSet v_inf(g), v_fin(g);
  if (g.is_trivial()) {
    v_inf = OpenSet::interval(g, GroupElem::zero(g), std::nullopt, true);  // {inf}
    v_fin = OpenSet::whole(g, false);
  } else {
    const GroupElem beta = step_of(g);
    v_inf = OpenSet::interval(g, alpha - fin + beta, std::nullopt, true);
    v_fin = OpenSet::interval(g, fin - beta, std::nullopt, true);
  }
  return gamma_is_inf ? std::pair(v_inf, v_fin) : std::pair(v_fin, v_inf);
}

// ---------------------------------------------------------------------------
// Certificate synthesis

namespace {

void recheck_violation(const FnTable& f, const ViolationReport& v) {
  const GroupSpec& g = f.group();
  switch (v.axiom) {
    case ViolationReport::Axiom::V1: {
      auto fa = f.value_of(v.witnesses.at(0));
      auto fb = f.value_of(v.witnesses.at(1));
      auto fab = f.value_of(ring_mul(v.witnesses[0], v.witnesses[1]));
      if (!fa || !fb || !fab || *fab == *fa + *fb)
        throw PreconditionError("reported V1 violation does not re-check");
      return;
    }
    case ViolationReport::Axiom::V2: {
      auto fa = f.value_of(v.witnesses.at(0));
      auto fb = f.value_of(v.witnesses.at(1));
      auto fsum = f.value_of(ring_add(v.witnesses[0], v.witnesses[1]));
      if (!fa || !fb || !fsum || !(*fsum < (*fa < *fb ? *fa : *fb)))
        throw PreconditionError("reported V2 violation does not re-check");
      return;
    }
    case ViolationReport::Axiom::V3: {
      const RingElem& w = v.witnesses.at(0);
      auto fw = f.value_of(w);
      if (!fw) throw PreconditionError("V3 witness has no value");
      if (w.is_one() && !(*fw == ExtValue::zero(g))) return;
      if (w.is_zero() && !fw->is_infinite()) return;
      throw PreconditionError("reported V3 violation does not re-check");
    }
  }
}

void assign_constraint(std::vector<std::pair<RingElem, OpenSet>>& cs,
                       const RingElem& elem, const OpenSet& open) {
  for (auto& [e, o] : cs) {
    if (e == elem) {
      o = o.intersect(open);
      return;
    }
  }
  cs.emplace_back(elem, open);
}

}  // namespace

Certificate synthesize_separating_open(const FnTable& f, const ViolationReport& v) {
  recheck_violation(f, v);
  const GroupSpec& g = f.group();
  const MonoidSpec& monoid = f.monoid();

  Certificate cert;
  cert.ring = f.ring();
  cert.monoid = monoid;
  cert.violation = v;

  std::vector<std::pair<RingElem, OpenSet>> cs;
  switch (v.axiom) {
    case ViolationReport::Axiom::V1: {
      const RingElem &a = v.witnesses[0], &b = v.witnesses[1];
      const RingElem ab = ring_mul(a, b);
      const ExtValue fa = *f.value_of(a), fb = *f.value_of(b);
      const ExtValue sum = fa + fb, prod_val = *f.value_of(ab);
      OpenSet set_u(g), set_w(g);
      if (smallest_positive(g) && sum.is_finite() && prod_val.is_finite()) {
        set_u = OpenSet::singleton(sum.finite_value());
        set_w = OpenSet::singleton(prod_val.finite_value());
      } else if (sum < prod_val) {
        std::tie(set_u, set_w) = separate_below(sum, prod_val);
      } else {
        std::tie(set_w, set_u) = separate_below(prod_val, sum);
      }
      auto [set_v, set_vp] = check_P1_order(fa, fb, set_u);
      assign_constraint(cs, a, clip_to_monoid(set_v, monoid));
      assign_constraint(cs, b, clip_to_monoid(set_vp, monoid));
      assign_constraint(cs, ab, clip_to_monoid(set_w, monoid));
      cert.side_data = {{"U", set_u}, {"W", set_w}, {"V", set_v}, {"V'", set_vp}};
      break;
    }
    case ViolationReport::Axiom::V2: {
      const RingElem &a = v.witnesses[0], &b = v.witnesses[1];
      const RingElem sum_elem = ring_add(a, b);
      const ExtValue fa = *f.value_of(a), fb = *f.value_of(b);
      const ExtValue fsum = *f.value_of(sum_elem);
      auto [set_u, set_w] = separate_below(fsum, fa);
      auto [set_u2, set_w2] = separate_below(fsum, fb);
      assign_constraint(cs, a, clip_to_monoid(set_w, monoid));
      assign_constraint(cs, b, clip_to_monoid(set_w2, monoid));
      assign_constraint(cs, sum_elem,
                        clip_to_monoid(set_u.intersect(set_u2), monoid));
      cert.side_data = {
          {"U", set_u}, {"U'", set_u2}, {"W", set_w}, {"W'", set_w2}};
      break;
    }
    case ViolationReport::Axiom::V3: {
      const RingElem& w = v.witnesses[0];
      OpenSet open = w.is_one() ? OpenSet::puncture(GroupElem::zero(g))
                                : OpenSet::whole(g, false);
      open = clip_to_monoid(open, monoid);
      assign_constraint(cs, w, open);
      cert.side_data = {{"O", open}};
      break;
    }
  }

  std::sort(cs.begin(), cs.end(), [](const auto& l, const auto& r) {
    return l.first.str() < r.first.str();
  });
  cert.cylinder.constraints = std::move(cs);
  if (!cert.cylinder.contains(f))
    throw Error("monoid too small to host the separating opens");
  return cert;
}

// ---------------------------------------------------------------------------
// Certificate verification

CertificateVerdict verify_certificate(const Certificate& c, const FnTable& f,
                                      const std::vector<Valuation>& probes) {
  CertificateVerdict verdict;
  verdict.f_in_cylinder = c.cylinder.contains(f);
  if (!verdict.f_in_cylinder) verdict.notes.push_back("table escapes its own cylinder");

  const GroupSpec& g = f.group();
  bool ok = true;
  auto note = [&](const std::string& s) {
    ok = false;
    verdict.notes.push_back(s);
  };
  auto check_constraint_inside = [&](const RingElem& elem, const OpenSet& role,
                                     const char* role_name) {
    const OpenSet* cons = c.cylinder.constraint_for(elem);
    if (!cons) {
      note(std::string("missing constraint for ") + role_name);
      return;
    }
    if (!cons->subset_of(role))
      note(std::string("constraint at ") + elem.str() + " is not inside " + role_name);
  };

  if ((c.violation.axiom != ViolationReport::Axiom::V3 &&
       c.violation.witnesses.size() < 2) ||
      c.violation.witnesses.empty()) {
    note("violation report lacks witnesses");
    verdict.conditions_hold = false;
    return verdict;
  }

  switch (c.violation.axiom) {
    case ViolationReport::Axiom::V1: {
      const OpenSet *u = c.side("U"), *w = c.side("W"), *v = c.side("V"),
                    *vp = c.side("V'");
      if (!u || !w || !v || !vp) {
        note("V1 side data incomplete");
        break;
      }
      const RingElem &a = c.violation.witnesses[0], &b = c.violation.witnesses[1];
      const RingElem ab = ring_mul(a, b);
      auto fa = f.value_of(a), fb = f.value_of(b), fab = f.value_of(ab);
      if (!fa || !fb || !fab) {
        note("table does not determine the V1 coordinates");
        break;
      }
      if (!v->member(*fa)) note("f(a) escapes V");
      if (!vp->member(*fb)) note("f(b) escapes V'");
      if (!w->member(*fab)) note("f(ab) escapes W");
      if (!u->intersect(*w).is_empty()) note("U and W intersect");
      if (!minkowski_hull(*v, *vp).subset_of(*u)) note("hull(V,V') escapes U");
      check_constraint_inside(a, *v, "V");
      check_constraint_inside(b, *vp, "V'");
      check_constraint_inside(ab, *w, "W");
      break;
    }
    case ViolationReport::Axiom::V2: {
      const OpenSet *u = c.side("U"), *u2 = c.side("U'"), *w = c.side("W"),
                    *w2 = c.side("W'");
      if (!u || !u2 || !w || !w2) {
        note("V2 side data incomplete");
        break;
      }
      const RingElem &a = c.violation.witnesses[0], &b = c.violation.witnesses[1];
      const RingElem sum = ring_add(a, b);
      auto fa = f.value_of(a), fb = f.value_of(b), fsum = f.value_of(sum);
      if (!fa || !fb || !fsum) {
        note("table does not determine the V2 coordinates");
        break;
      }
      if (!u->strictly_below(*w)) note("U is not strictly below W");
      if (!u2->strictly_below(*w2)) note("U' is not strictly below W'");
      if (!w->member(*fa)) note("f(a) escapes W");
      if (!w2->member(*fb)) note("f(b) escapes W'");
      OpenSet uu = u->intersect(*u2);
      if (!uu.member(*fsum)) note("f(a+b) escapes U cap U'");
      check_constraint_inside(a, *w, "W");
      check_constraint_inside(b, *w2, "W'");
      check_constraint_inside(sum, uu, "U cap U'");
      break;
    }
    case ViolationReport::Axiom::V3: {
      const OpenSet* open = c.side("O");
      if (!open) {
        note("V3 side data incomplete");
        break;
      }
      const RingElem& w = c.violation.witnesses[0];
      auto fw = f.value_of(w);
      if (!fw) {
        note("table does not determine the V3 coordinate");
        break;
      }
      if (w.is_one() && open->member(ExtValue::zero(g)))
        note("the open admits the legal value 0 at coordinate 1");
      if (w.is_zero() && open->member(ExtValue::infinity(g)))
        note("the open admits the legal value infinity at coordinate 0");
      if (!open->member(*fw)) note("f escapes the V3 open");
      check_constraint_inside(w, *open, "O");
      break;
    }
  }
  verdict.conditions_hold = ok;

  verdict.probes_excluded = true;
  for (const auto& nu : probes) {
    if (!nu.defined_on(f.ring())) {
      verdict.notes.push_back("probe " + nu.str() + " skipped: undefined on " +
                              f.ring().str());
      continue;
    }
    ++verdict.probes_checked;
    if (c.cylinder.contains_valuation(nu, g)) {
      verdict.probes_excluded = false;
      verdict.notes.push_back("probe " + nu.str() + " lies in the cylinder");
    }
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Separation and the T1 counterexample

std::optional<OpenSet> topology_separates(const TopologyId& t, const ExtValue& target,
                                          const ExtValue& avoid,
                                          const MonoidSpec& carrier) {
  if (target == avoid)
    throw PreconditionError("separation needs two distinct points");
  const GroupSpec& g = carrier.group;
  auto punctured = [&](const ExtValue& x) {
    return x.is_infinite() ? OpenSet::whole(g, false)
                           : OpenSet::puncture(x.finite_value());
  };
  switch (t.kind) {
    case TopologyId::Kind::A1:
    case TopologyId::Kind::A2:
    case TopologyId::Kind::A3:
    case TopologyId::Kind::Pinned: {
      OpenSet open = punctured(avoid);
      return open;  // open in each of these topologies, and misses avoid
    }
    case TopologyId::Kind::NotT1: {
      const ExtValue alpha = ExtValue::finite(*t.pin);
      const ExtValue beta = ExtValue::finite(*t.pin2);
      if (target == beta && avoid == alpha) return std::nullopt;
      if (target == beta) return punctured(avoid);  // keeps alpha, so admissible
      // target != beta: a one-interval open around target dodging both.
      std::optional<GroupElem> lo, hi;
      bool with_inf = target.is_infinite();
      for (const ExtValue& x : {avoid, beta}) {
        if (x.is_infinite()) {
          with_inf = false;
          continue;
        }
        const GroupElem& xv = x.finite_value();
        if (x < target) {
          if (!lo || *lo < xv) lo = xv;
        } else {
          if (!hi || xv < *hi) hi = xv;
        }
      }
      if (target.is_infinite())
        return OpenSet::interval(g, lo, std::nullopt, true);
      return OpenSet::interval(g, lo, hi, with_inf);
    }
  }
  throw Error("unreachable");
}

namespace {

std::vector<GroupElem> window_grid(const GroupSpec& g,
                                   const std::vector<GroupElem>& anchors,
                                   int window) {
  const GroupElem step = step_of(g);
  std::set<std::string> seen;
  std::vector<GroupElem> out;
  for (const auto& a : anchors) {
    GroupElem v = a;
    for (int k = 0; k < window; ++k) v = v - step;
    for (int k = -window; k <= window; ++k) {
      if (seen.insert(v.str()).second) out.push_back(v);
      v = v + step;
    }
  }
  std::sort(out.begin(), out.end(), [](const GroupElem& a, const GroupElem& b) {
    return a < b;
  });
  return out;
}

// All single-interval basics of the order topology with endpoints on
// the grid.
std::vector<OpenSet> interval_basics(const GroupSpec& g,
                                     const std::vector<GroupElem>& grid) {
  std::vector<OpenSet> out;
  std::vector<std::optional<GroupElem>> los{std::nullopt}, his{std::nullopt};
  for (const auto& e : grid) {
    los.push_back(e);
    his.push_back(e);
  }
  for (const auto& lo : los) {
    for (const auto& hi : his) {
      if (hi) {
        OpenSet s = OpenSet::interval(g, lo, hi, false);
        if (!s.is_empty()) out.push_back(std::move(s));
      } else {
        out.push_back(OpenSet::interval(g, lo, std::nullopt, false));
        out.push_back(OpenSet::interval(g, lo, std::nullopt, true));
      }
    }
  }
  return out;
}

std::vector<RingElem> sample_coordinates(const RingSpec& ring) {
  std::vector<RingElem> out;
  const RingSpec base = ring.base();
  auto add = [&](const char* text) { out.push_back(parse_elem(text, ring)); };
  switch (base.kind()) {
    case RingSpec::Kind::Integers:
      for (int n = -12; n <= 12; ++n)
        out.push_back(parse_elem(std::to_string(n), ring));
      break;
    case RingSpec::Kind::Rationals:
      for (int n = -8; n <= 8; ++n) {
        out.push_back(parse_elem(std::to_string(n), ring));
        out.push_back(parse_elem(std::to_string(n) + "/2", ring));
      }
      break;
    case RingSpec::Kind::Poly1:
      add("0"); add("1"); add("2"); add("x"); add("x+1"); add("x^2");
      add("x^2+2*x"); add("2*x^3-1"); add("x^4+x^2+1"); add("3/2*x");
      break;
    case RingSpec::Kind::Poly2:
      add("0"); add("1"); add("x"); add("y"); add("x*y"); add("x^2*y+3*y^2");
      add("x+y"); add("x^2-y^3"); add("2*x^2*y^2"); add("x^3+y");
      break;
    case RingSpec::Kind::Fractions:
      break;
  }
  return out;
}

}  // namespace

T1CounterexampleReport t1_counterexample(const Valuation& nu, const RingElem& a0,
                                         const GroupElem& gamma_prime,
                                         const TopologyId& topology, int window) {
  const RingSpec ring = a0.ring();
  if (!nu.defined_on(ring))
    throw MismatchError("valuation is not defined on the element's ring");
  const GroupSpec& g = nu.value_group();
  if (gamma_prime.group() != g)
    throw MismatchError("gamma' must live in the valuation's value group");

  ExtValue old_value = evaluate(nu, a0);
  RingElem at = a0;
  // The zero and infinity branches modify the table at 1 and 0 instead.
  if (old_value.is_finite() && old_value.finite_value().is_zero()) {
    at = RingElem::one(ring);
    old_value = ExtValue::zero(g);
  } else if (old_value.is_infinite()) {
    at = RingElem::zero(ring);
  }
  const ExtValue new_value = ExtValue::finite(gamma_prime);
  if (new_value == old_value)
    throw PreconditionError("gamma' must differ from the valuation's value");

  const MonoidSpec carrier{g, false};
  if (auto sep = topology_separates(topology, new_value, old_value, carrier))
    throw PreconditionError("the topology separates gamma' from gamma (witness " +
                            sep->str() + ")");

  FnTable table(ring, carrier, nu);
  table.set(at, new_value);
  auto violation = check_axioms(table);
  if (!violation) throw Error("modified table unexpectedly satisfies the axioms");

  T1CounterexampleReport report{std::move(table), *violation, at,
                                old_value,        new_value,  0,
                                false,            0,          0,
                                ""};

  // Only the pair-pinned topology reaches this point; enumerate its
  // basis over the window grid. Basics containing the new value are
  // exactly the two-piece unions B u B' with B around the new value and
  // B' around the old one, so each contains the old value by
  // construction; the loop certifies that concretely.
  std::vector<GroupElem> anchors{GroupElem::zero(g), gamma_prime};
  if (old_value.is_finite()) anchors.push_back(old_value.finite_value());
  auto grid = window_grid(g, anchors, window);
  auto basics = interval_basics(g, grid);
  std::vector<const OpenSet*> around_new, around_old;
  for (const auto& b : basics) {
    if (b.member(new_value)) around_new.push_back(&b);
    if (b.member(old_value)) around_old.push_back(&b);
  }
  bool all_contain = !around_new.empty() && !around_old.empty();
  std::size_t pairs = 0, sampled = 0;
  const std::size_t total = around_new.size() * around_old.size();
  const std::size_t stride = std::max<std::size_t>(1, total / 1024);
  for (std::size_t i = 0; i < around_new.size(); ++i) {
    for (std::size_t j = 0; j < around_old.size(); ++j) {
      ++pairs;
      const bool holds =
          around_new[i]->member(old_value) || around_old[j]->member(old_value);
      if (!holds) all_contain = false;
      if ((i * around_old.size() + j) % stride == 0) {
        OpenSet u = around_new[i]->unite(*around_old[j]);
        if (!u.member(new_value) || !u.member(old_value)) all_contain = false;
        ++sampled;
      }
    }
  }
  report.basis_opens_checked = pairs;
  report.all_contain_backing_value = all_contain;
  report.sampled_unions_verified = sampled;

  for (const auto& a : sample_coordinates(ring)) {
    if (a == at) continue;
    auto fv = report.table.value_of(a);
    if (fv && *fv == evaluate(nu, a)) ++report.coordinates_checked;
  }
  report.note =
      "basic cylinders constrain finitely many coordinates; away from the "
      "modified element the table equals the backing valuation, so membership "
      "reduces to the basis opens around the modified value";
  return report;
}

// ---------------------------------------------------------------------------
// P2 / P1 verdicts

namespace {

std::vector<OpenSet> default_infinity_neighborhoods(const TopologyId& t,
                                                    const MonoidSpec& carrier,
                                                    const ExtValue& gamma) {
  const GroupSpec& g = carrier.group;
  const GroupElem step = step_of(g);
  const GroupElem anchor =
      gamma.is_finite() ? gamma.finite_value() : GroupElem::zero(g);
  std::vector<OpenSet> out;
  for (int k = 1; k <= 6; ++k) {
    GroupElem lo = anchor, hi = anchor;
    for (int i = 0; i < k; ++i) {
      lo = lo - step;
      hi = hi + step;
    }
    if (t.kind == TopologyId::Kind::A3) {
      auto K = ClosedSet::of(g, {{lo, lo}, {GroupElem::zero(g), GroupElem::zero(g)},
                                 {hi, hi}});
      out.push_back(infinity_basis_a3(K, carrier));
    } else {
      out.push_back(infinity_basis_a2(lo, hi));
    }
  }
  return out;
}

std::vector<OpenSet> default_pinned_neighborhoods(const GroupElem& pin,
                                                  const MonoidSpec& carrier) {
  const GroupSpec& g = carrier.group;
  const GroupElem step = step_of(g);
  std::vector<OpenSet> out;
  for (int k = 1; k <= 6; ++k) {
    GroupElem lo = pin, hi = pin;
    for (int i = 0; i < k; ++i) {
      lo = lo - step;
      hi = hi + step;
    }
    // Pin inside the lower ray, and a variant with it inside the upper.
    out.push_back(OpenSet::of(g, {Interval(g, std::nullopt, hi, false),
                                  Interval(g, hi + step, std::nullopt, true)}));
    out.push_back(OpenSet::of(g, {Interval(g, std::nullopt, lo - step, false),
                                  Interval(g, lo, std::nullopt, true)}));
  }
  return out;
}

// Element of the neighborhood strictly below gamma, via its lower ray.
P2RefutationInstance refute_low(const OpenSet& n, const ExtValue& gamma,
                                const GroupSpec& g) {
  const Interval& front = n.parts().front();
  if (front.lo().has_value())
    throw PreconditionError("neighborhood has no lower ray");
  const GroupElem step = step_of(g);
  GroupElem bound = front.hi() ? *front.hi() : gamma.finite_value();
  if (gamma.is_finite() && gamma.finite_value() < bound)
    bound = gamma.finite_value();
  GroupElem counter = bound - step;
  ExtValue counter_v = ExtValue::finite(counter);
  if (!n.member(counter_v) || !(counter_v < gamma))
    throw Error("refutation witness failed its own check");
  return {n, counter_v};
}

// Element of the neighborhood strictly above gamma', via its upper ray.
P2RefutationInstance refute_high(const OpenSet& n, const ExtValue& gamma_prime,
                                 const GroupSpec& g) {
  const Interval& back = n.parts().back();
  if (back.hi().has_value())
    throw PreconditionError("neighborhood has no upper ray");
  const GroupElem step = step_of(g);
  GroupElem bound = back.lo() ? *back.lo() : GroupElem::zero(g);
  if (gamma_prime.is_finite() && bound < gamma_prime.finite_value())
    bound = gamma_prime.finite_value();
  GroupElem counter = bound + step;
  ExtValue counter_v = ExtValue::finite(counter);
  if (!n.member(counter_v))
    throw Error("refutation witness failed its own check");
  return {n, counter_v};
}

}  // namespace

P2Result check_P2(const TopologyId& t, const ExtValue& gamma,
                  const ExtValue& gamma_prime, const MonoidSpec& carrier,
                  const std::vector<OpenSet>& neighborhood_samples) {
  if (!(gamma < gamma_prime))
    throw PreconditionError("check_P2 requires gamma < gamma'");
  const GroupSpec& g = carrier.group;
  P2Result result;

  switch (t.kind) {
    case TopologyId::Kind::A1: {
      auto [u, up] = separate_below(gamma, gamma_prime);
      result.witness = P2Witness{u, up};
      return result;
    }
    case TopologyId::Kind::A2:
    case TopologyId::Kind::A3: {
      if (gamma_prime.is_finite() || g.is_trivial()) {
        auto [u, up] = separate_below(gamma, gamma_prime);
        if (gamma_prime.is_finite() && up.has_infinity()) {
          // The upper set must stay open with infinity excluded.
          up = OpenSet::interval(g, up.parts().front().lo(), std::nullopt, false);
        }
        result.witness = P2Witness{u, up};
        return result;
      }
      auto nbhds = neighborhood_samples.empty()
                       ? default_infinity_neighborhoods(t, carrier, gamma)
                       : neighborhood_samples;
      for (const auto& n : nbhds) {
        if (!n.member(gamma_prime))
          throw PreconditionError("sample neighborhood misses infinity");
        if (!is_open_in(n, t, carrier))
          throw PreconditionError("sample neighborhood is not open in " + t.str());
        result.refutation.push_back(refute_low(n, gamma, g));
      }
      return result;
    }
    case TopologyId::Kind::Pinned: {
      const ExtValue pin = ExtValue::finite(*t.pin);
      if (!(gamma == pin) && !(gamma_prime == pin)) {
        auto [u, up] = separate_below(gamma, gamma_prime);
        if (u.member(pin)) {
          u = u.intersect(pin < gamma
                              ? OpenSet::interval(g, *t.pin, std::nullopt, false)
                              : OpenSet::interval(g, std::nullopt, *t.pin, false));
        }
        if (up.member(pin)) {
          up = up.intersect(pin < gamma_prime
                                ? OpenSet::interval(g, *t.pin, std::nullopt, true)
                                : OpenSet::interval(g, std::nullopt, *t.pin, false));
        }
        result.witness = P2Witness{u, up};
        return result;
      }
      auto nbhds = neighborhood_samples.empty()
                       ? default_pinned_neighborhoods(*t.pin, carrier)
                       : neighborhood_samples;
      for (const auto& n : nbhds) {
        if (!n.member(pin))
          throw PreconditionError("sample neighborhood misses the pin");
        if (!is_open_in(n, t, carrier))
          throw PreconditionError("sample neighborhood is not open in " + t.str());
        result.refutation.push_back(gamma == pin ? refute_high(n, gamma_prime, g)
                                                 : refute_low(n, gamma, g));
      }
      return result;
    }
    case TopologyId::Kind::NotT1:
      throw Error("P2 analysis is not provided for the nont1 topology");
  }
  throw Error("unreachable");
}

P1FailureWitness check_P1_failure(const TopologyId& t, const MonoidSpec& carrier,
                                  const std::vector<std::pair<OpenSet, OpenSet>>&
                                      neighborhood_pairs) {
  if (t.kind != TopologyId::Kind::A2 && t.kind != TopologyId::Kind::A3)
    throw PreconditionError("additive-continuity failure concerns A2 and A3 only");
  if (carrier.nonneg)
    throw PreconditionError("the construction needs the full carrier");
  const GroupSpec& g = carrier.group;
  if (g.is_trivial()) throw PreconditionError("the construction needs a non-trivial group");

  P1FailureWitness out{OpenSet::puncture(GroupElem::zero(g)), {}, true};
  if (!is_open_in(out.u, t, carrier))
    throw Error("punctured carrier unexpectedly fails to be open");

  auto pairs = neighborhood_pairs;
  if (pairs.empty()) {
    auto base = default_infinity_neighborhoods(t, carrier, ExtValue::zero(g));
    for (std::size_t i = 0; i + 1 < base.size(); i += 2)
      pairs.emplace_back(base[i], base[i + 1]);
  }

  for (const auto& [v, vp] : pairs) {
    if (!v.has_infinity() || !vp.has_infinity())
      throw PreconditionError("neighborhood pair must both contain infinity");
    if (!is_open_in(v, t, carrier) || !is_open_in(vp, t, carrier))
      throw PreconditionError("neighborhood pair must be open in " + t.str());
    GroupElem x1 = v.parts().back().lo() ? *v.parts().back().lo() : GroupElem::zero(g);
    GroupElem y0 = vp.parts().front().hi() ? *vp.parts().front().hi()
                                           : GroupElem::zero(g);
    GroupElem bound = max_elem(max_elem(x1, -y0), GroupElem::zero(g));
    GroupElem gamma = next_above(bound);
    OpenSet hull = minkowski_hull(v, vp);
    P1FailureInstance inst{v, vp, gamma, false};
    inst.verified = v.member(ExtValue::finite(gamma)) &&
                    vp.member(ExtValue::finite(-gamma)) &&
                    hull.member(ExtValue::zero(g)) && !hull.subset_of(out.u);
    if (!inst.verified) out.all_pass = false;
    out.instances.push_back(std::move(inst));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Probe generation

namespace {

Int nth_prime(std::size_t n) {
  Int p = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    do {
      ++p;
      bool prime = p >= 2;
      for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) {
          prime = false;
          break;
        }
      if (prime) break;
    } while (true);
  }
  return p;
}

}  // namespace

std::vector<Valuation> standard_probes(const RingSpec& ring, const GroupSpec& group,
                                       std::size_t count) {
  std::vector<Valuation> out;
  const RingSpec base = ring.base();
  out.push_back(Valuation::trivial());
  switch (base.kind()) {
    case RingSpec::Kind::Integers:
    case RingSpec::Kind::Rationals: {
      for (std::size_t k = 0; out.size() < count; ++k)
        out.push_back(Valuation::padic(nth_prime(k)));
      break;
    }
    case RingSpec::Kind::Poly1: {
      out.push_back(Valuation::xadic());
      const Rat gammas[] = {Rat(1, 2), Rat(1), Rat(3, 2), Rat(2), Rat(5, 2), Rat(3)};
      for (std::size_t k = 0; out.size() < count; ++k)
        out.push_back(
            Valuation::gauss(nth_prime(k / 6), gammas[k % 6]));
      break;
    }
    case RingSpec::Kind::Poly2: {
      const bool lex_weights =
          group.leaf_count() == 2 &&
          group.leaf_kinds()[0] == GroupSpec::Kind::Rationals &&
          group.leaf_kinds()[1] == GroupSpec::Kind::Rationals &&
          group.kind() == GroupSpec::Kind::Lex;
      for (int i = 1; out.size() < count; ++i) {
        for (int j = 1; j <= i && out.size() < count; ++j) {
          if (lex_weights) {
            out.push_back(Valuation::monomial(
                {GroupElem(group, {Rat(i), Rat(j)}),
                 GroupElem(group, {Rat(j), Rat(i)})}));
          } else {
            out.push_back(Valuation::monomial(
                {GroupElem(GroupSpec::rationals(), {Rat(i)}),
                 GroupElem(GroupSpec::rationals(), {Rat(j)})}));
          }
        }
      }
      break;
    }
    case RingSpec::Kind::Fractions:
      break;
  }
  return out;
}

}  // namespace valtop
