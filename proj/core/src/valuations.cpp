#include "valtop/valuations.hpp"

#include <algorithm>
#include <cctype>

namespace valtop {

namespace {

bool is_small_prime(const Int& p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Int padic_of_int(const Int& p, Int n) {
  if (n < 0) n = -n;
  Int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Rat padic_of_rat(const Int& p, const Rat& q) {
  return Rat(padic_of_int(p, numerator(q)) - padic_of_int(p, denominator(q)));
}

GroupElem int_scalar_mul(int k, const GroupElem& e) {
  std::vector<Rat> coords(e.coords().size());
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = e.coords()[i] * k;
  return GroupElem(e.group(), std::move(coords));
}

bool rational_leaved(const GroupSpec& g) {
  for (auto k : g.leaf_kinds())
    if (k != GroupSpec::Kind::Rationals) return false;
  return !g.is_trivial();
}

}  // namespace

Valuation Valuation::padic(const Int& p) {
  if (!is_small_prime(p)) throw Error("padic needs a prime");
  Valuation v;
  v.family_ = Family::PAdic;
  v.p_ = p;
  v.group_ = GroupSpec::integers();
  return v;
}

Valuation Valuation::xadic() {
  Valuation v;
  v.family_ = Family::XAdic;
  v.group_ = GroupSpec::integers();
  return v;
}

Valuation Valuation::gauss(const Int& p, const Rat& gamma) {
  if (!is_small_prime(p)) throw Error("gauss needs a prime");
  if (!(gamma > 0)) throw Error("gauss needs a positive gamma");
  Valuation v;
  v.family_ = Family::Gauss;
  v.p_ = p;
  v.gamma_ = gamma;
  v.group_ = GroupSpec::rationals();
  return v;
}

Valuation Valuation::monomial(std::vector<GroupElem> weights) {
  if (weights.size() != 2) throw Error("monomial needs two weights");
  if (weights[0].group() != weights[1].group())
    throw MismatchError("monomial weights must share a group");
  for (const auto& w : weights)
    if (w.negative()) throw Error("monomial weights must be non-negative");
  Valuation v;
  v.family_ = Family::Monomial;
  v.group_ = weights[0].group();
  v.weights_ = std::move(weights);
  return v;
}

Valuation Valuation::trivial(GroupSpec value_group) {
  Valuation v;
  v.family_ = Family::Trivial;
  v.group_ = std::move(value_group);
  return v;
}

Valuation Valuation::scaled_by(const Rat& c) const {
  if (!(c > 0)) throw Error("scaling needs a positive constant");
  if (family_ == Family::Trivial) return *this;  // all values are 0 or inf
  Valuation v = *this;
  if (family_ == Family::Monomial) {
    if (!rational_leaved(group_))
      throw Error("scaling needs a rational-leaf value group");
    for (auto& w : v.weights_) w = scalar_mul(c, w);
    return v;
  }
  v.scale_ = scale_ * c;
  v.group_ = GroupSpec::rationals();  // scaled copies live in Q
  return v;
}

RingSpec Valuation::natural_ring() const {
  switch (family_) {
    case Family::PAdic: return RingSpec::integers();
    case Family::XAdic:
    case Family::Gauss: return RingSpec::poly1();
    case Family::Monomial: return RingSpec::poly2();
    case Family::Trivial: return RingSpec::integers();
  }
  throw Error("unreachable");
}

bool Valuation::defined_on(const RingSpec& ring) const {
  if (ring.is_fractions()) return defined_on(ring.base());
  switch (family_) {
    case Family::PAdic:
      return ring.kind() == RingSpec::Kind::Integers ||
             ring.kind() == RingSpec::Kind::Rationals;
    case Family::XAdic:
    case Family::Gauss:
      return ring.kind() == RingSpec::Kind::Poly1;
    case Family::Monomial:
      return ring.kind() == RingSpec::Kind::Poly2;
    case Family::Trivial:
      return true;
  }
  throw Error("unreachable");
}

std::string Valuation::str() const {
  std::string prefix = scale_ == 1 ? "" : rat_str(scale_) + "*";
  switch (family_) {
    case Family::PAdic: return prefix + "padic(" + p_.str() + ")";
    case Family::XAdic: return prefix + "xadic";
    case Family::Gauss:
      return prefix + "gauss(p=" + p_.str() + ",gamma=" + rat_str(gamma_) + ")";
    case Family::Monomial: {
      std::string s = "monomial(w=[" + weights_[0].str() + "," + weights_[1].str() + "]";
      if (group_ != GroupSpec::rationals()) s += ",group=" + group_.str();
      return s + ")";
    }
    case Family::Trivial:
      return group_.is_trivial() ? "trivial" : "trivial(" + group_.str() + ")";
  }
  throw Error("unreachable");
}

bool Valuation::operator==(const Valuation& o) const {
  return family_ == o.family_ && p_ == o.p_ && gamma_ == o.gamma_ &&
         scale_ == o.scale_ && group_ == o.group_ && weights_ == o.weights_;
}

namespace {

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Splits "a,b,c" at top-level commas (parentheses and brackets nest).
std::vector<std::string_view> split_args(std::string_view body) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < body.size(); ++k) {
    if (body[k] == '(' || body[k] == '[') ++depth;
    if (body[k] == ')' || body[k] == ']') --depth;
    if (body[k] == ',' && depth == 0) {
      out.push_back(trimmed(body.substr(start, k - start)));
      start = k + 1;
    }
  }
  out.push_back(trimmed(body.substr(start)));
  return out;
}

}  // namespace

Valuation Valuation::parse(std::string_view text) {
  std::string_view s = trimmed(text);
  // Optional scale prefix "<rat>*" before a family name.
  std::size_t star = s.find('*');
  if (star != std::string_view::npos) {
    std::string_view head = trimmed(s.substr(0, star));
    bool head_is_rat = !head.empty();
    for (char c : head)
      if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-')
        head_is_rat = false;
    if (head_is_rat) {
      Rat c = parse_rat(head);
      return parse(s.substr(star + 1)).scaled_by(c);
    }
  }
  if (s == "xadic") return xadic();
  if (s == "trivial") return trivial();
  if (s.starts_with("trivial(") && s.ends_with(")"))
    return trivial(GroupSpec::parse(s.substr(8, s.size() - 9)));
  if (s.starts_with("padic(") && s.ends_with(")"))
    return padic(Int(std::string(trimmed(s.substr(6, s.size() - 7)))));
  if (s.starts_with("gauss(") && s.ends_with(")")) {
    Int p = 0;
    std::optional<Rat> gamma;
    for (auto arg : split_args(s.substr(6, s.size() - 7))) {
      if (arg.starts_with("p="))
        p = Int(std::string(trimmed(arg.substr(2))));
      else if (arg.starts_with("gamma="))
        gamma = parse_rat(trimmed(arg.substr(6)));
      else
        throw ParseError("unknown gauss argument", 0);
    }
    if (p == 0 || !gamma) throw ParseError("gauss needs p= and gamma=", 0);
    return gauss(p, *gamma);
  }
  if (s.starts_with("monomial(") && s.ends_with(")")) {
    std::optional<std::string_view> wlist;
    std::optional<GroupSpec> grp;
    for (auto arg : split_args(s.substr(9, s.size() - 10))) {
      if (arg.starts_with("w="))
        wlist = trimmed(arg.substr(2));
      else if (arg.starts_with("group="))
        grp = GroupSpec::parse(trimmed(arg.substr(6)));
      else
        throw ParseError("unknown monomial argument", 0);
    }
    if (!wlist || !wlist->starts_with("[") || !wlist->ends_with("]"))
      throw ParseError("monomial needs w=[...]", 0);
    auto items = split_args(wlist->substr(1, wlist->size() - 2));
    if (items.size() != 2) throw ParseError("monomial needs two weights", 0);
    GroupSpec g = grp.value_or(items[0].starts_with("(")
                                   ? GroupSpec::lex(GroupSpec::rationals(),
                                                    GroupSpec::rationals())
                                   : GroupSpec::rationals());
    std::vector<GroupElem> w;
    for (auto item : items) w.push_back(GroupElem::parse(g, item));
    return monomial(std::move(w));
  }
  throw ParseError("unknown valuation spec '" + std::string(s) + "'", 0);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

ExtValue apply_scale(const Valuation& nu, const Rat& raw) {
  return ExtValue::finite(GroupElem(nu.value_group(), {raw * nu.scale()}));
}

}  // namespace

ExtValue evaluate(const Valuation& nu, const RingElem& a) {
  if (!nu.defined_on(a.ring()))
    throw MismatchError("valuation is not defined on ring " + a.ring().str());
  if (a.ring().is_fractions()) return evaluate_fraction(nu, a);
  const GroupSpec& g = nu.value_group();
  if (a.is_zero()) return ExtValue::infinity(g);
  switch (nu.family()) {
    case Valuation::Family::Trivial:
      return ExtValue::zero(g);
    case Valuation::Family::PAdic: {
      Rat raw = a.ring().kind() == RingSpec::Kind::Integers
                    ? Rat(padic_of_int(nu.prime(), a.as_int()))
                    : padic_of_rat(nu.prime(), a.as_rat());
      return apply_scale(nu, raw);
    }
    case Valuation::Family::XAdic: {
      Rat raw = Rat(a.as_poly1().begin()->first);
      return apply_scale(nu, raw);
    }
    case Valuation::Family::Gauss: {
      std::optional<Rat> best;
      for (const auto& [e, c] : a.as_poly1()) {
        Rat v = padic_of_rat(nu.prime(), c) + Rat(e) * nu.gauss_gamma();
        if (!best || v < *best) best = v;
      }
      return apply_scale(nu, *best);
    }
    case Valuation::Family::Monomial: {
      std::optional<GroupElem> best;
      for (const auto& [e, c] : a.as_poly2()) {
        GroupElem v = int_scalar_mul(e.first, nu.weights()[0]) +
                      int_scalar_mul(e.second, nu.weights()[1]);
        if (!best || v < *best) best = v;
      }
      return ExtValue::finite(*best);
    }
  }
  throw Error("unreachable");
}

ExtValue evaluate_fraction(const Valuation& nu, const RingElem& frac) {
  if (!frac.ring().is_fractions())
    throw MismatchError("evaluate_fraction needs a fraction-ring element");
  ExtValue den = evaluate(nu, frac.frac_den());
  if (den.is_infinite())
    throw Error("denominator lies in the support of the valuation");
  ExtValue num = evaluate(nu, frac.frac_num());
  return num.minus(den);
}

bool is_centered(const Valuation& nu, const RingSpec& ring) {
  if (ring.kind() != RingSpec::Kind::Poly2)
    throw Error("centeredness is defined over the local surrogate poly2");
  if (!nu.defined_on(ring)) throw MismatchError("valuation not defined on poly2");
  const RingElem x = parse_elem("x", ring);
  const RingElem y = parse_elem("y", ring);
  const ExtValue zero = ExtValue::zero(nu.value_group());
  // Monomial and trivial values are never negative on polynomials, so
  // centering reduces to positivity on the generators.
  return evaluate(nu, x) > zero && evaluate(nu, y) > zero;
}

ExtValue maximal_ideal_value(const Valuation& nu, const RingSpec& ring) {
  if (ring.kind() != RingSpec::Kind::Poly2)
    throw Error("the maximal ideal value is defined over poly2");
  if (!nu.defined_on(ring)) throw MismatchError("valuation not defined on poly2");
  ExtValue vx = evaluate(nu, parse_elem("x", ring));
  ExtValue vy = evaluate(nu, parse_elem("y", ring));
  return vx < vy ? vx : vy;
}

bool equivalent_on(const Valuation& nu, const Valuation& mu,
                   std::span<const std::pair<RingElem, RingElem>> testset) {
  for (const auto& [a, b] : testset) {
    ExtValue na = evaluate(nu, a), nb = evaluate(nu, b);
    ExtValue ma = evaluate(mu, a), mb = evaluate(mu, b);
    if ((na > nb) != (ma > mb)) return false;
    if ((nb > na) != (mb > ma)) return false;
  }
  return true;
}

namespace {

// Rational view of a value; nullopt encodes infinity.
std::optional<Rat> rat_value(const ExtValue& v) {
  if (v.is_infinite()) return std::nullopt;
  if (v.group().is_trivial()) return Rat(0);
  if (v.group().leaf_count() != 1) throw Error("value group is not rank one");
  return v.finite_value().coords()[0];
}

bool rational_valued(const Valuation& nu) {
  return nu.value_group().is_trivial() || nu.value_group().leaf_count() == 1;
}

}  // namespace

std::optional<Rat> scaling_constant(const Valuation& nu, const Valuation& mu,
                                    std::span<const RingElem> probes) {
  if (!rational_valued(nu) || !rational_valued(mu)) return std::nullopt;
  std::optional<Rat> c;
  for (const auto& a : probes) {
    auto va = rat_value(evaluate(nu, a));
    auto ua = rat_value(evaluate(mu, a));
    if (!ua) {
      if (va) return std::nullopt;  // mu infinite, nu finite
      continue;
    }
    if (!va) return std::nullopt;  // nu infinite, mu finite
    if (*ua == 0) {
      if (*va != 0) return std::nullopt;
      continue;
    }
    if (*va == 0) return std::nullopt;
    Rat r = *va / *ua;
    if (!(r > 0)) return std::nullopt;
    if (!c)
      c = r;
    else if (*c != r)
      return std::nullopt;
  }
  return c.value_or(Rat(1));
}

}  // namespace valtop
