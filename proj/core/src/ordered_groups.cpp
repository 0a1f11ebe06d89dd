#include "valtop/ordered_groups.hpp"

#include <cctype>
#include <sstream>

namespace valtop {

std::string rat_str(const Rat& r) { return r.str(); }

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

Int parse_int_at(std::string_view s, std::size_t& i) {
  skip_ws(s, i);
  std::size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t digits = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits) throw ParseError("expected integer", start);
  return Int(std::string(s.substr(start, i - start)));
}

Rat parse_rat_at(std::string_view s, std::size_t& i) {
  Int num = parse_int_at(s, i);
  skip_ws(s, i);
  if (i < s.size() && s[i] == '/') {
    ++i;
    Int den = parse_int_at(s, i);
    if (den == 0) throw ParseError("zero denominator", i);
    return Rat(num, den);
  }
  return Rat(num);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::size_t i = 0;
  Rat r = parse_rat_at(text, i);
  skip_ws(text, i);
  if (i != text.size()) throw ParseError("trailing characters after rational", i);
  return r;
}

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::integers() {
  static const auto node = std::make_shared<const Node>(
      Node{Kind::Integers, nullptr, nullptr, {Kind::Integers}});
  return GroupSpec(node);
}

GroupSpec GroupSpec::rationals() {
  static const auto node = std::make_shared<const Node>(
      Node{Kind::Rationals, nullptr, nullptr, {Kind::Rationals}});
  return GroupSpec(node);
}

GroupSpec GroupSpec::trivial() {
  static const auto node =
      std::make_shared<const Node>(Node{Kind::Trivial, nullptr, nullptr, {}});
  return GroupSpec(node);
}

GroupSpec GroupSpec::lex(GroupSpec left, GroupSpec right) {
  if (left.is_trivial() || right.is_trivial())
    throw Error("the trivial group cannot be a lex factor");
  std::vector<Kind> leaves = left.leaf_kinds();
  leaves.insert(leaves.end(), right.leaf_kinds().begin(),
                right.leaf_kinds().end());
  auto node = std::make_shared<const Node>(
      Node{Kind::Lex, left.node_, right.node_, std::move(leaves)});
  return GroupSpec(node);
}

GroupSpec GroupSpec::left() const {
  if (kind() != Kind::Lex) throw Error("not a lex product");
  return GroupSpec(node_->l);
}

GroupSpec GroupSpec::right() const {
  if (kind() != Kind::Lex) throw Error("not a lex product");
  return GroupSpec(node_->r);
}

bool GroupSpec::operator==(const GroupSpec& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  if (kind() != Kind::Lex) return true;
  return GroupSpec(node_->l) == GroupSpec(o.node_->l) &&
         GroupSpec(node_->r) == GroupSpec(o.node_->r);
}

std::string GroupSpec::str() const {
  switch (kind()) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::Trivial: return "0";
    case Kind::Lex:
      return "lex(" + GroupSpec(node_->l).str() + "," +
             GroupSpec(node_->r).str() + ")";
  }
  throw Error("unreachable");
}

namespace {

GroupSpec parse_group_at(std::string_view s, std::size_t& i) {
  skip_ws(s, i);
  if (i >= s.size()) throw ParseError("expected group spec", i);
  if (s[i] == 'Z') { ++i; return GroupSpec::integers(); }
  if (s[i] == 'Q') { ++i; return GroupSpec::rationals(); }
  if (s[i] == '0') { ++i; return GroupSpec::trivial(); }
  if (s.substr(i, 4) == "lex(") {
    i += 4;
    GroupSpec l = parse_group_at(s, i);
    skip_ws(s, i);
    if (i >= s.size() || s[i] != ',') throw ParseError("expected ',' in lex", i);
    ++i;
    GroupSpec r = parse_group_at(s, i);
    skip_ws(s, i);
    if (i >= s.size() || s[i] != ')') throw ParseError("expected ')' in lex", i);
    ++i;
    return GroupSpec::lex(l, r);
  }
  throw ParseError("unknown group spec", i);
}

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  std::size_t i = 0;
  GroupSpec g = parse_group_at(text, i);
  skip_ws(text, i);
  if (i != text.size()) throw ParseError("trailing characters in group spec", i);
  return g;
}

std::string MonoidSpec::str() const {
  return nonneg ? "nonneg(" + group.str() + ")" : group.str();
}

MonoidSpec MonoidSpec::parse(std::string_view text) {
  std::size_t i = 0;
  skip_ws(text, i);
  if (text.substr(i, 7) == "nonneg(") {
    i += 7;
    GroupSpec g = parse_group_at(text, i);
    skip_ws(text, i);
    if (i >= text.size() || text[i] != ')')
      throw ParseError("expected ')' in nonneg", i);
    ++i;
    skip_ws(text, i);
    if (i != text.size()) throw ParseError("trailing characters", i);
    return MonoidSpec{g, true};
  }
  return MonoidSpec{GroupSpec::parse(text), false};
}

// ---------------------------------------------------------------------------
// GroupElem

GroupElem::GroupElem(GroupSpec group, std::vector<Rat> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  const auto& leaves = group_.leaf_kinds();
  if (coords_.size() != leaves.size())
    throw MismatchError("coordinate arity does not match group shape");
  for (std::size_t k = 0; k < leaves.size(); ++k) {
    if (leaves[k] == GroupSpec::Kind::Integers && !is_integral(coords_[k]))
      throw Error("non-integral coordinate in an integer leaf");
  }
}

GroupElem GroupElem::zero(const GroupSpec& g) {
  return GroupElem(g, std::vector<Rat>(g.leaf_count(), Rat(0)));
}

GroupElem GroupElem::operator+(const GroupElem& o) const {
  if (group_ != o.group_) throw MismatchError("group mismatch in addition");
  std::vector<Rat> c(coords_.size());
  for (std::size_t k = 0; k < coords_.size(); ++k) c[k] = coords_[k] + o.coords_[k];
  return GroupElem(group_, std::move(c));
}

GroupElem GroupElem::operator-(const GroupElem& o) const { return *this + (-o); }

GroupElem GroupElem::operator-() const {
  std::vector<Rat> c(coords_.size());
  for (std::size_t k = 0; k < coords_.size(); ++k) c[k] = -coords_[k];
  return GroupElem(group_, std::move(c));
}

std::strong_ordering GroupElem::operator<=>(const GroupElem& o) const {
  if (group_ != o.group_) throw MismatchError("group mismatch in comparison");
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k] < o.coords_[k]) return std::strong_ordering::less;
    if (coords_[k] > o.coords_[k]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool GroupElem::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

std::string GroupElem::str() const {
  if (coords_.empty()) return "()";
  if (coords_.size() == 1) return rat_str(coords_[0]);
  std::string out = "(";
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) out += ",";
    out += rat_str(coords_[k]);
  }
  return out + ")";
}

GroupElem GroupElem::parse(const GroupSpec& g, std::string_view text) {
  std::size_t i = 0;
  skip_ws(text, i);
  std::vector<Rat> coords;
  if (i < text.size() && text[i] == '(') {
    ++i;
    skip_ws(text, i);
    if (i < text.size() && text[i] == ')') {
      ++i;
    } else {
      for (;;) {
        coords.push_back(parse_rat_at(text, i));
        skip_ws(text, i);
        if (i < text.size() && text[i] == ',') { ++i; continue; }
        if (i < text.size() && text[i] == ')') { ++i; break; }
        throw ParseError("expected ',' or ')' in tuple", i);
      }
    }
  } else {
    coords.push_back(parse_rat_at(text, i));
  }
  skip_ws(text, i);
  if (i != text.size()) throw ParseError("trailing characters in element", i);
  return GroupElem(g, std::move(coords));
}

// ---------------------------------------------------------------------------
// ExtValue

ExtValue ExtValue::infinity(GroupSpec g) { return ExtValue(std::move(g), std::nullopt); }

ExtValue ExtValue::finite(GroupElem e) {
  GroupSpec g = e.group();
  return ExtValue(std::move(g), std::move(e));
}

const GroupElem& ExtValue::finite_value() const {
  if (!fin_) throw Error("value is infinity");
  return *fin_;
}

ExtValue ExtValue::operator+(const ExtValue& o) const {
  if (group_ != o.group_) throw MismatchError("group mismatch in addition");
  if (is_infinite() || o.is_infinite()) return infinity(group_);
  return finite(*fin_ + *o.fin_);
}

ExtValue ExtValue::minus(const ExtValue& o) const {
  if (group_ != o.group_) throw MismatchError("group mismatch in subtraction");
  if (o.is_infinite()) throw Error("cannot subtract infinity");
  if (is_infinite()) return infinity(group_);
  return finite(*fin_ - *o.fin_);
}

std::strong_ordering ExtValue::operator<=>(const ExtValue& o) const {
  if (group_ != o.group_) throw MismatchError("group mismatch in comparison");
  if (is_infinite() && o.is_infinite()) return std::strong_ordering::equal;
  if (is_infinite()) return std::strong_ordering::greater;
  if (o.is_infinite()) return std::strong_ordering::less;
  return *fin_ <=> *o.fin_;
}

std::string ExtValue::str() const { return fin_ ? fin_->str() : "inf"; }

ExtValue ExtValue::parse(const GroupSpec& g, std::string_view text) {
  std::size_t i = 0;
  skip_ws(text, i);
  if (text.substr(i, 3) == "inf") {
    i += 3;
    skip_ws(text, i);
    if (i != text.size()) throw ParseError("trailing characters", i);
    return infinity(g);
  }
  return finite(GroupElem::parse(g, text));
}

bool monoid_contains(const MonoidSpec& m, const ExtValue& v) {
  if (v.group() != m.group) return false;
  if (v.is_infinite()) return true;
  return !m.nonneg || !v.finite_value().negative();
}

// ---------------------------------------------------------------------------
// Order structure

std::optional<GroupElem> smallest_positive(const GroupSpec& g) {
  switch (g.kind()) {
    case GroupSpec::Kind::Integers:
      return GroupElem(g, {Rat(1)});
    case GroupSpec::Kind::Rationals:
    case GroupSpec::Kind::Trivial:
      return std::nullopt;
    case GroupSpec::Kind::Lex: {
      auto s = smallest_positive(g.right());
      if (!s) return std::nullopt;
      std::vector<Rat> coords(g.left().leaf_count(), Rat(0));
      coords.insert(coords.end(), s->coords().begin(), s->coords().end());
      return GroupElem(g, std::move(coords));
    }
  }
  throw Error("unreachable");
}

std::optional<GroupElem> unit_positive(const GroupSpec& g) {
  switch (g.kind()) {
    case GroupSpec::Kind::Integers:
    case GroupSpec::Kind::Rationals:
      return GroupElem(g, {Rat(1)});
    case GroupSpec::Kind::Trivial:
      return std::nullopt;
    case GroupSpec::Kind::Lex: {
      auto u = unit_positive(g.left());
      if (!u) return std::nullopt;
      std::vector<Rat> coords = u->coords();
      coords.resize(g.leaf_count(), Rat(0));
      return GroupElem(g, std::move(coords));
    }
  }
  throw Error("unreachable");
}

namespace {

// Strictly-between witness for two finite elements, recursing on the
// group shape.
std::optional<GroupElem> between_finite(const GroupSpec& g, const GroupElem& a,
                                        const GroupElem& b) {
  switch (g.kind()) {
    case GroupSpec::Kind::Integers: {
      Rat cand = a.coords()[0] + 1;
      if (cand < b.coords()[0]) return GroupElem(g, {cand});
      return std::nullopt;
    }
    case GroupSpec::Kind::Rationals:
      return GroupElem(g, {(a.coords()[0] + b.coords()[0]) / 2});
    case GroupSpec::Kind::Trivial:
      return std::nullopt;
    case GroupSpec::Kind::Lex: {
      const GroupSpec l = g.left(), r = g.right();
      const std::size_t nl = l.leaf_count();
      auto split = [&](const GroupElem& e) {
        std::vector<Rat> lc(e.coords().begin(), e.coords().begin() + nl);
        std::vector<Rat> rc(e.coords().begin() + nl, e.coords().end());
        return std::pair(GroupElem(l, std::move(lc)), GroupElem(r, std::move(rc)));
      };
      auto join = [&](const GroupElem& le, const GroupElem& re) {
        std::vector<Rat> c = le.coords();
        c.insert(c.end(), re.coords().begin(), re.coords().end());
        return GroupElem(g, std::move(c));
      };
      auto [al, ar] = split(a);
      auto [bl, br] = split(b);
      if (al == bl) {
        auto m = between_finite(r, ar, br);
        if (!m) return std::nullopt;
        return join(al, *m);
      }
      if (auto m = between_finite(l, al, bl)) return join(*m, GroupElem::zero(r));
      // Left coordinates are adjacent; move up in the right factor.
      auto step = smallest_positive(r);
      if (!step) step = unit_positive(r);
      return join(al, ar + *step);
    }
  }
  throw Error("unreachable");
}

}  // namespace

std::optional<ExtValue> between(const ExtValue& a, const ExtValue& b) {
  if (!(a < b)) throw PreconditionError("between requires a < b");
  const GroupSpec& g = a.group();
  if (b.is_infinite()) {
    auto step = smallest_positive(g);
    if (!step) step = unit_positive(g);
    if (!step) return std::nullopt;  // trivial group: nothing between 0 and inf
    return ExtValue::finite(a.finite_value() + *step);
  }
  auto m = between_finite(g, a.finite_value(), b.finite_value());
  if (!m) return std::nullopt;
  return ExtValue::finite(*m);
}

std::optional<std::pair<GroupElem, GroupElem>> split_positive(const GroupElem& a) {
  if (!a.positive()) throw PreconditionError("split_positive requires a > 0");
  const GroupSpec& g = a.group();
  switch (g.kind()) {
    case GroupSpec::Kind::Integers: {
      if (a.coords()[0] == 1) return std::nullopt;
      return std::pair(GroupElem(g, {Rat(1)}), GroupElem(g, {a.coords()[0] - 1}));
    }
    case GroupSpec::Kind::Rationals: {
      GroupElem h(g, {a.coords()[0] / 2});
      return std::pair(h, h);
    }
    case GroupSpec::Kind::Trivial:
      throw Error("trivial group has no positive elements");
    case GroupSpec::Kind::Lex: {
      const GroupSpec l = g.left(), r = g.right();
      const std::size_t nl = l.leaf_count();
      std::vector<Rat> lc(a.coords().begin(), a.coords().begin() + nl);
      std::vector<Rat> rc(a.coords().begin() + nl, a.coords().end());
      GroupElem al(l, lc), ar(r, rc);
      auto join = [&](const GroupElem& le, const GroupElem& re) {
        std::vector<Rat> c = le.coords();
        c.insert(c.end(), re.coords().begin(), re.coords().end());
        return GroupElem(g, std::move(c));
      };
      if (al.is_zero()) {
        auto parts = split_positive(ar);
        if (!parts) return std::nullopt;  // a is the smallest positive element
        return std::pair(join(GroupElem::zero(l), parts->first),
                         join(GroupElem::zero(l), parts->second));
      }
      if (auto parts = split_positive(al))
        return std::pair(join(parts->first, ar), join(parts->second, GroupElem::zero(r)));
      // Dominant part cannot split; borrow a unit from the right factor.
      auto u = unit_positive(r);
      if (!u) return std::nullopt;
      return std::pair(join(al, ar - *u), join(GroupElem::zero(l), *u));
    }
  }
  throw Error("unreachable");
}

GroupElem scalar_mul(const Rat& c, const GroupElem& e) {
  for (auto k : e.group().leaf_kinds())
    if (k != GroupSpec::Kind::Rationals)
      throw Error("scalar multiplication needs a rational-leaf group");
  std::vector<Rat> coords(e.coords().size());
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] = c * e.coords()[k];
  return GroupElem(e.group(), std::move(coords));
}

GroupElem next_above(const GroupElem& x) {
  const GroupSpec& g = x.group();
  switch (g.kind()) {
    case GroupSpec::Kind::Integers:
      return GroupElem(g, {x.coords()[0] + 1});
    case GroupSpec::Kind::Rationals:
      return GroupElem(g, {Rat(floor_rat(x.coords()[0]) + 1)});
    case GroupSpec::Kind::Trivial:
      throw Error("trivial group has no element above");
    case GroupSpec::Kind::Lex: {
      const GroupSpec l = g.left();
      const std::size_t nl = l.leaf_count();
      std::vector<Rat> lc(x.coords().begin(), x.coords().begin() + nl);
      GroupElem stepped = next_above(GroupElem(l, std::move(lc)));
      std::vector<Rat> c = stepped.coords();
      c.resize(g.leaf_count(), Rat(0));
      return GroupElem(g, std::move(c));
    }
  }
  throw Error("unreachable");
}

std::optional<GroupElem> coerce(const GroupElem& e, const GroupSpec& target) {
  if (e.group() == target) return e;
  if (e.group().is_trivial()) return GroupElem::zero(target);
  const auto& from = e.group().leaf_kinds();
  const auto& to = target.leaf_kinds();
  if (from.size() != to.size()) return std::nullopt;
  std::vector<Rat> coords = e.coords();
  for (std::size_t k = 0; k < from.size(); ++k) {
    if (to[k] == GroupSpec::Kind::Integers && !is_integral(coords[k]))
      return std::nullopt;
  }
  // Leaf shapes are compatible (Z embeds in Q; integral values embed in Z).
  return GroupElem(target, std::move(coords));
}

std::optional<ExtValue> coerce(const ExtValue& v, const GroupSpec& target) {
  if (v.is_infinite()) return ExtValue::infinity(target);
  auto e = coerce(v.finite_value(), target);
  if (!e) return std::nullopt;
  return ExtValue::finite(*e);
}

}  // namespace valtop
