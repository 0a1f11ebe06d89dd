#include "valtop/rings.hpp"

#include <algorithm>
#include <cctype>

namespace valtop {

namespace {

constexpr int kMaxExponent = 4096;

bool grlex_less(const std::pair<int, int>& a, const std::pair<int, int>& b) {
  const int da = a.first + a.second, db = b.first + b.second;
  if (da != db) return da < db;
  return a.first < b.first;
}

}  // namespace

// ---------------------------------------------------------------------------
// RingSpec

RingSpec RingSpec::fractions(const RingSpec& base) {
  if (base.is_fractions()) throw Error("nested fraction rings are not supported");
  RingSpec out(Kind::Fractions);
  out.inner_ = std::make_shared<const RingSpec>(base);
  return out;
}

bool RingSpec::operator==(const RingSpec& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ != Kind::Fractions) return true;
  return *inner_ == *o.inner_;
}

std::string RingSpec::str() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::Poly1: return "poly1";
    case Kind::Poly2: return "poly2";
    case Kind::Fractions: return "frac(" + inner_->str() + ")";
  }
  throw Error("unreachable");
}

RingSpec RingSpec::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s == "Z") return integers();
  if (s == "Q") return rationals();
  if (s == "poly1") return poly1();
  if (s == "poly2") return poly2();
  if (s.starts_with("frac(") && s.ends_with(")"))
    return fractions(parse(s.substr(5, s.size() - 6)));
  throw ParseError("unknown ring spec '" + std::string(s) + "'", 0);
}

// ---------------------------------------------------------------------------
// Polynomial helpers

namespace {

Poly1Coeffs p1_add(const Poly1Coeffs& a, const Poly1Coeffs& b) {
  Poly1Coeffs out = a;
  for (const auto& [e, c] : b) {
    Rat& slot = out[e];
    slot += c;
    if (slot == 0) out.erase(e);
  }
  return out;
}

Poly1Coeffs p1_neg(const Poly1Coeffs& a) {
  Poly1Coeffs out;
  for (const auto& [e, c] : a) out[e] = -c;
  return out;
}

Poly1Coeffs p1_mul(const Poly1Coeffs& a, const Poly1Coeffs& b) {
  Poly1Coeffs out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Rat& slot = out[ea + eb];
      slot += ca * cb;
      if (slot == 0) out.erase(ea + eb);
    }
  }
  return out;
}

int p1_deg(const Poly1Coeffs& a) { return a.empty() ? -1 : a.rbegin()->first; }

// Euclidean division over Q[x].
std::pair<Poly1Coeffs, Poly1Coeffs> p1_divmod(Poly1Coeffs a, const Poly1Coeffs& b) {
  if (b.empty()) throw Error("polynomial division by zero");
  Poly1Coeffs q;
  const int db = p1_deg(b);
  const Rat lb = b.rbegin()->second;
  while (!a.empty() && p1_deg(a) >= db) {
    const int shift = p1_deg(a) - db;
    const Rat coeff = a.rbegin()->second / lb;
    q[shift] = coeff;
    Poly1Coeffs piece;
    for (const auto& [e, c] : b) piece[e + shift] = c * coeff;
    a = p1_add(a, p1_neg(piece));
  }
  return {std::move(q), std::move(a)};
}

Poly1Coeffs p1_monic(Poly1Coeffs a) {
  if (a.empty()) return a;
  const Rat lc = a.rbegin()->second;
  for (auto& [e, c] : a) c /= lc;
  return a;
}

Poly1Coeffs p1_gcd(Poly1Coeffs a, Poly1Coeffs b) {
  while (!b.empty()) {
    auto [q, r] = p1_divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return p1_monic(std::move(a));
}

Poly2Coeffs p2_add(const Poly2Coeffs& a, const Poly2Coeffs& b) {
  Poly2Coeffs out = a;
  for (const auto& [e, c] : b) {
    Rat& slot = out[e];
    slot += c;
    if (slot == 0) out.erase(e);
  }
  return out;
}

Poly2Coeffs p2_neg(const Poly2Coeffs& a) {
  Poly2Coeffs out;
  for (const auto& [e, c] : a) out[e] = -c;
  return out;
}

Poly2Coeffs p2_mul(const Poly2Coeffs& a, const Poly2Coeffs& b) {
  Poly2Coeffs out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      const std::pair<int, int> e{ea.first + eb.first, ea.second + eb.second};
      Rat& slot = out[e];
      slot += ca * cb;
      if (slot == 0) out.erase(e);
    }
  }
  return out;
}

std::pair<int, int> p2_min_exponents(const Poly2Coeffs& a) {
  std::pair<int, int> m{kMaxExponent, kMaxExponent};
  for (const auto& [e, c] : a) {
    m.first = std::min(m.first, e.first);
    m.second = std::min(m.second, e.second);
  }
  return m;
}

Poly2Coeffs p2_shift_down(const Poly2Coeffs& a, const std::pair<int, int>& by) {
  Poly2Coeffs out;
  for (const auto& [e, c] : a) out[{e.first - by.first, e.second - by.second}] = c;
  return out;
}

Rat p2_leading_coeff(const Poly2Coeffs& a) {
  std::pair<int, int> best{-1, -1};
  Rat c = 0;
  bool any = false;
  for (const auto& [e, coeff] : a) {
    if (!any || grlex_less(best, e)) {
      best = e;
      c = coeff;
      any = true;
    }
  }
  return c;
}

Poly2Coeffs p2_scale(const Poly2Coeffs& a, const Rat& s) {
  Poly2Coeffs out;
  for (const auto& [e, c] : a) out[e] = c * s;
  return out;
}

std::string p1_str(const Poly1Coeffs& a) {
  if (a.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    const int e = it->first;
    const Rat& c = it->second;
    std::string term;
    if (e == 0) {
      term = rat_str(c);
    } else {
      std::string body = e == 1 ? "x" : "x^" + std::to_string(e);
      if (c == 1)
        term = body;
      else if (c == -1)
        term = "-" + body;
      else
        term = rat_str(c) + "*" + body;
    }
    if (!first && term[0] != '-') out += "+";
    out += term;
    first = false;
  }
  return out;
}

std::string p2_str(const Poly2Coeffs& a) {
  if (a.empty()) return "0";
  std::vector<std::pair<std::pair<int, int>, Rat>> terms(a.begin(), a.end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& l, const auto& r) { return grlex_less(r.first, l.first); });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    std::string body;
    if (e.first > 0) body = e.first == 1 ? "x" : "x^" + std::to_string(e.first);
    if (e.second > 0) {
      if (!body.empty()) body += "*";
      body += e.second == 1 ? "y" : "y^" + std::to_string(e.second);
    }
    std::string term;
    if (body.empty())
      term = rat_str(c);
    else if (c == 1)
      term = body;
    else if (c == -1)
      term = "-" + body;
    else
      term = rat_str(c) + "*" + body;
    if (!first && term[0] != '-') out += "+";
    out += term;
    first = false;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// RingElem

RingElem RingElem::integer(Int n) {
  RingElem e;
  e.ring_ = RingSpec::integers();
  e.v_ = std::move(n);
  return e;
}

RingElem RingElem::rational(Rat q) {
  RingElem e;
  e.ring_ = RingSpec::rationals();
  e.v_ = std::move(q);
  return e;
}

RingElem RingElem::poly1(Poly1Coeffs c) {
  for (auto it = c.begin(); it != c.end();) {
    if (it->second == 0)
      it = c.erase(it);
    else
      ++it;
  }
  RingElem e;
  e.ring_ = RingSpec::poly1();
  e.v_ = std::move(c);
  return e;
}

RingElem RingElem::poly2(Poly2Coeffs c) {
  for (auto it = c.begin(); it != c.end();) {
    if (it->second == 0)
      it = c.erase(it);
    else
      ++it;
  }
  RingElem e;
  e.ring_ = RingSpec::poly2();
  e.v_ = std::move(c);
  return e;
}

namespace {

// Reduced canonical pair over the base ring: gcd out, fixed sign or
// leading coefficient, constant denominators folded into the numerator.
std::pair<RingElem, RingElem> reduce_fraction(RingElem num, RingElem den);

}  // namespace

RingElem RingElem::fraction(const RingSpec& spec, RingElem num, RingElem den) {
  if (!spec.is_fractions()) throw Error("fraction elements need a fraction ring");
  if (num.ring() != spec.base() || den.ring() != spec.base())
    throw MismatchError("fraction parts must come from the base ring");
  auto [n, d] = reduce_fraction(std::move(num), std::move(den));
  RingElem e;
  e.ring_ = spec;
  e.v_ = Frac{std::make_shared<const RingElem>(std::move(n)),
              std::make_shared<const RingElem>(std::move(d))};
  return e;
}

RingElem RingElem::zero(const RingSpec& spec) {
  switch (spec.kind()) {
    case RingSpec::Kind::Integers: return integer(0);
    case RingSpec::Kind::Rationals: return rational(0);
    case RingSpec::Kind::Poly1: return poly1({});
    case RingSpec::Kind::Poly2: return poly2({});
    case RingSpec::Kind::Fractions:
      return fraction(spec, zero(spec.base()), one(spec.base()));
  }
  throw Error("unreachable");
}

RingElem RingElem::one(const RingSpec& spec) {
  switch (spec.kind()) {
    case RingSpec::Kind::Integers: return integer(1);
    case RingSpec::Kind::Rationals: return rational(1);
    case RingSpec::Kind::Poly1: return poly1({{0, Rat(1)}});
    case RingSpec::Kind::Poly2: return poly2({{{0, 0}, Rat(1)}});
    case RingSpec::Kind::Fractions:
      return fraction(spec, one(spec.base()), one(spec.base()));
  }
  throw Error("unreachable");
}

bool RingElem::is_zero() const {
  switch (ring_.kind()) {
    case RingSpec::Kind::Integers: return as_int() == 0;
    case RingSpec::Kind::Rationals: return as_rat() == 0;
    case RingSpec::Kind::Poly1: return as_poly1().empty();
    case RingSpec::Kind::Poly2: return as_poly2().empty();
    case RingSpec::Kind::Fractions: return frac_num().is_zero();
  }
  throw Error("unreachable");
}

bool RingElem::is_one() const { return *this == one(ring_); }

const Int& RingElem::as_int() const { return std::get<Int>(v_); }
const Rat& RingElem::as_rat() const { return std::get<Rat>(v_); }
const Poly1Coeffs& RingElem::as_poly1() const { return std::get<Poly1Coeffs>(v_); }
const Poly2Coeffs& RingElem::as_poly2() const { return std::get<Poly2Coeffs>(v_); }
const RingElem& RingElem::frac_num() const { return *std::get<Frac>(v_).num; }
const RingElem& RingElem::frac_den() const { return *std::get<Frac>(v_).den; }

bool RingElem::operator==(const RingElem& o) const {
  if (ring_ != o.ring_) return false;
  switch (ring_.kind()) {
    case RingSpec::Kind::Integers: return as_int() == o.as_int();
    case RingSpec::Kind::Rationals: return as_rat() == o.as_rat();
    case RingSpec::Kind::Poly1: return as_poly1() == o.as_poly1();
    case RingSpec::Kind::Poly2: return as_poly2() == o.as_poly2();
    case RingSpec::Kind::Fractions:
      return frac_num() == o.frac_num() && frac_den() == o.frac_den();
  }
  throw Error("unreachable");
}

std::string RingElem::str() const {
  switch (ring_.kind()) {
    case RingSpec::Kind::Integers: return as_int().str();
    case RingSpec::Kind::Rationals: return rat_str(as_rat());
    case RingSpec::Kind::Poly1: return p1_str(as_poly1());
    case RingSpec::Kind::Poly2: return p2_str(as_poly2());
    case RingSpec::Kind::Fractions:
      return "(" + frac_num().str() + ")/(" + frac_den().str() + ")";
  }
  throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// Arithmetic

namespace {

std::pair<RingElem, RingElem> reduce_fraction(RingElem num, RingElem den) {
  if (den.is_zero()) throw Error("zero denominator");
  const RingSpec base = num.ring();
  if (num.is_zero()) return {RingElem::zero(base), RingElem::one(base)};
  switch (base.kind()) {
    case RingSpec::Kind::Integers: {
      Int n = num.as_int(), d = den.as_int();
      Int g = boost::multiprecision::gcd(n, d);
      if (g != 0) {
        n /= g;
        d /= g;
      }
      if (d < 0) {
        n = -n;
        d = -d;
      }
      return {RingElem::integer(n), RingElem::integer(d)};
    }
    case RingSpec::Kind::Rationals:
      return {RingElem::rational(num.as_rat() / den.as_rat()), RingElem::rational(1)};
    case RingSpec::Kind::Poly1: {
      Poly1Coeffs n = num.as_poly1(), d = den.as_poly1();
      Poly1Coeffs g = p1_gcd(n, d);
      if (p1_deg(g) > 0 || (!g.empty() && g.begin()->second != 1)) {
        n = p1_divmod(n, g).first;
        d = p1_divmod(d, g).first;
      }
      const Rat lc = d.rbegin()->second;
      if (lc != 1) {
        for (auto& [e, c] : n) c /= lc;
        for (auto& [e, c] : d) c /= lc;
      }
      if (p1_deg(d) == 0) {
        // Denominator reduced to 1.
        return {RingElem::poly1(std::move(n)), RingElem::poly1({{0, Rat(1)}})};
      }
      return {RingElem::poly1(std::move(n)), RingElem::poly1(std::move(d))};
    }
    case RingSpec::Kind::Poly2: {
      Poly2Coeffs n = num.as_poly2(), d = den.as_poly2();
      auto mn = p2_min_exponents(n);
      auto md = p2_min_exponents(d);
      const std::pair<int, int> common{std::min(mn.first, md.first),
                                       std::min(mn.second, md.second)};
      if (common.first > 0 || common.second > 0) {
        n = p2_shift_down(n, common);
        d = p2_shift_down(d, common);
      }
      const Rat lc = p2_leading_coeff(d);
      if (lc != 1) {
        n = p2_scale(n, Rat(1) / lc);
        d = p2_scale(d, Rat(1) / lc);
      }
      return {RingElem::poly2(std::move(n)), RingElem::poly2(std::move(d))};
    }
    case RingSpec::Kind::Fractions:
      throw Error("unreachable");
  }
  throw Error("unreachable");
}

}  // namespace

RingElem ring_add(const RingElem& a, const RingElem& b) {
  if (a.ring() != b.ring()) throw MismatchError("ring mismatch in addition");
  switch (a.ring().kind()) {
    case RingSpec::Kind::Integers: return RingElem::integer(a.as_int() + b.as_int());
    case RingSpec::Kind::Rationals: return RingElem::rational(a.as_rat() + b.as_rat());
    case RingSpec::Kind::Poly1: return RingElem::poly1(p1_add(a.as_poly1(), b.as_poly1()));
    case RingSpec::Kind::Poly2: return RingElem::poly2(p2_add(a.as_poly2(), b.as_poly2()));
    case RingSpec::Kind::Fractions: {
      RingElem n = ring_add(ring_mul(a.frac_num(), b.frac_den()),
                            ring_mul(b.frac_num(), a.frac_den()));
      RingElem d = ring_mul(a.frac_den(), b.frac_den());
      return RingElem::fraction(a.ring(), std::move(n), std::move(d));
    }
  }
  throw Error("unreachable");
}

RingElem ring_neg(const RingElem& a) {
  switch (a.ring().kind()) {
    case RingSpec::Kind::Integers: return RingElem::integer(-a.as_int());
    case RingSpec::Kind::Rationals: return RingElem::rational(-a.as_rat());
    case RingSpec::Kind::Poly1: return RingElem::poly1(p1_neg(a.as_poly1()));
    case RingSpec::Kind::Poly2: return RingElem::poly2(p2_neg(a.as_poly2()));
    case RingSpec::Kind::Fractions:
      return RingElem::fraction(a.ring(), ring_neg(a.frac_num()), a.frac_den());
  }
  throw Error("unreachable");
}

RingElem ring_sub(const RingElem& a, const RingElem& b) { return ring_add(a, ring_neg(b)); }

RingElem ring_mul(const RingElem& a, const RingElem& b) {
  if (a.ring() != b.ring()) throw MismatchError("ring mismatch in multiplication");
  switch (a.ring().kind()) {
    case RingSpec::Kind::Integers: return RingElem::integer(a.as_int() * b.as_int());
    case RingSpec::Kind::Rationals: return RingElem::rational(a.as_rat() * b.as_rat());
    case RingSpec::Kind::Poly1: return RingElem::poly1(p1_mul(a.as_poly1(), b.as_poly1()));
    case RingSpec::Kind::Poly2: return RingElem::poly2(p2_mul(a.as_poly2(), b.as_poly2()));
    case RingSpec::Kind::Fractions:
      return RingElem::fraction(a.ring(), ring_mul(a.frac_num(), b.frac_num()),
                                ring_mul(a.frac_den(), b.frac_den()));
  }
  throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// Element parser

namespace {

struct Token {
  enum class Type { Num, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Type type;
  Int num;
  char var = 0;
  std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::Type::Num, Int(std::string(s.substr(start, i - start))), 0, start});
      continue;
    }
    if (c == 'x' || c == 'y') {
      out.push_back({Token::Type::Var, 0, c, i});
      ++i;
      continue;
    }
    Token::Type t;
    switch (c) {
      case '+': t = Token::Type::Plus; break;
      case '-': t = Token::Type::Minus; break;
      case '*': t = Token::Type::Star; break;
      case '/': t = Token::Type::Slash; break;
      case '^': t = Token::Type::Caret; break;
      case '(': t = Token::Type::LParen; break;
      case ')': t = Token::Type::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({t, 0, 0, i});
    ++i;
  }
  out.push_back({Token::Type::End, 0, 0, s.size()});
  return out;
}

// Expressions evaluate in the fraction field of the base ring.
struct FieldVal {
  RingElem num, den;
};

struct ElemParser {
  const std::vector<Token>& toks;
  std::size_t at = 0;
  RingSpec base;

  const Token& cur() const { return toks[at]; }
  void advance() { ++at; }

  FieldVal make(RingElem n) {
    return {std::move(n), RingElem::one(base)};
  }

  FieldVal reduce(RingElem n, RingElem d, std::size_t pos) {
    if (d.is_zero()) throw ParseError("division by zero", pos);
    auto [rn, rd] = [&] {
      RingElem num = std::move(n), den = std::move(d);
      RingSpec f = RingSpec::fractions(base);
      RingElem e = RingElem::fraction(f, std::move(num), std::move(den));
      return std::pair(e.frac_num(), e.frac_den());
    }();
    return {rn, rd};
  }

  FieldVal add(const FieldVal& a, const FieldVal& b, std::size_t pos) {
    return reduce(ring_add(ring_mul(a.num, b.den), ring_mul(b.num, a.den)),
                  ring_mul(a.den, b.den), pos);
  }
  FieldVal sub(const FieldVal& a, const FieldVal& b, std::size_t pos) {
    return reduce(ring_sub(ring_mul(a.num, b.den), ring_mul(b.num, a.den)),
                  ring_mul(a.den, b.den), pos);
  }
  FieldVal mul(const FieldVal& a, const FieldVal& b, std::size_t pos) {
    return reduce(ring_mul(a.num, b.num), ring_mul(a.den, b.den), pos);
  }
  FieldVal div(const FieldVal& a, const FieldVal& b, std::size_t pos) {
    return reduce(ring_mul(a.num, b.den), ring_mul(a.den, b.num), pos);
  }

  FieldVal expr() {
    FieldVal v = term();
    for (;;) {
      if (cur().type == Token::Type::Plus) {
        std::size_t p = cur().pos;
        advance();
        v = add(v, term(), p);
      } else if (cur().type == Token::Type::Minus) {
        std::size_t p = cur().pos;
        advance();
        v = sub(v, term(), p);
      } else {
        return v;
      }
    }
  }

  FieldVal term() {
    FieldVal v = factor();
    for (;;) {
      if (cur().type == Token::Type::Star) {
        std::size_t p = cur().pos;
        advance();
        v = mul(v, factor(), p);
      } else if (cur().type == Token::Type::Slash) {
        std::size_t p = cur().pos;
        advance();
        v = div(v, factor(), p);
      } else {
        return v;
      }
    }
  }

  FieldVal factor() {
    if (cur().type == Token::Type::Minus) {
      advance();
      FieldVal v = factor();
      return {ring_neg(v.num), v.den};
    }
    return power();
  }

  FieldVal power() {
    FieldVal v = atom();
    while (cur().type == Token::Type::Caret) {
      std::size_t p = cur().pos;
      advance();
      if (cur().type != Token::Type::Num)
        throw ParseError("expected integer exponent", cur().pos);
      if (cur().num < 0 || cur().num > kMaxExponent)
        throw ParseError("exponent out of range", cur().pos);
      long e = cur().num.convert_to<long>();
      advance();
      FieldVal out = make(RingElem::one(base));
      for (long k = 0; k < e; ++k) out = mul(out, v, p);
      v = std::move(out);
    }
    return v;
  }

  RingElem constant(const Int& n) {
    switch (base.kind()) {
      case RingSpec::Kind::Integers: return RingElem::integer(n);
      case RingSpec::Kind::Rationals: return RingElem::rational(Rat(n));
      case RingSpec::Kind::Poly1:
        return n == 0 ? RingElem::poly1({}) : RingElem::poly1({{0, Rat(n)}});
      case RingSpec::Kind::Poly2:
        return n == 0 ? RingElem::poly2({}) : RingElem::poly2({{{0, 0}, Rat(n)}});
      default: throw Error("unreachable");
    }
  }

  FieldVal atom() {
    const Token& t = cur();
    switch (t.type) {
      case Token::Type::Num: {
        Int n = t.num;
        advance();
        return make(constant(n));
      }
      case Token::Type::Var: {
        if (t.var == 'x') {
          if (base.kind() == RingSpec::Kind::Poly1) {
            advance();
            return make(RingElem::poly1({{1, Rat(1)}}));
          }
          if (base.kind() == RingSpec::Kind::Poly2) {
            advance();
            return make(RingElem::poly2({{{1, 0}, Rat(1)}}));
          }
          throw ParseError("variable x is not available in this ring", t.pos);
        }
        if (base.kind() == RingSpec::Kind::Poly2) {
          advance();
          return make(RingElem::poly2({{{0, 1}, Rat(1)}}));
        }
        throw ParseError("variable y is not available in this ring", t.pos);
      }
      case Token::Type::LParen: {
        advance();
        FieldVal v = expr();
        if (cur().type != Token::Type::RParen)
          throw ParseError("expected ')'", cur().pos);
        advance();
        return v;
      }
      default:
        throw ParseError("expected a number, variable or '('", t.pos);
    }
  }
};

}  // namespace

RingElem parse_elem(std::string_view text, const RingSpec& spec) {
  auto toks = tokenize(text);
  ElemParser p{toks, 0, spec.base()};
  FieldVal v = p.expr();
  if (p.cur().type != Token::Type::End)
    throw ParseError("trailing characters in element", p.cur().pos);
  if (spec.is_fractions()) return RingElem::fraction(spec, v.num, v.den);
  if (!v.den.is_one())
    throw ParseError("element has a non-trivial denominator in ring " + spec.str(),
                     text.size());
  return v.num;
}

}  // namespace valtop
