#include "valtop/fn_table.hpp"

namespace valtop {

FnTable::FnTable(RingSpec ring, MonoidSpec monoid, std::optional<Valuation> backing)
    : ring_(std::move(ring)), monoid_(std::move(monoid)), backing_(std::move(backing)) {
  if (backing_) {
    if (!backing_->defined_on(ring_))
      throw MismatchError("backing valuation is not defined on the table ring");
    if (backing_->value_group() != monoid_.group)
      throw MismatchError("backing valuation group does not match the monoid");
  }
}

void FnTable::set(const RingElem& a, const ExtValue& v) {
  if (a.ring() != ring_) throw MismatchError("entry element ring mismatch");
  if (!monoid_contains(monoid_, v))
    throw Error("entry value " + v.str() + " lies outside the monoid " + monoid_.str());
  auto key = a.str();
  auto it = index_.find(key);
  if (it != index_.end()) {
    entries_[it->second].second = v;
    return;
  }
  index_[key] = entries_.size();
  entries_.emplace_back(a, v);
}

std::optional<ExtValue> FnTable::value_of(const RingElem& a) const {
  auto it = index_.find(a.str());
  if (it != index_.end()) return entries_[it->second].second;
  if (backing_) return evaluate(*backing_, a);
  return std::nullopt;
}

std::optional<ViolationReport> check_axioms(const FnTable& table) {
  const GroupSpec& g = table.group();
  const ExtValue zero = ExtValue::zero(g);
  const ExtValue inf = ExtValue::infinity(g);

  // V3 first: f(1) = 0 and f(0) = inf wherever determinable.
  {
    const RingElem one = RingElem::one(table.ring());
    if (auto v = table.value_of(one); v && !(*v == zero))
      return ViolationReport{ViolationReport::Axiom::V3, {one}, {*v}};
    const RingElem zero_elem = RingElem::zero(table.ring());
    if (auto v = table.value_of(zero_elem); v && !(*v == inf))
      return ViolationReport{ViolationReport::Axiom::V3, {zero_elem}, {*v}};
  }

  const auto& entries = table.entries();

  // V1: f(ab) = f(a) + f(b) for every pair whose product is determinable.
  for (const auto& [a, fa] : entries) {
    for (const auto& [b, fb] : entries) {
      RingElem ab = ring_mul(a, b);
      auto fab = table.value_of(ab);
      if (!fab) continue;
      if (!(*fab == fa + fb))
        return ViolationReport{ViolationReport::Axiom::V1, {a, b}, {fa, fb, *fab}};
    }
  }

  // V2: f(a+b) >= min(f(a), f(b)) for every determinable sum.
  for (const auto& [a, fa] : entries) {
    for (const auto& [b, fb] : entries) {
      RingElem sum = ring_add(a, b);
      auto fsum = table.value_of(sum);
      if (!fsum) continue;
      const ExtValue& low = fa < fb ? fa : fb;
      if (*fsum < low)
        return ViolationReport{ViolationReport::Axiom::V2, {a, b}, {fa, fb, *fsum}};
    }
  }

  return std::nullopt;
}

}  // namespace valtop
