#include "valtop/serialize.hpp"

#include <json.hpp>

namespace valtop {

namespace {

using ojson = nlohmann::ordered_json;
using njson = nlohmann::json;

ojson elem_json(const GroupElem& e) {
  ojson arr = ojson::array();
  for (const auto& c : e.coords()) arr.push_back(rat_str(c));
  return arr;
}

GroupElem elem_from(const njson& j, const GroupSpec& g) {
  if (!j.is_array()) throw ParseError("element must be an array of strings", 0);
  std::vector<Rat> coords;
  for (const auto& item : j) coords.push_back(parse_rat(item.get<std::string>()));
  return GroupElem(g, std::move(coords));
}

ojson value_json(const ExtValue& v) {
  if (v.is_infinite()) return ojson("inf");
  return elem_json(v.finite_value());
}

ExtValue value_from(const njson& j, const GroupSpec& g) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtValue::infinity(g);
  return ExtValue::finite(elem_from(j, g));
}

ojson interval_json(const Interval& p) {
  ojson j;
  j["lower"] = p.lo() ? ojson(elem_json(*p.lo())) : ojson("-inf");
  j["upper"] = p.hi() ? ojson(elem_json(*p.hi())) : ojson("+inf");
  j["inf"] = p.with_inf();
  return j;
}

ojson open_set_json(const OpenSet& u) {
  ojson arr = ojson::array();
  for (const auto& p : u.parts()) arr.push_back(interval_json(p));
  return arr;
}

OpenSet open_set_from(const njson& j, const GroupSpec& g) {
  if (!j.is_array()) throw ParseError("open set must be an array of intervals", 0);
  std::vector<Interval> parts;
  for (const auto& item : j) {
    std::optional<GroupElem> lo, hi;
    const auto& jl = item.at("lower");
    if (!(jl.is_string() && jl.get<std::string>() == "-inf")) lo = elem_from(jl, g);
    const auto& jh = item.at("upper");
    if (!(jh.is_string() && jh.get<std::string>() == "+inf")) hi = elem_from(jh, g);
    parts.emplace_back(g, lo, hi, item.value("inf", false));
  }
  return OpenSet::of(g, std::move(parts));
}

ojson violation_json(const ViolationReport& v) {
  ojson j;
  j["axiom"] = v.axiom_name();
  ojson w = ojson::array();
  for (const auto& e : v.witnesses) w.push_back(e.str());
  j["witnesses"] = w;
  ojson o = ojson::array();
  for (const auto& val : v.observed) o.push_back(value_json(val));
  j["observed"] = o;
  return j;
}

ViolationReport violation_from(const njson& j, const RingSpec& ring,
                               const GroupSpec& g) {
  ViolationReport v;
  const std::string axiom = j.at("axiom").get<std::string>();
  if (axiom == "V1")
    v.axiom = ViolationReport::Axiom::V1;
  else if (axiom == "V2")
    v.axiom = ViolationReport::Axiom::V2;
  else if (axiom == "V3")
    v.axiom = ViolationReport::Axiom::V3;
  else
    throw ParseError("unknown axiom " + axiom, 0);
  for (const auto& w : j.at("witnesses"))
    v.witnesses.push_back(parse_elem(w.get<std::string>(), ring));
  for (const auto& o : j.at("observed")) v.observed.push_back(value_from(o, g));
  return v;
}

}  // namespace

std::string to_json(const OpenSet& u) { return open_set_json(u).dump(2); }

OpenSet open_set_from_json(std::string_view text, const GroupSpec& g) {
  return open_set_from(njson::parse(text), g);
}

std::vector<OpenSet> open_set_list_from_json(std::string_view text, const GroupSpec& g) {
  njson j = njson::parse(text);
  if (!j.is_array()) throw ParseError("expected an array of open sets", 0);
  std::vector<OpenSet> out;
  for (const auto& item : j) out.push_back(open_set_from(item, g));
  return out;
}

std::string to_json(const FnTable& t) {
  ojson j;
  j["ring"] = t.ring().str();
  j["monoid"] = t.monoid().str();
  ojson entries = ojson::array();
  for (const auto& [elem, value] : t.entries()) {
    ojson e;
    e["elem"] = elem.str();
    e["value"] = value_json(value);
    entries.push_back(e);
  }
  j["entries"] = entries;
  j["backing"] = t.backing() ? ojson(t.backing()->str()) : ojson(nullptr);
  return j.dump(2);
}

FnTable fn_table_from_json(std::string_view text) {
  njson j = njson::parse(text);
  RingSpec ring = RingSpec::parse(j.at("ring").get<std::string>());
  MonoidSpec monoid = MonoidSpec::parse(j.at("monoid").get<std::string>());
  std::optional<Valuation> backing;
  if (j.contains("backing") && !j.at("backing").is_null())
    backing = Valuation::parse(j.at("backing").get<std::string>());
  FnTable t(ring, monoid, backing);
  for (const auto& e : j.at("entries")) {
    t.set(parse_elem(e.at("elem").get<std::string>(), ring),
          value_from(e.at("value"), monoid.group));
  }
  return t;
}

std::string to_json(const Certificate& c) {
  ojson j;
  j["ring"] = c.ring.str();
  j["monoid"] = c.monoid.str();
  j["violation"] = violation_json(c.violation);
  ojson cons = ojson::array();
  for (const auto& [elem, open] : c.cylinder.constraints) {
    ojson e;
    e["elem"] = elem.str();
    e["open"] = open_set_json(open);
    cons.push_back(e);
  }
  j["constraints"] = cons;
  ojson side;
  for (const auto& [role, open] : c.side_data) side[role] = open_set_json(open);
  j["side_data"] = side;
  j["window"] = c.window;
  return j.dump(2);
}

Certificate certificate_from_json(std::string_view text) {
  // Ordered parsing keeps side-data roles in document order, so a
  // reloaded certificate re-serializes byte-for-byte.
  ojson j = ojson::parse(text);
  Certificate c;
  c.ring = RingSpec::parse(j.at("ring").get<std::string>());
  c.monoid = MonoidSpec::parse(j.at("monoid").get<std::string>());
  c.violation = violation_from(j.at("violation"), c.ring, c.monoid.group);
  for (const auto& e : j.at("constraints")) {
    c.cylinder.constraints.emplace_back(
        parse_elem(e.at("elem").get<std::string>(), c.ring),
        open_set_from(e.at("open"), c.monoid.group));
  }
  for (const auto& [role, open] : j.at("side_data").items())
    c.side_data.emplace_back(role, open_set_from(open, c.monoid.group));
  c.window = j.value("window", 16);
  return c;
}

std::string to_json(const CertificateVerdict& v) {
  ojson j;
  j["f_in_cylinder"] = v.f_in_cylinder;
  j["conditions_hold"] = v.conditions_hold;
  j["probes_excluded"] = v.probes_excluded;
  j["probes_checked"] = v.probes_checked;
  j["pass"] = v.pass();
  j["notes"] = v.notes;
  return j.dump(2);
}

std::string to_json(const T1CounterexampleReport& r) {
  ojson j;
  j["violation"] = violation_json(r.violation);
  j["modified_at"] = r.modified_at.str();
  j["old_value"] = value_json(r.old_value);
  j["new_value"] = value_json(r.new_value);
  j["basis_opens_checked"] = r.basis_opens_checked;
  j["all_contain_backing_value"] = r.all_contain_backing_value;
  j["sampled_unions_verified"] = r.sampled_unions_verified;
  j["coordinates_checked"] = r.coordinates_checked;
  j["note"] = r.note;
  return j.dump(2);
}

std::string to_json(const P2Result& r) {
  ojson j;
  if (r.witness) {
    j["kind"] = "witness";
    j["U"] = open_set_json(r.witness->u);
    j["U'"] = open_set_json(r.witness->u_prime);
  } else {
    j["kind"] = "refutation";
    ojson arr = ojson::array();
    for (const auto& inst : r.refutation) {
      ojson e;
      e["neighborhood"] = open_set_json(inst.neighborhood);
      e["counter_element"] = value_json(inst.counter_element);
      arr.push_back(e);
    }
    j["instances"] = arr;
  }
  return j.dump(2);
}

std::string to_json(const P1FailureWitness& w) {
  ojson j;
  j["U"] = open_set_json(w.u);
  ojson arr = ojson::array();
  for (const auto& inst : w.instances) {
    ojson e;
    e["V"] = open_set_json(inst.v);
    e["V'"] = open_set_json(inst.v_prime);
    e["gamma"] = elem_json(inst.gamma);
    e["verified"] = inst.verified;
    arr.push_back(e);
  }
  j["instances"] = arr;
  j["all_pass"] = w.all_pass;
  return j.dump(2);
}

std::string to_json(const RefinementVerdict& v) {
  ojson j;
  j["consistent"] = v.consistent;
  j["refutation"] = v.refutation ? ojson(open_set_json(*v.refutation)) : ojson(nullptr);
  j["strict_witness"] =
      v.strict_witness ? ojson(open_set_json(*v.strict_witness)) : ojson(nullptr);
  j["samples_checked"] = v.samples_checked;
  j["suite"] = kSampleSuiteVersion;
  return j.dump(2);
}

std::string to_json(const EqualityVerdict& v) {
  ojson j;
  j["equal"] = v.equal;
  j["witness"] = v.witness ? ojson(open_set_json(*v.witness)) : ojson(nullptr);
  j["witness_side"] = v.witness_side;
  j["samples_checked"] = v.samples_checked;
  j["suite"] = kSampleSuiteVersion;
  return j.dump(2);
}

std::string to_json(const CoverReport& r) {
  ojson j;
  j["family"] = r.family;
  ojson pts = ojson::array();
  for (const auto& p : r.points) {
    ojson e;
    e["point"] = p.point;
    e["member"] = p.covering_member;
    e["covered"] = p.covered;
    pts.push_back(e);
  }
  j["points"] = pts;
  ojson subs = ojson::array();
  for (const auto& s : r.subfamilies) {
    ojson e;
    e["members"] = s.members;
    e["missed_point"] = s.missed_point;
    e["verified"] = s.verified;
    subs.push_back(e);
  }
  j["subfamilies"] = subs;
  j["all_pass"] = r.all_pass();
  return j.dump(2);
}

}  // namespace valtop
