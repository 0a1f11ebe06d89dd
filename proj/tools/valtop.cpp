// valtop: exact arithmetic for valuations on rings, separation
// certificates in the product topology, and comparisons of the order,
// circle and one-point-compactification topologies on extended value
// groups.
//
// Exit codes: 0 when the requested check is consistent/verified, 1 when
// the run found the mathematical object it hunts (a violation, strict
// witness, refutation or counterexample), 2 on usage or data errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "valtop/closeness.hpp"
#include "valtop/serialize.hpp"
#include "valtop/spectra.hpp"
#include "valtop/topology_compare.hpp"

namespace {

using valtop::Error;
using ojson = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

void emit(bool json, const ojson& payload, const std::string& human) {
  if (json)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << human;
}

std::vector<valtop::Valuation> load_probes(const std::string& probes_file,
                                           std::size_t probes_count,
                                           const valtop::RingSpec& ring,
                                           const valtop::GroupSpec& group) {
  if (!probes_file.empty()) {
    std::vector<valtop::Valuation> out;
    nlohmann::json j = nlohmann::json::parse(read_file(probes_file));
    for (const auto& item : j)
      out.push_back(valtop::Valuation::parse(item.get<std::string>()));
    return out;
  }
  return valtop::standard_probes(ring, group, probes_count);
}

int run_eval(const std::string& vspec, const std::string& elem_text,
             const std::string& ring_text, bool json) {
  valtop::Valuation nu = valtop::Valuation::parse(vspec);
  valtop::RingSpec ring =
      ring_text.empty() ? nu.natural_ring() : valtop::RingSpec::parse(ring_text);
  valtop::RingElem a = valtop::parse_elem(elem_text, ring);
  valtop::ExtValue v = valtop::evaluate(nu, a);
  ojson j;
  j["valuation"] = nu.str();
  j["ring"] = ring.str();
  j["elem"] = a.str();
  j["value"] = v.str();
  emit(json, j, nu.str() + "(" + a.str() + ") = " + v.str() + "\n");
  return 0;
}

int run_check(const std::string& table_file, const std::string& out_file,
              const std::string& probes_file, std::size_t probes_count, int window,
              bool json) {
  valtop::FnTable table = valtop::fn_table_from_json(read_file(table_file));
  auto violation = valtop::check_axioms(table);
  if (!violation) {
    ojson j;
    j["table"] = table_file;
    j["violation"] = nullptr;
    emit(json, j, "no checkable axiom violation in " + table_file + "\n");
    return 0;
  }
  valtop::Certificate cert = valtop::synthesize_separating_open(table, *violation);
  cert.window = window;
  auto probes = load_probes(probes_file, probes_count, table.ring(), table.group());
  valtop::CertificateVerdict verdict = valtop::verify_certificate(cert, table, probes);
  std::string cert_path = out_file.empty() ? table_file + ".cert.json" : out_file;
  write_file(cert_path, valtop::to_json(cert));

  ojson j;
  j["table"] = table_file;
  j["violation"] = nlohmann::json::parse(valtop::to_json(cert))["violation"];
  j["certificate"] = cert_path;
  j["verdict"] = nlohmann::json::parse(valtop::to_json(verdict));
  std::string human = violation->axiom_name() + " violation at (";
  for (std::size_t k = 0; k < violation->witnesses.size(); ++k)
    human += (k ? "," : "") + violation->witnesses[k].str();
  human += "); certificate written to " + cert_path +
           (verdict.pass() ? " (verified)\n" : " (VERDICT FAILED)\n");
  emit(json, j, human);
  return verdict.pass() ? 1 : 2;
}

int run_separate(const std::string& table_file, const std::string& cert_file,
                 const std::string& out_file, const std::string& probes_file,
                 std::size_t probes_count, int window, bool json) {
  valtop::FnTable table = valtop::fn_table_from_json(read_file(table_file));
  valtop::Certificate cert = [&] {
    if (!cert_file.empty()) return valtop::certificate_from_json(read_file(cert_file));
    auto violation = valtop::check_axioms(table);
    if (!violation) throw Error("table satisfies every checkable axiom; nothing to separate");
    auto c = valtop::synthesize_separating_open(table, *violation);
    c.window = window;
    return c;
  }();
  auto probes = load_probes(probes_file, probes_count, table.ring(), table.group());
  valtop::CertificateVerdict verdict = valtop::verify_certificate(cert, table, probes);
  if (!out_file.empty()) write_file(out_file, valtop::to_json(cert));

  ojson j;
  j["table"] = table_file;
  j["certificate"] = nlohmann::json::parse(valtop::to_json(cert));
  j["verdict"] = nlohmann::json::parse(valtop::to_json(verdict));
  std::string human = std::string("certificate ") +
                      (verdict.pass() ? "verified against " : "FAILED against ") +
                      std::to_string(verdict.probes_checked) + " probes\n";
  for (const auto& n : verdict.notes) human += "  note: " + n + "\n";
  emit(json, j, human);
  if (!verdict.pass()) return 2;
  return 1;
}

int run_witness_t1(const std::string& vspec, const std::string& a0_text,
                   const std::string& ring_text, const std::string& gamma_prime_text,
                   const std::string& topo_text, int window, bool json) {
  valtop::Valuation nu = valtop::Valuation::parse(vspec);
  valtop::RingSpec ring =
      ring_text.empty() ? nu.natural_ring() : valtop::RingSpec::parse(ring_text);
  valtop::RingElem a0 = valtop::parse_elem(a0_text, ring);
  valtop::GroupElem gp = valtop::GroupElem::parse(nu.value_group(), gamma_prime_text);
  valtop::TopologyId topo = valtop::TopologyId::parse(topo_text, nu.value_group());
  valtop::T1CounterexampleReport report =
      valtop::t1_counterexample(nu, a0, gp, topo, window);

  ojson j;
  j["valuation"] = nu.str();
  j["topology"] = topo.str();
  j["report"] = nlohmann::json::parse(valtop::to_json(report));
  j["table"] = nlohmann::json::parse(valtop::to_json(report.table));
  std::string human = "counterexample table: f(" + report.modified_at.str() + ") = " +
                      report.new_value.str() + " (valuation value " +
                      report.old_value.str() + ")\n" + report.violation.axiom_name() +
                      " violation; " + std::to_string(report.basis_opens_checked) +
                      " basic opens checked, all contain the backing value: " +
                      (report.all_contain_backing_value ? "yes" : "NO") + "\n";
  emit(json, j, human);
  return report.all_contain_backing_value ? 1 : 2;
}

valtop::MonoidSpec parse_carrier(const std::string& text) {
  return valtop::MonoidSpec::parse(text);
}

int run_topo_compare(const std::string& group_text, const std::string& fine_text,
                     const std::string& coarse_text, const std::string& samples_file,
                     bool json) {
  valtop::MonoidSpec carrier = parse_carrier(group_text);
  valtop::TopologyId fine = valtop::TopologyId::parse(fine_text, carrier.group);
  valtop::TopologyId coarse = valtop::TopologyId::parse(coarse_text, carrier.group);
  std::vector<valtop::OpenSet> samples = valtop::standard_sample_suite(carrier);
  if (!samples_file.empty()) {
    auto extra = valtop::open_set_list_from_json(read_file(samples_file), carrier.group);
    samples.insert(samples.end(), extra.begin(), extra.end());
  }
  valtop::RefinementVerdict verdict = valtop::refines(fine, coarse, carrier, samples);

  ojson j;
  j["group"] = carrier.str();
  j["fine"] = fine.str();
  j["coarse"] = coarse.str();
  j["verdict"] = nlohmann::json::parse(valtop::to_json(verdict));
  std::string human = fine.str() + " refines " + coarse.str() + " on " +
                      std::to_string(verdict.samples_checked) + " samples: " +
                      (verdict.consistent ? "consistent" : "REFUTED") + "\n";
  if (verdict.refutation)
    human += "  refutation: " + verdict.refutation->str() + "\n";
  if (verdict.strict_witness)
    human += "  strict witness (open in " + fine.str() + " only): " +
             verdict.strict_witness->str() + "\n";
  emit(json, j, human);
  return (!verdict.consistent || verdict.strict_witness) ? 1 : 0;
}

int run_topo_props(const std::string& topo_text, const std::string& group_text,
                   bool json) {
  valtop::MonoidSpec carrier = parse_carrier(group_text);
  const valtop::GroupSpec& g = carrier.group;
  valtop::TopologyId topo = valtop::TopologyId::parse(topo_text, g);

  ojson j;
  j["topology"] = topo.str();
  j["group"] = carrier.str();
  j["discrete"] = valtop::is_discrete(g);
  auto sp = valtop::smallest_positive(g);
  j["smallest_positive"] = sp ? ojson(sp->str()) : ojson(nullptr);
  j["completeness_flag"] = valtop::completeness_flag(g);

  bool found_refutation = false;
  std::string human = topo.str() + " over " + carrier.str() + "\n";
  human += std::string("  discrete: ") + (valtop::is_discrete(g) ? "yes" : "no") + "\n";

  if (g.is_trivial()) {
    j["note"] = "degenerate carrier {0, inf}";
    emit(json, j, human);
    return 0;
  }

  const valtop::GroupElem unit = *valtop::unit_positive(g);
  const valtop::ExtValue zero = valtop::ExtValue::zero(g);
  const valtop::ExtValue one = valtop::ExtValue::finite(unit);
  const valtop::ExtValue inf = valtop::ExtValue::infinity(g);

  // P2 at a finite pair and at (0, inf).
  try {
    auto fin = valtop::check_P2(topo, zero, one, carrier);
    auto at_inf = valtop::check_P2(topo, zero, inf, carrier);
    j["p2_finite_pair"] = nlohmann::json::parse(valtop::to_json(fin));
    j["p2_at_infinity"] = nlohmann::json::parse(valtop::to_json(at_inf));
    found_refutation |= !fin.is_witness() || !at_inf.is_witness();
    human += std::string("  P2 at (0,1): ") +
             (fin.is_witness() ? "witness" : "refuted") + "; at (0,inf): " +
             (at_inf.is_witness() ? "witness" : "refuted") + "\n";
  } catch (const Error& e) {
    j["p2_note"] = e.what();
    human += std::string("  P2: ") + e.what() + "\n";
  }

  // P1: the additive-continuity failure applies to A2/A3 on full carriers.
  if ((topo.kind == valtop::TopologyId::Kind::A2 ||
       topo.kind == valtop::TopologyId::Kind::A3) &&
      !carrier.nonneg) {
    auto w = valtop::check_P1_failure(topo, carrier, {});
    j["p1_failure"] = nlohmann::json::parse(valtop::to_json(w));
    found_refutation |= w.all_pass;
    human += std::string("  P1 failure around ") + w.u.str() + ": " +
             (w.all_pass ? "witnessed on all neighborhood pairs" : "NOT witnessed") +
             "\n";
  } else if (topo.kind == valtop::TopologyId::Kind::A1) {
    // Sample additive continuity through the order witnesses.
    auto [v, vp] = valtop::check_P1_order(
        zero, one, valtop::OpenSet::interval(g, std::nullopt, std::nullopt, true));
    j["p1_sample"] = ojson{{"V", nlohmann::json::parse(valtop::to_json(v))},
                           {"V'", nlohmann::json::parse(valtop::to_json(vp))}};
    human += "  P1: order witnesses produced\n";
  }

  // T1 behaviour: can the topology separate 1 from 0?
  auto sep = valtop::topology_separates(topo, one, zero, carrier);
  j["separates_sample_pair"] = sep.has_value();
  if (topo.kind == valtop::TopologyId::Kind::NotT1) {
    found_refutation = true;
    human += "  not T1 at the pinned pair\n";
  }

  emit(json, j, human);
  return found_refutation ? 1 : 0;
}

int run_spectra(const std::string& vspec, const std::string& query,
                const std::string& a_text, const std::string& b_text,
                const std::string& alpha_text, const std::string& side_text,
                const std::string& ring_text, bool json) {
  valtop::Valuation nu = valtop::Valuation::parse(vspec);
  ojson j;
  j["valuation"] = nu.str();
  j["query"] = query;
  std::string human;

  if (query == "normalize") {
    valtop::Valuation out = valtop::normalize(nu);
    j["normalized"] = out.str();
    human = "normalized: " + out.str() + "\n";
    emit(json, j, human);
    return 0;
  }

  valtop::RingSpec ring = ring_text.empty()
                              ? (query == "valspec" || query == "weak"
                                     ? nu.natural_ring()
                                     : valtop::RingSpec::fractions(nu.natural_ring()))
                              : valtop::RingSpec::parse(ring_text);
  valtop::RingElem a = valtop::parse_elem(a_text, ring);
  j["a"] = a.str();

  if (query == "sign") {
    auto s = valtop::sign_map(nu, a);
    j["sign"] = valtop::sign_name(s);
    human = std::string("sign: ") + valtop::sign_name(s) + "\n";
  } else if (query == "zariski") {
    bool m = valtop::zariski_member(nu, a);
    j["member"] = m;
    j["value"] = (a.ring().is_fractions() ? valtop::evaluate_fraction(nu, a)
                                          : valtop::evaluate(nu, a))
                     .str();
    human = std::string("zariski member: ") + (m ? "true" : "false") + "\n";
  } else if (query == "patch") {
    if (b_text.empty()) throw Error("patch needs --b");
    valtop::RingElem b = valtop::parse_elem(b_text, ring);
    bool m = valtop::patch_member(nu, a, b);
    j["b"] = b.str();
    j["member"] = m;
    human = std::string("patch member: ") + (m ? "true" : "false") + "\n";
  } else if (query == "valspec") {
    if (b_text.empty()) throw Error("valspec needs --b");
    valtop::RingElem b = valtop::parse_elem(b_text, ring);
    bool m = valtop::valspec_member(nu, a, b);
    j["b"] = b.str();
    j["member"] = m;
    j["value_a"] = valtop::evaluate(nu, a).str();
    j["value_b"] = valtop::evaluate(nu, b).str();
    human = std::string("valuation-spectrum member: ") + (m ? "true" : "false") + "\n";
  } else if (query == "weak") {
    if (alpha_text.empty() || side_text.empty()) throw Error("weak needs --alpha and --side");
    valtop::ExtValue alpha = valtop::ExtValue::parse(nu.value_group(), alpha_text);
    valtop::WeakSide side =
        side_text == "above" ? valtop::WeakSide::Above : valtop::WeakSide::Below;
    bool m = valtop::weak_member(nu, a, alpha, side);
    j["alpha"] = alpha.str();
    j["side"] = side_text;
    j["member"] = m;
    human = std::string("weak member: ") + (m ? "true" : "false") + "\n";
  } else {
    throw Error("unknown query " + query);
  }
  emit(json, j, human);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact valuation spaces: axioms, separation certificates, topologies"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit canonical JSON");

  std::string vspec, elem_text, ring_text, table_file, out_file, probes_file;
  std::string a0_text, gamma_prime_text, topo_text, group_text, fine_text, coarse_text;
  std::string samples_file, cert_file, query, a_text, b_text, alpha_text, side_text;
  std::size_t probes_count = 52;
  int window = 16;

  auto* eval = app.add_subcommand("eval", "evaluate a valuation at an element");
  eval->add_option("--valuation", vspec)->required();
  eval->add_option("--elem", elem_text)->required();
  eval->add_option("--ring", ring_text);

  auto* check = app.add_subcommand("check", "check a function table against the axioms");
  check->add_option("--table", table_file)->required();
  check->add_option("--out", out_file);
  check->add_option("--probes-file", probes_file);
  check->add_option("--probes", probes_count);
  check->add_option("--window", window);

  auto* separate = app.add_subcommand(
      "separate", "synthesize or re-verify a separating certificate");
  separate->add_option("--table", table_file)->required();
  separate->add_option("--cert", cert_file);
  separate->add_option("--out", out_file);
  separate->add_option("--probes-file", probes_file);
  separate->add_option("--probes", probes_count);
  separate->add_option("--window", window);

  auto* witness = app.add_subcommand(
      "witness-t1", "build the non-T1 counterexample table for a pinned topology");
  witness->add_option("--valuation", vspec)->required();
  witness->add_option("--a0", a0_text)->required();
  witness->add_option("--ring", ring_text);
  witness->add_option("--gamma-prime", gamma_prime_text)->required();
  witness->add_option("--topology", topo_text)->required();
  witness->add_option("--window", window);

  auto* topo = app.add_subcommand("topo", "topology comparisons and properties");
  topo->require_subcommand(1);
  auto* compare = topo->add_subcommand("compare", "refinement over a sample suite");
  compare->add_option("--group", group_text)->required();
  compare->add_option("--fine", fine_text)->required();
  compare->add_option("--coarse", coarse_text)->required();
  compare->add_option("--samples", samples_file);
  auto* props = topo->add_subcommand("props", "discreteness, P1, P2, separation");
  props->add_option("--topology", topo_text)->required();
  props->add_option("--group", group_text)->required();

  auto* spectra = app.add_subcommand("spectra", "spectral membership queries");
  spectra->add_option("--valuation", vspec)->required();
  spectra->add_option("--query", query)->required();
  spectra->add_option("--a", a_text);
  spectra->add_option("--b", b_text);
  spectra->add_option("--alpha", alpha_text);
  spectra->add_option("--side", side_text);
  spectra->add_option("--ring", ring_text);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) return run_eval(vspec, elem_text, ring_text, json);
    if (*check)
      return run_check(table_file, out_file, probes_file, probes_count, window, json);
    if (*separate)
      return run_separate(table_file, cert_file, out_file, probes_file, probes_count,
                          window, json);
    if (*witness)
      return run_witness_t1(vspec, a0_text, ring_text, gamma_prime_text, topo_text,
                            window, json);
    if (*compare)
      return run_topo_compare(group_text, fine_text, coarse_text, samples_file, json);
    if (*props) return run_topo_props(topo_text, group_text, json);
    if (*spectra)
      return run_spectra(vspec, query, a_text, b_text, alpha_text, side_text,
                         ring_text, json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
