#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "valtop/closeness.hpp"
#include "valtop/topology_compare.hpp"

namespace valtop {

// Canonical JSON with stable key order; identical inputs serialize to
// identical bytes, and every emitted certificate or table re-loads.

std::string to_json(const OpenSet& u);
OpenSet open_set_from_json(std::string_view text, const GroupSpec& g);
std::vector<OpenSet> open_set_list_from_json(std::string_view text, const GroupSpec& g);

std::string to_json(const FnTable& t);
FnTable fn_table_from_json(std::string_view text);

std::string to_json(const Certificate& c);
Certificate certificate_from_json(std::string_view text);

std::string to_json(const CertificateVerdict& v);
std::string to_json(const T1CounterexampleReport& r);
std::string to_json(const P2Result& r);
std::string to_json(const P1FailureWitness& w);
std::string to_json(const RefinementVerdict& v);
std::string to_json(const EqualityVerdict& v);
std::string to_json(const CoverReport& r);

}  // namespace valtop
