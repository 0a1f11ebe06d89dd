#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valtop/fn_table.hpp"
#include "valtop/open_sets.hpp"

namespace valtop {

/// A basic open of the product topology: finitely many coordinates,
/// each constrained to a representable open set of the carrier.
struct CylinderOpen {
  std::vector<std::pair<RingElem, OpenSet>> constraints;

  const OpenSet* constraint_for(const RingElem& a) const;
  /// The table's value at every constrained coordinate lies in its open.
  bool contains(const FnTable& f) const;
  /// Valuation membership, coercing values into the table group;
  /// values outside the group place the valuation outside the ambient
  /// space and hence outside the cylinder.
  bool contains_valuation(const Valuation& nu, const GroupSpec& table_group) const;
};

/// A machine-checkable witness that every table in the cylinder
/// violates the same axiom the defective table does.
struct Certificate {
  RingSpec ring;
  MonoidSpec monoid;
  ViolationReport violation;
  CylinderOpen cylinder;
  std::vector<std::pair<std::string, OpenSet>> side_data;  // role -> open
  int window = 16;

  const OpenSet* side(const std::string& role) const;
};

/// Builds the separating cylinder for a re-checked violation. V1 pins
/// the three coordinates with a hull-contained pair and a disjoint
/// product witness; V2 applies the order separation twice; V3 excludes
/// the single legal value.
Certificate synthesize_separating_open(const FnTable& f, const ViolationReport& v);

struct CertificateVerdict {
  bool f_in_cylinder = false;
  bool conditions_hold = false;
  bool probes_excluded = false;
  std::size_t probes_checked = 0;
  std::vector<std::string> notes;
  bool pass() const { return f_in_cylinder && conditions_hold && probes_excluded; }
};

/// Re-checks a certificate from its own data: membership of f,
/// the case conditions (disjointness, hull containment, pointwise
/// order, excluded value), and that no probe valuation enters the
/// cylinder. Failures land in the verdict, never in exceptions.
CertificateVerdict verify_certificate(const Certificate& c, const FnTable& f,
                                      const std::vector<Valuation>& probes);

/// Report for the non-T1 counterexample: the modified table, its
/// violation, and the window-exhaustive check that every basic open of
/// the topology containing the new value also contains the backing
/// valuation's value (coordinates away from the modification agree
/// with the valuation outright, so basic cylinders containing the
/// table contain the valuation).
struct T1CounterexampleReport {
  FnTable table;
  ViolationReport violation;
  RingElem modified_at;
  ExtValue old_value;
  ExtValue new_value;
  std::size_t basis_opens_checked = 0;
  bool all_contain_backing_value = false;
  std::size_t sampled_unions_verified = 0;
  std::size_t coordinates_checked = 0;
  std::string note;
};

T1CounterexampleReport t1_counterexample(const Valuation& nu, const RingElem& a0,
                                         const GroupElem& gamma_prime,
                                         const TopologyId& topology, int window = 16);

/// Constructive separation test: an open of the topology containing
/// `target` but not `avoid`, when one exists.
std::optional<OpenSet> topology_separates(const TopologyId& t, const ExtValue& target,
                                          const ExtValue& avoid,
                                          const MonoidSpec& carrier);

struct P2Witness {
  OpenSet u, u_prime;
};
struct P2RefutationInstance {
  OpenSet neighborhood;
  ExtValue counter_element;  // lies in the neighborhood, below gamma
};
struct P2Result {
  std::optional<P2Witness> witness;
  std::vector<P2RefutationInstance> refutation;
  bool is_witness() const { return witness.has_value(); }
};

/// Order-separation per topology: witnesses where the topology allows
/// them (the order topology everywhere; the circle and compactification
/// topologies at finite pairs; the pinned topology away from its pin),
/// refutations elsewhere, one instance per supplied or generated basic
/// neighborhood.
P2Result check_P2(const TopologyId& t, const ExtValue& gamma,
                  const ExtValue& gamma_prime, const MonoidSpec& carrier,
                  const std::vector<OpenSet>& neighborhood_samples = {});

struct P1FailureInstance {
  OpenSet v, v_prime;
  GroupElem gamma;
  bool verified = false;  // gamma in V, -gamma in V', 0 in hull, hull not inside U
};
struct P1FailureWitness {
  OpenSet u;  // the punctured carrier, open in the tested topology
  std::vector<P1FailureInstance> instances;
  bool all_pass = false;
};

/// Additive-continuity failure for the circle and compactification
/// topologies: around the open complement of {0}, every pair of basic
/// infinity neighborhoods sums across zero.
P1FailureWitness check_P1_failure(const TopologyId& t, const MonoidSpec& carrier,
                                  const std::vector<std::pair<OpenSet, OpenSet>>&
                                      neighborhood_pairs);

/// Continuity-of-addition witness: opens V around gamma and V' around
/// gamma' with hull(V, V') inside U. Discrete groups use singletons,
/// dense groups split the slack, infinity follows the ray construction.
std::pair<OpenSet, OpenSet> check_P1_order(const ExtValue& gamma,
                                           const ExtValue& gamma_prime,
                                           const OpenSet& u);

/// Default probe set for a ring/group pair; at least `count` distinct
/// valuations defined on the ring, spanning the applicable families.
std::vector<Valuation> standard_probes(const RingSpec& ring, const GroupSpec& group,
                                       std::size_t count);

}  // namespace valtop
