#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valtop/open_sets.hpp"
#include "valtop/rings.hpp"

namespace valtop {

/// Version tag of the built-in sample suite; verdicts cite it so they
/// stay reproducible.
inline constexpr const char* kSampleSuiteVersion = "suite-v1";

/// The order topology is discrete exactly when a smallest positive
/// element exists; the trivial group is discrete outright.
bool is_discrete(const GroupSpec& g);

/// Declared completeness flag per group shape (integers and the
/// trivial group complete, rationals not, lex products when both
/// factors are discrete and complete). Documentation only: refinement
/// verdicts run on the exact compactness predicate instead.
bool completeness_flag(const GroupSpec& g);

struct RefinementVerdict {
  bool consistent = true;
  std::optional<OpenSet> refutation;      // open in coarse but not in fine
  std::optional<OpenSet> strict_witness;  // open in fine but not in coarse
  std::size_t samples_checked = 0;
};

/// Checks, over the sample list, that every coarse-open set is
/// fine-open, and separately hunts for a strictness witness.
RefinementVerdict refines(const TopologyId& fine, const TopologyId& coarse,
                          const MonoidSpec& carrier,
                          const std::vector<OpenSet>& samples);

struct EqualityVerdict {
  bool equal = true;
  std::optional<OpenSet> witness;
  std::string witness_side;  // which topology owns the witness
  std::size_t samples_checked = 0;
};

/// Bidirectional refinement of the order and circle topologies over
/// the non-negative carrier of g.
EqualityVerdict gamma_prime_equality(const GroupSpec& g,
                                     const std::vector<OpenSet>& samples);

/// ~40 deterministic representable sets per carrier: bounded intervals,
/// rays with and without infinity, two-ray sets, punctured carriers,
/// singletons where they exist, and the empty and full sets.
std::vector<OpenSet> standard_sample_suite(const MonoidSpec& carrier);

struct CoverReport {
  std::string family;
  struct PointCheck {
    std::string point;
    std::string covering_member;
    bool covered = false;
  };
  struct SubfamilyCheck {
    std::string members;
    std::string missed_point;
    bool verified = false;
  };
  std::vector<PointCheck> points;
  std::vector<SubfamilyCheck> subfamilies;
  bool all_pass() const;
};

/// The ray family over a group with no smallest element: every point
/// lands in some member, every finite subfamily misses the point one
/// step below its least index.
CoverReport cover_no_smallest(const GroupSpec& g, const std::vector<ExtValue>& points,
                              const std::vector<std::vector<GroupElem>>& subfamilies);

/// A bounded non-empty set of rationals without a supremum, given by a
/// strict polynomial inequality on the positive axis. The shipped
/// instance is { q > 0 : q^2 < 2 }.
class CutSet {
 public:
  static CutSet sqrt2();
  /// S = { q > 0 : p(q) < 0 }; membership is exact, the upper-bound
  /// test (q > 0 and p(q) > 0) is validated against samples.
  static CutSet from_poly(RingElem poly1);

  bool member(const Rat& q) const;
  bool upper_bound(const Rat& q) const;
  const Rat& canonical_member() const { return member_; }
  const Rat& canonical_upper() const { return upper_; }
  std::string str() const;

 private:
  CutSet(RingElem poly, Rat member, Rat upper);
  RingElem poly_;
  Rat member_, upper_;
};

/// The two-sided circle-neighborhood family indexed by the cut: every
/// rational and infinity lies in a member, every finite subfamily
/// misses the midpoint of its bound envelope.
CoverReport cover_incomplete(const CutSet& s, const std::vector<std::optional<Rat>>& points,
                             const std::vector<std::vector<std::pair<Rat, Rat>>>&
                                 subfamilies);

}  // namespace valtop
