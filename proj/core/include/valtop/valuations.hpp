#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "valtop/ordered_groups.hpp"
#include "valtop/rings.hpp"

namespace valtop {

/// A parameterized concrete valuation. Families: p-adic on Z and Q,
/// x-adic and Gauss on Q[x], monomial on Q[x,y], and the trivial
/// valuation on any supported domain. A positive rational multiplier
/// produces scaled copies of the rational-valued families.
class Valuation {
 public:
  enum class Family { PAdic, XAdic, Gauss, Monomial, Trivial };

  static Valuation padic(const Int& p);
  static Valuation xadic();
  /// gamma must be positive.
  static Valuation gauss(const Int& p, const Rat& gamma);
  /// Two weights over a shared group with non-negative entries.
  static Valuation monomial(std::vector<GroupElem> weights);
  static Valuation trivial(GroupSpec value_group = GroupSpec::trivial());
  /// Positive rational multiple; needs a rational-leaf value group.
  Valuation scaled_by(const Rat& c) const;

  Family family() const { return family_; }
  const GroupSpec& value_group() const { return group_; }
  const Rat& scale() const { return scale_; }
  const Int& prime() const { return p_; }
  const Rat& gauss_gamma() const { return gamma_; }
  const std::vector<GroupElem>& weights() const { return weights_; }

  /// The family's home ring (padic: Z; xadic/gauss: Q[x]; monomial:
  /// Q[x,y]; trivial: Z unless told otherwise).
  RingSpec natural_ring() const;
  bool defined_on(const RingSpec& ring) const;

  std::string str() const;
  /// Grammar: [<rat>*] padic(<prime>) | xadic |
  /// gauss(p=<prime>,gamma=<rational>) | monomial(w=[<g>,<g>]
  /// [,group=<spec>]) | trivial[(<group>)]
  static Valuation parse(std::string_view text);
  bool operator==(const Valuation& o) const;

 private:
  Family family_ = Family::Trivial;
  Int p_ = 0;
  Rat gamma_ = 0;
  std::vector<GroupElem> weights_;
  GroupSpec group_ = GroupSpec::trivial();
  Rat scale_ = 1;
};

/// nu(a) with exact arithmetic; fraction-ring elements route through
/// evaluate_fraction.
ExtValue evaluate(const Valuation& nu, const RingElem& a);

/// nu(num) - nu(den); the denominator must lie outside the support.
ExtValue evaluate_fraction(const Valuation& nu, const RingElem& frac);

/// Centered on the local surrogate Q[x,y] at (x,y): non-negative
/// everywhere and strictly positive on both generators.
bool is_centered(const Valuation& nu, const RingSpec& ring);

/// min(nu(x), nu(y)) over the generators of the maximal ideal.
ExtValue maximal_ideal_value(const Valuation& nu, const RingSpec& ring);

/// Argwise comparison agreement on every listed pair, both
/// orientations.
bool equivalent_on(const Valuation& nu, const Valuation& mu,
                   std::span<const std::pair<RingElem, RingElem>> testset);

/// The positive constant C with nu = C * mu across all probes, when
/// one exists; absent on any inconsistency or when either valuation is
/// not rational-valued.
std::optional<Rat> scaling_constant(const Valuation& nu, const Valuation& mu,
                                    std::span<const RingElem> probes);

}  // namespace valtop
