#pragma once

#include "valtop/valuations.hpp"

namespace valtop {

/// Image of the three-point sign space {0, -, +}. Values in the
/// support (infinite) count as Plus.
enum class SignValue { Zero, Minus, Plus };

const char* sign_name(SignValue s);

/// Sign of nu(a) for a fraction of the base ring.
SignValue sign_map(const Valuation& nu, const RingElem& a);

/// Zariski subbasic membership: nu(a) >= 0.
bool zariski_member(const Valuation& nu, const RingElem& a);

/// Patch subbasic membership: nu(a) >= 0 and nu(b) > 0.
bool patch_member(const Valuation& nu, const RingElem& a, const RingElem& b);

/// Valuation-spectrum subbasic membership over plain ring elements:
/// nu(a) >= nu(b) and nu(b) finite.
bool valspec_member(const Valuation& nu, const RingElem& a, const RingElem& b);

/// Rescales a centered rational-valued valuation on the local
/// surrogate so the maximal ideal takes value 1.
Valuation normalize(const Valuation& nu);

enum class WeakSide { Above, Below };

/// Weak-topology subbasic membership for normalized valuations:
/// nu(a) > alpha or nu(a) < alpha.
bool weak_member(const Valuation& nu, const RingElem& a, const ExtValue& alpha,
                 WeakSide side);

}  // namespace valtop
