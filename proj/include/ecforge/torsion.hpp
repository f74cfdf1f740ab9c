#pragma once

#include "ecforge/curve.hpp"

namespace ecforge {

enum class CountMode { Serial, Parallel };

/// Number of points of the reduction of an integral-coefficient curve
/// modulo an odd prime of good reduction, by exhaustive x-enumeration.
long count_points_mod_p(const WeierstrassCurve& e, long p, CountMode mode = CountMode::Serial);

/// gcd of #E(F_p) over the first `prime_budget` odd primes of good
/// reduction (p not dividing 2*disc). The rational torsion order divides
/// the result. Throws NotIntegral unless all a-invariants are integers.
Integer torsion_bound(const WeierstrassCurve& e, int prime_budget,
                      CountMode mode = CountMode::Serial);

/// u-scaling x = u^2 X, y = u^3 Y with integer u clearing all coefficient
/// denominators (torsion order is invariant under it).
WeierstrassCurve integral_model(const WeierstrassCurve& e);

}  // namespace ecforge
