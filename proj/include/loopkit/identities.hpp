#pragma once

#include <string>
#include <vector>

#include "loopkit/magma.hpp"

namespace loopkit {

/// Outcome of one identity check. When holds is false, witness carries the
/// elements of the lexicographically first violation and detail describes it.
struct IdentityReport {
  std::string identity;
  bool holds = true;
  std::vector<unsigned> witness;
  std::string detail;
};

// Exhaustive decision procedures. Witnesses are always the lexicographically
// first failing tuple, so reports are deterministic.

/// (xx)(yz) = (x(xy))z
IdentityReport is_lc(const Loop& loop);
/// (zy)(xx) = z((yx)x)
IdentityReport is_rc(const Loop& loop);
/// x(y(yz)) = ((xy)y)z
IdentityReport is_c(const Loop& loop);
/// x(xy) = (xx)y
IdentityReport is_left_alternative(const Loop& loop);
/// (yx)x = y(xx)
IdentityReport is_right_alternative(const Loop& loop);
/// All bracketings of x^k agree for k up to the order of x.
IdentityReport is_power_associative(const Loop& loop);
/// Every square associates freely: (x2,y,z), (y,x2,z), (y,z,x2) all associate.
IdentityReport is_nuclear_square(const Loop& loop);
/// x^2 = e, (yx)x = y, and xy = yx; the report names the failing clause.
IdentityReport is_steiner(const Loop& loop);
/// (xy)z = x(yz)
IdentityReport is_associative(const Loop& loop);

}  // namespace loopkit
