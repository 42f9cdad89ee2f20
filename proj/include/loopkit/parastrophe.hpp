#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "loopkit/magma.hpp"
#include "loopkit/perm.hpp"

namespace loopkit {

/// The five conjugate operations of a quasigroup (L, *), by defining clause:
///   Star     : y o x = z    <=>  x * y = z   (transpose)
///   RDiv     : x o z = y    <=>  x * y = z
///   LDiv     : z o y = x    <=>  x * y = z
///   RDivStar : z o x = y    <=>  x * y = z   (transpose of RDiv)
///   LDivStar : y o z = x    <=>  x * y = z   (transpose of LDiv)
enum class ParastropheKind { Star, RDiv, LDiv, RDivStar, LDivStar };

inline constexpr ParastropheKind kAllParastrophes[] = {
    ParastropheKind::Star, ParastropheKind::RDiv, ParastropheKind::LDiv,
    ParastropheKind::RDivStar, ParastropheKind::LDivStar};

const char* to_string(ParastropheKind kind);
std::optional<ParastropheKind> parse_parastrophe_kind(std::string_view name);

/// The conjugate table; always a Latin square.
CayleyTable parastrophe(const CayleyTable& q, ParastropheKind kind);

/// Same order and identical entries.
bool tables_equal(const CayleyTable& a, const CayleyTable& b);

/// Per-element components of the constructed autotopism pair, the parastrophe
/// comparisons, and the clause verdicts tying them together.
struct EquivalenceReport {
  struct ComponentRow {
    unsigned x;
    Perm alpha1_s2;  // first component of the forward autotopism at x
    Perm beta2_t1;   // second component of the inverse autotopism at x
  };

  std::vector<ComponentRow> components;

  bool components_identity = false;  // (i): every row is (I, I)

  bool rdiv_equal = false;
  bool ldiv_equal = false;
  bool first_two_equal = false;      // (ii): RDiv and LDiv tables equal L

  bool star_equal = false;
  bool rdiv_star_equal = false;
  bool ldiv_star_equal = false;
  bool other_three_equal = false;    // (iii): the remaining three equal L
};

/// Requires a C-loop. Computes clauses (i)-(iii) and asserts (i) <=> (ii) and
/// (ii) => (iii); a falsification throws TheoremViolation rather than being
/// folded into the report.
EquivalenceReport equivalence_report(const Loop& loop);

/// Requires a C-loop. True iff for every x both components of the constructed
/// pair are the identity map; coincides with the loop being Steiner.
bool steiner_criterion(const Loop& loop);

}  // namespace loopkit
