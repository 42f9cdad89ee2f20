#include "loopkit/parastrophe.hpp"

#include <string>

#include "loopkit/error.hpp"
#include "loopkit/identities.hpp"

namespace loopkit {

const char* to_string(ParastropheKind kind) {
  switch (kind) {
    case ParastropheKind::Star: return "star";
    case ParastropheKind::RDiv: return "rdiv";
    case ParastropheKind::LDiv: return "ldiv";
    case ParastropheKind::RDivStar: return "rdiv-star";
    case ParastropheKind::LDivStar: return "ldiv-star";
  }
  return "?";
}

std::optional<ParastropheKind> parse_parastrophe_kind(std::string_view name) {
  for (ParastropheKind kind : kAllParastrophes) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

CayleyTable parastrophe(const CayleyTable& q, ParastropheKind kind) {
  const unsigned n = q.order();
  std::vector<std::vector<unsigned>> rows(n, std::vector<unsigned>(n));
  switch (kind) {
    case ParastropheKind::Star:
      for (unsigned x = 0; x < n; ++x)
        for (unsigned y = 0; y < n; ++y) rows[y][x] = q.at(x, y);
      break;
    case ParastropheKind::RDiv:
      // x o z = y  <=>  x * y = z
      for (unsigned x = 0; x < n; ++x)
        for (unsigned y = 0; y < n; ++y) rows[x][q.at(x, y)] = y;
      break;
    case ParastropheKind::LDiv:
      // z o y = x  <=>  x * y = z
      for (unsigned x = 0; x < n; ++x)
        for (unsigned y = 0; y < n; ++y) rows[q.at(x, y)][y] = x;
      break;
    case ParastropheKind::RDivStar:
      // z o x = y  <=>  x * y = z
      for (unsigned x = 0; x < n; ++x)
        for (unsigned y = 0; y < n; ++y) rows[q.at(x, y)][x] = y;
      break;
    case ParastropheKind::LDivStar:
      // y o z = x  <=>  x * y = z
      for (unsigned x = 0; x < n; ++x)
        for (unsigned y = 0; y < n; ++y) rows[y][q.at(x, y)] = x;
      break;
  }
  return CayleyTable::from_rows(rows);
}

bool tables_equal(const CayleyTable& a, const CayleyTable& b) {
  return a.order() == b.order() && a.cells() == b.cells();
}

namespace {

void require_c_loop(const Loop& loop) {
  const IdentityReport c = is_c(loop);
  if (!c.holds) {
    throw Error("not-c-loop", "loop does not satisfy the C identity: " + c.detail,
                c.witness);
  }
}

}  // namespace

EquivalenceReport equivalence_report(const Loop& loop) {
  require_c_loop(loop);
  const unsigned n = loop.order();

  EquivalenceReport report;
  report.components_identity = true;
  report.components.reserve(n);
  for (unsigned x = 0; x < n; ++x) {
    const unsigned sq = loop.mul(x, x);
    Perm alpha1_s2 = invert(loop.left_translation(sq));
    Perm beta2_t1 = invert(loop.right_translation(sq));
    report.components_identity =
        report.components_identity && alpha1_s2.is_identity() && beta2_t1.is_identity();
    report.components.push_back({x, std::move(alpha1_s2), std::move(beta2_t1)});
  }

  const CayleyTable& t = loop.table();
  report.rdiv_equal = tables_equal(parastrophe(t, ParastropheKind::RDiv), t);
  report.ldiv_equal = tables_equal(parastrophe(t, ParastropheKind::LDiv), t);
  report.first_two_equal = report.rdiv_equal && report.ldiv_equal;

  report.star_equal = tables_equal(parastrophe(t, ParastropheKind::Star), t);
  report.rdiv_star_equal = tables_equal(parastrophe(t, ParastropheKind::RDivStar), t);
  report.ldiv_star_equal = tables_equal(parastrophe(t, ParastropheKind::LDivStar), t);
  report.other_three_equal =
      report.star_equal && report.rdiv_star_equal && report.ldiv_star_equal;

  if (report.components_identity != report.first_two_equal) {
    throw TheoremViolation(
        "identity components and parastrophe equality disagree: components " +
        std::string(report.components_identity ? "identity" : "non-identity") +
        ", first two parastrophes " +
        std::string(report.first_two_equal ? "equal" : "unequal"));
  }
  if (report.first_two_equal && !report.other_three_equal) {
    throw TheoremViolation(
        "first two parastrophes equal the loop but the other three do not");
  }
  return report;
}

bool steiner_criterion(const Loop& loop) {
  require_c_loop(loop);
  for (unsigned x = 0; x < loop.order(); ++x) {
    const unsigned sq = loop.mul(x, x);
    if (!invert(loop.left_translation(sq)).is_identity()) return false;
    if (!invert(loop.right_translation(sq)).is_identity()) return false;
  }
  return true;
}

}  // namespace loopkit
