#include "loopkit/sts.hpp"

#include <algorithm>

#include "loopkit/error.hpp"
#include "loopkit/identities.hpp"

namespace loopkit {

namespace {

std::size_t find_or_append(std::vector<Autotopism>& ground, const Autotopism& a) {
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (ground[i] == a) return i;
  }
  ground.push_back(a);
  return ground.size() - 1;
}

}  // namespace

CsFamily build_cs_family(const Loop& loop, const std::vector<Autotopism>& bases) {
  const IdentityReport c = is_c(loop);
  if (!c.holds) {
    throw Error("not-c-loop", "loop does not satisfy the C identity: " + c.detail,
                c.witness);
  }
  const IdentityReport steiner = is_steiner(loop);
  if (steiner.holds) {
    throw Error("steiner-input",
                "loop is a Steiner loop; the construction requires a non-Steiner C-loop");
  }

  std::vector<Autotopism> base_list = bases;
  if (base_list.empty()) {
    base_list.push_back(identity_autotopism(loop));
  }
  for (const Autotopism& base : base_list) {
    // Re-verify against this loop; bases may have been built elsewhere.
    verify(loop, base.u(), base.v(), base.w());
  }

  CsFamily family;
  const unsigned e = loop.identity();
  for (std::size_t bi = 0; bi < base_list.size(); ++bi) {
    for (unsigned x = 0; x < loop.order(); ++x) {
      if (loop.mul(x, x) == e) continue;
      const CsPair pair = cs_pair(loop, x, base_list[bi]);
      const Autotopism product = compose_atp(pair.first, pair.second);

      auto& ground = family.system.ground;
      const std::size_t i0 = find_or_append(ground, pair.first);
      const std::size_t i1 = find_or_append(ground, pair.second);
      const std::size_t i2 = find_or_append(ground, product);
      if (i0 == i1 || i0 == i2 || i1 == i2) {
        family.dropped.push_back("degenerate triple at base " + std::to_string(bi) +
                                 ", x = " + std::to_string(x) +
                                 ": members collide after deduplication");
        continue;
      }
      family.provenance.push_back(CsProvenance{bi, x, {i0, i1, i2}});
      std::array<std::size_t, 3> triple{i0, i1, i2};
      std::sort(triple.begin(), triple.end());
      auto& triples = family.system.triples;
      if (std::find(triples.begin(), triples.end(), triple) == triples.end()) {
        triples.push_back(triple);
      }
    }
  }
  if (family.system.triples.empty()) {
    throw Error("empty-family", "no triples survive the degenerate-triple drop");
  }
  return family;
}

StsReport verify_sts(const TripleSystem& system) {
  StsReport report;
  const std::size_t ground_size = system.ground.size();
  for (std::size_t t = 0; t < system.triples.size(); ++t) {
    const auto& tri = system.triples[t];
    for (std::size_t member : tri) {
      if (member >= ground_size) {
        throw Error("index-range", "triple " + std::to_string(t) +
                                       " references ground index " +
                                       std::to_string(member) + " out of range");
      }
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
      report.distinct_ok = false;
      report.bad_triple = t;
      break;
    }
  }
  for (std::size_t a = 0; a < ground_size && report.cover_ok; ++a) {
    for (std::size_t b = a + 1; b < ground_size; ++b) {
      std::size_t count = 0;
      for (const auto& tri : system.triples) {
        const bool has_a = tri[0] == a || tri[1] == a || tri[2] == a;
        const bool has_b = tri[0] == b || tri[1] == b || tri[2] == b;
        if (has_a && has_b) ++count;
      }
      if (count != 1) {
        report.cover_ok = false;
        report.bad_pair = {a, b};
        report.bad_pair_cover_count = count;
        break;
      }
    }
  }
  return report;
}

CardinalityReport cardinality_check(const TripleSystem& system) {
  CardinalityReport report;
  report.triple_count = system.triples.size();
  report.residue_mod6 = static_cast<unsigned>(report.triple_count % 6);
  report.admissible = report.residue_mod6 == 1 || report.residue_mod6 == 3;
  return report;
}

}  // namespace loopkit
