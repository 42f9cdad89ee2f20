#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopkit/autotopism.hpp"

namespace loopkit {

/// A family of unordered 3-subsets over a ground set of autotopisms.
/// Triples index into `ground` and are stored sorted. Plain data: checkers
/// report on it, builders guarantee their own invariants.
struct TripleSystem {
  std::vector<Autotopism> ground;
  std::vector<std::array<std::size_t, 3>> triples;
};

/// Which (base, x) produced which ground members (first, second, product).
struct CsProvenance {
  std::size_t base_index;
  unsigned x;
  std::array<std::size_t, 3> members;
};

struct CsFamily {
  TripleSystem system;
  std::vector<CsProvenance> provenance;
  std::vector<std::string> dropped;  // reasons for dropped degenerate triples
};

/// Builds the CS-autotopism triple family of a non-Steiner C-loop: for each
/// base (in order) and each x in element order with x^2 != e, the triple
/// { first, second, first*second } of the CS pair at x. Identical autotopisms
/// are merged in the ground set and identical triples are recorded once;
/// provenance keeps every (base, x) origin. Empty `bases` means the single
/// identity triple. Rejects Steiner input.
CsFamily build_cs_family(const Loop& loop, const std::vector<Autotopism>& bases = {});

/// Steiner-triple-system axiom check:
///   (i)  every triple has three distinct members,
///   (ii) every pair of distinct ground elements lies in exactly one triple.
/// Failures are report content with the first offender, never exceptions.
struct StsReport {
  bool distinct_ok = true;
  std::optional<std::size_t> bad_triple;  // first triple violating (i)

  bool cover_ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> bad_pair;
  std::size_t bad_pair_cover_count = 0;

  bool pass() const { return distinct_ok && cover_ok; }
};

StsReport verify_sts(const TripleSystem& system);

/// Triple-count residue rule: |triples| must be 1 or 3 mod 6.
struct CardinalityReport {
  std::size_t triple_count = 0;
  unsigned residue_mod6 = 0;
  bool admissible = false;
};

CardinalityReport cardinality_check(const TripleSystem& system);

}  // namespace loopkit
