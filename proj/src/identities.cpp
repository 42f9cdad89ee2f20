#include "loopkit/identities.hpp"

#include <string>

namespace loopkit {

namespace {

std::string elem(unsigned x) { return std::to_string(x); }

// Exhaustive scan over triples, lexicographic, first failure wins.
template <typename Eval>
IdentityReport check_triples(const Loop& loop, const char* name, Eval&& eval) {
  const unsigned n = loop.order();
  IdentityReport report{name, true, {}, {}};
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = 0; y < n; ++y) {
      for (unsigned z = 0; z < n; ++z) {
        const auto [lhs, rhs] = eval(x, y, z);
        if (lhs != rhs) {
          report.holds = false;
          report.witness = {x, y, z};
          report.detail = "at (" + elem(x) + ", " + elem(y) + ", " + elem(z) +
                          "): " + elem(lhs) + " != " + elem(rhs);
          return report;
        }
      }
    }
  }
  return report;
}

template <typename Eval>
IdentityReport check_pairs(const Loop& loop, const char* name, Eval&& eval) {
  const unsigned n = loop.order();
  IdentityReport report{name, true, {}, {}};
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = 0; y < n; ++y) {
      const auto [lhs, rhs] = eval(x, y);
      if (lhs != rhs) {
        report.holds = false;
        report.witness = {x, y};
        report.detail = "at (" + elem(x) + ", " + elem(y) + "): " + elem(lhs) +
                        " != " + elem(rhs);
        return report;
      }
    }
  }
  return report;
}

}  // namespace

IdentityReport is_lc(const Loop& loop) {
  return check_triples(loop, "lc", [&](unsigned x, unsigned y, unsigned z) {
    const unsigned lhs = loop.mul(loop.mul(x, x), loop.mul(y, z));
    const unsigned rhs = loop.mul(loop.mul(x, loop.mul(x, y)), z);
    return std::pair(lhs, rhs);
  });
}

IdentityReport is_rc(const Loop& loop) {
  return check_triples(loop, "rc", [&](unsigned x, unsigned y, unsigned z) {
    const unsigned lhs = loop.mul(loop.mul(z, y), loop.mul(x, x));
    const unsigned rhs = loop.mul(z, loop.mul(loop.mul(y, x), x));
    return std::pair(lhs, rhs);
  });
}

IdentityReport is_c(const Loop& loop) {
  return check_triples(loop, "c", [&](unsigned x, unsigned y, unsigned z) {
    const unsigned lhs = loop.mul(x, loop.mul(y, loop.mul(y, z)));
    const unsigned rhs = loop.mul(loop.mul(loop.mul(x, y), y), z);
    return std::pair(lhs, rhs);
  });
}

IdentityReport is_left_alternative(const Loop& loop) {
  return check_pairs(loop, "left-alternative", [&](unsigned x, unsigned y) {
    return std::pair(loop.mul(x, loop.mul(x, y)), loop.mul(loop.mul(x, x), y));
  });
}

IdentityReport is_right_alternative(const Loop& loop) {
  return check_pairs(loop, "right-alternative", [&](unsigned x, unsigned y) {
    return std::pair(loop.mul(loop.mul(y, x), x), loop.mul(y, loop.mul(x, x)));
  });
}

IdentityReport is_power_associative(const Loop& loop) {
  IdentityReport report{"power-associative", true, {}, {}};
  for (unsigned x = 0; x < loop.order(); ++x) {
    const PowerChain pc = loop.power_chain(x);
    if (pc.ambiguous) {
      report.holds = false;
      report.witness = {x};
      report.detail = "bracketings of " + elem(x) + "^" +
                      std::to_string(pc.ambiguous_exponent) + " disagree: " +
                      elem(pc.value_a) + " vs " + elem(pc.value_b);
      return report;
    }
  }
  return report;
}

IdentityReport is_nuclear_square(const Loop& loop) {
  const unsigned n = loop.order();
  IdentityReport report{"nuclear-square", true, {}, {}};
  for (unsigned x = 0; x < n; ++x) {
    const unsigned s = loop.mul(x, x);
    for (unsigned y = 0; y < n; ++y) {
      for (unsigned z = 0; z < n; ++z) {
        if (loop.mul(loop.mul(s, y), z) != loop.mul(s, loop.mul(y, z))) {
          report.holds = false;
          report.witness = {x, y, z};
          report.detail = "(" + elem(x) + "^2, " + elem(y) + ", " + elem(z) +
                          ") does not associate";
          return report;
        }
        if (loop.mul(loop.mul(y, s), z) != loop.mul(y, loop.mul(s, z))) {
          report.holds = false;
          report.witness = {x, y, z};
          report.detail = "(" + elem(y) + ", " + elem(x) + "^2, " + elem(z) +
                          ") does not associate";
          return report;
        }
        if (loop.mul(loop.mul(y, z), s) != loop.mul(y, loop.mul(z, s))) {
          report.holds = false;
          report.witness = {x, y, z};
          report.detail = "(" + elem(y) + ", " + elem(z) + ", " + elem(x) +
                          "^2) does not associate";
          return report;
        }
      }
    }
  }
  return report;
}

IdentityReport is_steiner(const Loop& loop) {
  const unsigned n = loop.order();
  const unsigned e = loop.identity();
  IdentityReport report{"steiner", true, {}, {}};
  for (unsigned x = 0; x < n; ++x) {
    const unsigned sq = loop.mul(x, x);
    if (sq != e) {
      report.holds = false;
      report.witness = {x};
      report.detail = "clause x^2=e: " + elem(x) + "^2 = " + elem(sq) +
                      " != " + elem(e);
      return report;
    }
  }
  for (unsigned y = 0; y < n; ++y) {
    for (unsigned x = 0; x < n; ++x) {
      const unsigned v = loop.mul(loop.mul(y, x), x);
      if (v != y) {
        report.holds = false;
        report.witness = {y, x};
        report.detail = "clause yx.x=y: (" + elem(y) + "*" + elem(x) + ")*" +
                        elem(x) + " = " + elem(v);
        return report;
      }
    }
  }
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = 0; y < n; ++y) {
      if (loop.mul(x, y) != loop.mul(y, x)) {
        report.holds = false;
        report.witness = {x, y};
        report.detail = "clause xy=yx: " + elem(x) + "*" + elem(y) + " = " +
                        elem(loop.mul(x, y)) + " but " + elem(y) + "*" + elem(x) +
                        " = " + elem(loop.mul(y, x));
        return report;
      }
    }
  }
  return report;
}

IdentityReport is_associative(const Loop& loop) {
  return check_triples(loop, "associative", [&](unsigned x, unsigned y, unsigned z) {
    return std::pair(loop.mul(loop.mul(x, y), z), loop.mul(x, loop.mul(y, z)));
  });
}

}  // namespace loopkit
