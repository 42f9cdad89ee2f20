#include "loopkit/autotopism.hpp"

#include <algorithm>
#include <numeric>

#include "loopkit/error.hpp"
#include "loopkit/identities.hpp"

namespace loopkit {

Autotopism::Autotopism(Loop loop, Perm u, Perm v, Perm w)
    : loop_(std::move(loop)), u_(std::move(u)), v_(std::move(v)), w_(std::move(w)) {}

bool operator<(const Autotopism& a, const Autotopism& b) {
  if (a.u_ != b.u_) return a.u_ < b.u_;
  if (a.v_ != b.v_) return a.v_ < b.v_;
  return a.w_ < b.w_;
}

Autotopism verify(const Loop& loop, Perm u, Perm v, Perm w) {
  const unsigned n = loop.order();
  if (u.degree() != n || v.degree() != n || w.degree() != n) {
    throw Error("degree-mismatch",
                "component degrees (" + std::to_string(u.degree()) + ", " +
                    std::to_string(v.degree()) + ", " + std::to_string(w.degree()) +
                    ") do not match loop order " + std::to_string(n));
  }
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = 0; y < n; ++y) {
      const unsigned lhs = loop.mul(u[x], v[y]);
      const unsigned rhs = w[loop.mul(x, y)];
      if (lhs != rhs) {
        throw Error("not-autotopism",
                    "xU * yV != (x*y)W at (x, y) = (" + std::to_string(x) + ", " +
                        std::to_string(y) + "): " + std::to_string(lhs) + " != " +
                        std::to_string(rhs),
                    {x, y});
      }
    }
  }
  return Autotopism(loop, std::move(u), std::move(v), std::move(w));
}

Autotopism identity_autotopism(const Loop& loop) {
  const Perm id = Perm::identity(loop.order());
  return verify(loop, id, id, id);
}

Autotopism compose_atp(const Autotopism& a, const Autotopism& b) {
  if (a.order() != b.order()) {
    throw Error("degree-mismatch", "cannot compose autotopisms of orders " +
                                       std::to_string(a.order()) + " and " +
                                       std::to_string(b.order()));
  }
  return verify(a.loop(), compose(a.u(), b.u()), compose(a.v(), b.v()),
                compose(a.w(), b.w()));
}

Autotopism invert_atp(const Autotopism& a) {
  return verify(a.loop(), invert(a.u()), invert(a.v()), invert(a.w()));
}

Autotopism lc_autotopism(const Loop& loop, unsigned x) {
  const Perm lx2 = power(loop.left_translation(x), 2);
  return verify(loop, lx2, Perm::identity(loop.order()), lx2);
}

Autotopism rc_autotopism(const Loop& loop, unsigned x) {
  const Perm rx2 = power(loop.right_translation(x), 2);
  return verify(loop, Perm::identity(loop.order()), rx2, rx2);
}

CsPair cs_pair(const Loop& loop, unsigned x) {
  return cs_pair(loop, x, identity_autotopism(loop));
}

CsPair cs_pair(const Loop& loop, unsigned x, const Autotopism& base) {
  if (base.order() != loop.order()) {
    throw Error("degree-mismatch", "base autotopism order " +
                                       std::to_string(base.order()) +
                                       " does not match loop order " +
                                       std::to_string(loop.order()));
  }
  Autotopism first = compose_atp(base, lc_autotopism(loop, x));
  Autotopism second = compose_atp(base, rc_autotopism(loop, x));

  // The defining relations, asserted as exact permutation identities.
  const Perm lx2 = power(loop.left_translation(x), 2);
  const Perm rx2 = power(loop.right_translation(x), 2);
  const Perm s2inv_s1 = compose(invert(second.u()), first.u());
  const Perm t1inv_t2 = compose(invert(first.v()), second.v());
  const Perm r2inv_r1 = compose(invert(second.w()), first.w());
  const Perm chain = compose(
      compose(compose(compose(compose(invert(first.w()), second.w()), invert(second.v())),
                      first.v()),
              invert(second.u())),
      first.u());
  if (s2inv_s1 != lx2 || t1inv_t2 != rx2 ||
      r2inv_r1 != compose(invert(rx2), lx2) || !chain.is_identity()) {
    throw Error("internal-inconsistency",
                "CS pair relations failed at x = " + std::to_string(x));
  }
  return CsPair{std::move(first), std::move(second), base, x};
}

ConstructedPair constructed_autotopism(const Loop& loop, unsigned x) {
  if (x >= loop.order()) {
    throw Error("index-range",
                "element " + std::to_string(x) + " out of range for order " +
                    std::to_string(loop.order()));
  }
  const IdentityReport c = is_c(loop);
  if (!c.holds) {
    throw Error("not-c-loop", "loop does not satisfy the C identity: " + c.detail,
                c.witness);
  }
  const unsigned n = loop.order();
  const unsigned e = loop.identity();
  const unsigned sq = loop.mul(x, x);
  if (sq == e) {
    Autotopism triv = identity_autotopism(loop);
    return ConstructedPair{triv, triv, x, sq, true};
  }

  const Perm alpha1_s2 = invert(loop.left_translation(sq));
  const Perm beta1_t2 = loop.right_translation(sq);

  // gamma1 R2 : z -> (x^-2 * z) * x^2. Both bracketings of x^-2 * z * x^2
  // must agree (nuclear squareness); disagreement means the input is not a
  // C-loop after all.
  const unsigned inv_sq = loop.element_power(x, -2);
  std::vector<unsigned> gamma(n);
  for (unsigned z = 0; z < n; ++z) {
    const unsigned left = loop.mul(loop.mul(inv_sq, z), sq);
    const unsigned right = loop.mul(inv_sq, loop.mul(z, sq));
    if (left != right) {
      throw Error("internal-inconsistency",
                  "bracketings of x^-2 * z * x^2 disagree at (x, z) = (" +
                      std::to_string(x) + ", " + std::to_string(z) + ")",
                  {x, z});
    }
    gamma[z] = left;
  }

  Autotopism forward = [&] {
    try {
      return verify(loop, alpha1_s2, beta1_t2, Perm(gamma));
    } catch (const Error& err) {
      throw Error("internal-inconsistency",
                  std::string("assembled triple failed verification: ") + err.what(),
                  err.witness());
    }
  }();
  Autotopism inverse = invert_atp(forward);
  return ConstructedPair{std::move(forward), std::move(inverse), x, sq, false};
}

std::vector<Autotopism> enumerate_autotopisms(const Loop& loop) {
  const unsigned n = loop.order();
  if (n > kEnumerationMaxOrder) {
    throw Error("order-too-large", "enumeration supports order <= " +
                                       std::to_string(kEnumerationMaxOrder) +
                                       ", got " + std::to_string(n));
  }
  const unsigned e = loop.identity();
  std::vector<Autotopism> found;
  std::vector<unsigned> u(n);
  std::iota(u.begin(), u.end(), 0u);
  std::vector<unsigned> w(n), v(n), row_inv(n);
  do {
    for (unsigned v_of_e = 0; v_of_e < n; ++v_of_e) {
      // y = x*e pins W: xU * eV = (x*e)W, so W = U followed by R_{eV}.
      for (unsigned x = 0; x < n; ++x) w[x] = loop.mul(u[x], v_of_e);
      // x = e pins V: eU * yV = yW, so V = W followed by L_{eU}^-1.
      for (unsigned y = 0; y < n; ++y) row_inv[loop.mul(u[e], y)] = y;
      for (unsigned y = 0; y < n; ++y) v[y] = row_inv[w[y]];
      bool ok = true;
      for (unsigned x = 0; x < n && ok; ++x) {
        for (unsigned y = 0; y < n && ok; ++y) {
          ok = loop.mul(u[x], v[y]) == w[loop.mul(x, y)];
        }
      }
      if (ok) {
        found.push_back(verify(loop, Perm(u), Perm(v), Perm(w)));
      }
    }
  } while (std::next_permutation(u.begin(), u.end()));
  std::sort(found.begin(), found.end());
  return found;
}

std::string to_string(const Autotopism& a) {
  return "(" + format_cycles(a.u()) + ", " + format_cycles(a.v()) + ", " +
         format_cycles(a.w()) + ")";
}

}  // namespace loopkit
