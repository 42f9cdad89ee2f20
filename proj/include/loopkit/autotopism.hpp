#pragma once

#include <string>
#include <vector>

#include "loopkit/magma.hpp"
#include "loopkit/perm.hpp"

namespace loopkit {

/// A verified autotopism triple (U, V, W) of a loop: xU * yV = (x*y)W for all
/// x, y. Instances exist only through verify() and the operations below, so
/// the defining equation always holds. Carries its loop (cheap shared copy).
class Autotopism {
public:
  const Loop& loop() const { return loop_; }
  const Perm& u() const { return u_; }
  const Perm& v() const { return v_; }
  const Perm& w() const { return w_; }
  unsigned order() const { return loop_.order(); }

  bool is_identity() const {
    return u_.is_identity() && v_.is_identity() && w_.is_identity();
  }

  /// Equality compares components only (not loop identity).
  friend bool operator==(const Autotopism& a, const Autotopism& b) {
    return a.u_ == b.u_ && a.v_ == b.v_ && a.w_ == b.w_;
  }

  /// Lexicographic on (U, V, W) image sequences.
  friend bool operator<(const Autotopism& a, const Autotopism& b);

private:
  friend Autotopism verify(const Loop& loop, Perm u, Perm v, Perm w);
  Autotopism(Loop loop, Perm u, Perm v, Perm w);

  Loop loop_;
  Perm u_, v_, w_;
};

/// Checks the defining equation over all pairs; on failure throws
/// `not-autotopism` with the first failing pair (x, y) as witness.
Autotopism verify(const Loop& loop, Perm u, Perm v, Perm w);

/// The trivial triple (I, I, I).
Autotopism identity_autotopism(const Loop& loop);

/// Componentwise right-action product: (A,B,C)(U,V,W) = (AU, BV, CW),
/// re-verified against a's loop.
Autotopism compose_atp(const Autotopism& a, const Autotopism& b);

Autotopism invert_atp(const Autotopism& a);

/// (L_x^2, I, L_x^2); verifies exactly when the loop is LC.
Autotopism lc_autotopism(const Loop& loop, unsigned x);

/// (I, R_x^2, R_x^2); verifies exactly when the loop is RC.
Autotopism rc_autotopism(const Loop& loop, unsigned x);

/// The CS-autotopism pair of a C-loop at x over a base triple (A,B,C):
///   first  = (S1, T1, R1) = (A,B,C)(L_x^2, I, L_x^2)
///   second = (S2, T2, R2) = (A,B,C)(I, R_x^2, R_x^2)
/// satisfying, as exact permutation identities,
///   L_x^2 = S2^-1 S1,  R_x^2 = T1^-1 T2,  R_x^-2 L_x^2 = R2^-1 R1,
///   R1^-1 R2 T2^-1 T1 S2^-1 S1 = I.
struct CsPair {
  Autotopism first;
  Autotopism second;
  Autotopism base;
  unsigned source_element;
};

CsPair cs_pair(const Loop& loop, unsigned x);
CsPair cs_pair(const Loop& loop, unsigned x, const Autotopism& base);

/// Autotopism constructed from an element with x^2 != e, plus its inverse:
///   forward = (alpha1 S2, beta1 T2, gamma1 R2)
///           = (L_{x^2}^-1, R_{x^2}, z -> (x^-2 z) x^2)
///   inverse = (alpha2 S1, beta2 T1, gamma2 R1) = forward^-1.
/// When x^2 = e both are the identity triple and `trivial` is set.
struct ConstructedPair {
  Autotopism forward;
  Autotopism inverse;
  unsigned source_element;
  unsigned square;
  bool trivial;
};

/// Requires a C-loop (checked); the conjugation component is computed with
/// both bracketings of x^-2 * z * x^2 compared, erroring on disagreement.
ConstructedPair constructed_autotopism(const Loop& loop, unsigned x);

/// Brute-force enumeration guard.
inline constexpr unsigned kEnumerationMaxOrder = 8;

/// All autotopisms of a small loop (order <= 8), in lexicographic order.
/// For each candidate U and each choice of eV, W and V are forced by
/// W(x) = xU * eV and eU * yV = yW; candidates are then filtered by full
/// verification.
std::vector<Autotopism> enumerate_autotopisms(const Loop& loop);

/// "(U, V, W)" with each component in canonical cycle notation.
std::string to_string(const Autotopism& a);

}  // namespace loopkit
