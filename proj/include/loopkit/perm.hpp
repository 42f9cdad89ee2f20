#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace loopkit {

/// A bijection on {0..n-1}, stored as its image sequence.
///
/// Maps act on the right, written postfix: the image of i under p is i.p,
/// and compose(p, q) applies p first, then q, so i.compose(p,q) = (i.p).q.
/// Every constructor validates bijectivity.
class Perm {
public:
  explicit Perm(std::vector<unsigned> images);

  static Perm identity(unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }

  /// Image of `point`; throws on out-of-range input.
  unsigned apply(unsigned point) const;

  /// Unchecked image lookup.
  unsigned operator[](unsigned point) const { return images_[point]; }

  const std::vector<unsigned>& images() const { return images_; }

  bool is_identity() const;

  friend bool operator==(const Perm& a, const Perm& b) = default;
  /// Lexicographic order on image sequences (shorter degree first).
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) = default;

private:
  std::vector<unsigned> images_;
};

Perm identity_perm(unsigned degree);

/// Right-action composite: apply p, then q. Degrees must match.
Perm compose(const Perm& p, const Perm& q);

Perm invert(const Perm& p);

/// k-fold composite; k may be negative (power(p, -k) = invert(power(p, k))).
Perm power(const Perm& p, long long exponent);

/// Parses whitespace-tolerant disjoint cycle notation over {0..degree-1}.
/// Fixed points may be omitted or written as singletons; "()" is the
/// identity. Throws ParseError with the byte offset of the problem.
Perm parse_cycles(std::string_view text, unsigned degree);

/// Canonical cycle notation: cycles ordered by smallest moved point, each
/// cycle starting at its smallest point, fixed points omitted, identity
/// rendered "()". parse_cycles(format_cycles(p), p.degree()) == p.
std::string format_cycles(const Perm& p);

inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

}  // namespace loopkit
