#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "loopkit/perm.hpp"

namespace loopkit {

/// Largest supported table order.
inline constexpr unsigned kMaxOrder = 256;

/// An n-by-n Latin square over {0..n-1}; cell (x, y) holds x*y.
/// Immutable after construction; construction validates the Latin property.
class CayleyTable {
public:
  static CayleyTable from_rows(const std::vector<std::vector<unsigned>>& rows);

  unsigned order() const { return order_; }

  unsigned at(unsigned x, unsigned y) const { return cells_[x * order_ + y]; }

  /// Row-major cells.
  const std::vector<unsigned>& cells() const { return cells_; }

  std::vector<unsigned> row(unsigned x) const;
  std::vector<unsigned> column(unsigned y) const;

  friend bool operator==(const CayleyTable& a, const CayleyTable& b) = default;

private:
  CayleyTable(unsigned order, std::vector<unsigned> cells)
      : order_(order), cells_(std::move(cells)) {}

  unsigned order_;
  std::vector<unsigned> cells_;
};

/// Validated quasigroup from a row matrix.
CayleyTable from_table(const std::vector<std::vector<unsigned>>& rows);

/// All-bracketings power data for one element: chain[k] is the unique value
/// of x^k for k < chain.size(); if two bracketings of some power disagree the
/// chain stops there and `ambiguous` carries the clash.
struct PowerChain {
  std::vector<unsigned> chain;  // x^0 = e, x^1 = x, ... x^{order(x)-1}
  bool ambiguous = false;
  unsigned ambiguous_exponent = 0;
  unsigned value_a = 0;
  unsigned value_b = 0;
};

/// A quasigroup with a verified two-sided identity element.
/// Cheap to copy (the table is shared); immutable.
class Loop {
public:
  const CayleyTable& table() const { return *table_; }
  unsigned order() const { return table_->order(); }
  unsigned identity() const { return identity_; }

  unsigned mul(unsigned x, unsigned y) const { return table_->at(x, y); }

  /// y -> x*y (row x as a map).
  Perm left_translation(unsigned x) const;
  /// y -> y*x (column x as a map).
  Perm right_translation(unsigned x) const;

  /// [R_0, R_1, ..., R_{n-1}] indexed by element.
  std::vector<Perm> right_translations() const;

  /// All-bracketings powers of x, stopping at the order of x or at the first
  /// ambiguity. Never throws.
  PowerChain power_chain(unsigned x) const;

  /// The m-th power of x for any integer m; negative powers solve
  /// x^k * y = e. Throws power-ambiguity if bracketings of some power of x
  /// disagree.
  unsigned element_power(unsigned x, long long m) const;

  friend bool operator==(const Loop& a, const Loop& b) {
    return a.identity_ == b.identity_ && *a.table_ == *b.table_;
  }

private:
  friend Loop as_loop(const CayleyTable& q);
  Loop(std::shared_ptr<const CayleyTable> table, unsigned identity)
      : table_(std::move(table)), identity_(identity) {}

  std::shared_ptr<const CayleyTable> table_;
  unsigned identity_;
};

/// Scans for a two-sided identity element; a quasigroup has at most one.
Loop as_loop(const CayleyTable& q);

/// Text format: line 1 is the order n, then n lines of n space-separated
/// decimal entries. Lines beginning with '#' are comments; blank lines are
/// skipped; the trailing newline is optional on read.
CayleyTable read_table_file(std::string_view text);

/// Inverse of read_table_file; emits no comments and ends with a newline.
std::string write_table_file(const CayleyTable& q);

}  // namespace loopkit
