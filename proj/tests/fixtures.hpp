#pragma once

// Shared test fixtures. Tables here are independent frozen copies (or
// independent constructions) used as oracles against the library under test.

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "loopkit/error.hpp"
#include "loopkit/magma.hpp"

namespace fixtures {

using Rows = std::vector<std::vector<unsigned>>;

// The non-associative C-loop of order 12 used across the suite.
inline const Rows& c12_rows() {
  static const Rows rows = {
      {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
      {1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9},
      {2, 0, 1, 5, 3, 4, 8, 6, 7, 11, 9, 10},
      {3, 4, 5, 0, 1, 2, 9, 10, 11, 6, 7, 8},
      {4, 5, 3, 1, 2, 0, 10, 11, 9, 7, 8, 6},
      {5, 3, 4, 2, 0, 1, 11, 9, 10, 8, 6, 7},
      {6, 7, 8, 10, 11, 9, 0, 1, 2, 5, 3, 4},
      {7, 8, 6, 11, 9, 10, 1, 2, 0, 3, 4, 5},
      {8, 6, 7, 9, 10, 11, 2, 0, 1, 4, 5, 3},
      {9, 10, 11, 8, 6, 7, 3, 4, 5, 2, 0, 1},
      {10, 11, 9, 6, 7, 8, 4, 5, 3, 0, 1, 2},
      {11, 9, 10, 7, 8, 6, 5, 3, 4, 1, 2, 0},
  };
  return rows;
}

inline loopkit::Loop c12_loop() {
  return loopkit::as_loop(loopkit::from_table(c12_rows()));
}

inline Rows cyclic_rows(unsigned n) {
  Rows rows(n, std::vector<unsigned>(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  return rows;
}

inline loopkit::Loop cyclic_loop(unsigned n) {
  return loopkit::as_loop(loopkit::from_table(cyclic_rows(n)));
}

inline Rows product_rows(const Rows& a, const Rows& b) {
  const unsigned na = static_cast<unsigned>(a.size());
  const unsigned nb = static_cast<unsigned>(b.size());
  const unsigned n = na * nb;
  Rows rows(n, std::vector<unsigned>(n));
  for (unsigned x1 = 0; x1 < na; ++x1)
    for (unsigned y1 = 0; y1 < nb; ++y1)
      for (unsigned x2 = 0; x2 < na; ++x2)
        for (unsigned y2 = 0; y2 < nb; ++y2)
          rows[x1 * nb + y1][x2 * nb + y2] = a[x1][x2] * nb + b[y1][y2];
  return rows;
}

inline loopkit::Loop klein4_loop() {
  return loopkit::as_loop(
      loopkit::from_table(product_rows(cyclic_rows(2), cyclic_rows(2))));
}

inline loopkit::Loop z2_cubed_loop() {
  return loopkit::as_loop(loopkit::from_table(
      product_rows(cyclic_rows(2), product_rows(cyclic_rows(2), cyclic_rows(2)))));
}

// Symmetric group on three points, elements ordered by image sequence;
// product applies the left factor first.
inline Rows s3_rows() {
  std::vector<std::vector<unsigned>> elements = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                 {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const auto index_of = [&](const std::vector<unsigned>& p) -> unsigned {
    for (unsigned i = 0; i < elements.size(); ++i)
      if (elements[i] == p) return i;
    throw std::logic_error("not a permutation of 3 points");
  };
  Rows rows(6, std::vector<unsigned>(6));
  for (unsigned g = 0; g < 6; ++g) {
    for (unsigned h = 0; h < 6; ++h) {
      std::vector<unsigned> gh(3);
      for (unsigned i = 0; i < 3; ++i) gh[i] = elements[h][elements[g][i]];
      rows[g][h] = index_of(gh);
    }
  }
  return rows;
}

inline loopkit::Loop s3_loop() {
  return loopkit::as_loop(loopkit::from_table(s3_rows()));
}

// A non-alternative (hence non-C, non-power-associative) loop of order 5.
inline const Rows& order5_rows() {
  static const Rows rows = {{0, 1, 2, 3, 4},
                            {1, 0, 3, 4, 2},
                            {2, 3, 4, 0, 1},
                            {3, 4, 1, 2, 0},
                            {4, 2, 0, 1, 3}};
  return rows;
}

inline loopkit::Loop order5_loop() {
  return loopkit::as_loop(loopkit::from_table(order5_rows()));
}

// Latin square of order 3 with no two-sided identity element.
inline const Rows& no_identity_rows() {
  static const Rows rows = {{0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  return rows;
}

// Randomized backtracking fill; always succeeds quickly for n <= 6.
inline Rows random_latin_rows(unsigned n, std::mt19937& rng) {
  Rows rows(n, std::vector<unsigned>(n, n));
  std::vector<std::vector<bool>> row_used(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> col_used(n, std::vector<bool>(n, false));
  std::function<bool(unsigned)> fill = [&](unsigned cell) -> bool {
    if (cell == n * n) return true;
    const unsigned r = cell / n;
    const unsigned c = cell % n;
    std::vector<unsigned> candidates;
    for (unsigned v = 0; v < n; ++v) {
      if (!row_used[r][v] && !col_used[c][v]) candidates.push_back(v);
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (unsigned v : candidates) {
      rows[r][c] = v;
      row_used[r][v] = col_used[c][v] = true;
      if (fill(cell + 1)) return true;
      row_used[r][v] = col_used[c][v] = false;
    }
    rows[r][c] = n;
    return false;
  };
  if (!fill(0)) throw std::logic_error("backtracking fill failed");
  return rows;
}

// Runs fn and returns the loopkit::Error it throws; fails if none is thrown.
template <typename Fn>
loopkit::Error capture_error(Fn&& fn) {
  try {
    fn();
  } catch (const loopkit::Error& error) {
    return error;
  }
  throw std::runtime_error("expected a loopkit::Error, none was thrown");
}

}  // namespace fixtures
