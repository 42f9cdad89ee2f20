#include "loopkit/magma.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "loopkit/error.hpp"

namespace loopkit {

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<unsigned>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) {
    throw Error("table-shape", "table must have at least one row");
  }
  if (n > kMaxOrder) {
    throw Error("unsupported-order", "order " + std::to_string(n) +
                                         " exceeds the maximum of " +
                                         std::to_string(kMaxOrder));
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (rows[x].size() != n) {
      throw Error("table-shape", "row " + std::to_string(x) + " has " +
                                     std::to_string(rows[x].size()) +
                                     " entries, expected " + std::to_string(n));
    }
  }
  std::vector<unsigned> cells(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const unsigned v = rows[x][y];
      if (v >= n) {
        throw Error("entry-range",
                    "entry at (" + std::to_string(x) + ", " + std::to_string(y) +
                        ") is " + std::to_string(v) + ", outside 0.." +
                        std::to_string(n - 1),
                    {static_cast<unsigned>(x), static_cast<unsigned>(y), v});
      }
      cells[x * n + y] = v;
    }
  }
  // Latin property: each row and each column is a permutation of 0..n-1.
  std::vector<bool> seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t y = 0; y < n; ++y) {
      const unsigned v = cells[x * n + y];
      if (seen[v]) {
        throw Error("latin-violation",
                    "row " + std::to_string(x) + " repeats value " + std::to_string(v),
                    {static_cast<unsigned>(x), v});
      }
      seen[v] = true;
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t x = 0; x < n; ++x) {
      const unsigned v = cells[x * n + y];
      if (seen[v]) {
        throw Error("latin-violation",
                    "column " + std::to_string(y) + " repeats value " + std::to_string(v),
                    {static_cast<unsigned>(y), v});
      }
      seen[v] = true;
    }
  }
  return CayleyTable(static_cast<unsigned>(n), std::move(cells));
}

std::vector<unsigned> CayleyTable::row(unsigned x) const {
  if (x >= order_) {
    throw Error("index-range", "row " + std::to_string(x) + " out of range");
  }
  return {cells_.begin() + x * order_, cells_.begin() + (x + 1) * order_};
}

std::vector<unsigned> CayleyTable::column(unsigned y) const {
  if (y >= order_) {
    throw Error("index-range", "column " + std::to_string(y) + " out of range");
  }
  std::vector<unsigned> col(order_);
  for (unsigned x = 0; x < order_; ++x) col[x] = cells_[x * order_ + y];
  return col;
}

CayleyTable from_table(const std::vector<std::vector<unsigned>>& rows) {
  return CayleyTable::from_rows(rows);
}

Loop as_loop(const CayleyTable& q) {
  const unsigned n = q.order();
  for (unsigned e = 0; e < n; ++e) {
    bool ok = true;
    for (unsigned x = 0; x < n && ok; ++x) {
      ok = q.at(e, x) == x && q.at(x, e) == x;
    }
    if (ok) {
      return Loop(std::make_shared<const CayleyTable>(q), e);
    }
  }
  throw Error("no-identity", "quasigroup has no two-sided identity element");
}

Perm Loop::left_translation(unsigned x) const {
  if (x >= order()) {
    throw Error("index-range",
                "element " + std::to_string(x) + " out of range for order " +
                    std::to_string(order()));
  }
  return Perm(table_->row(x));
}

Perm Loop::right_translation(unsigned x) const {
  if (x >= order()) {
    throw Error("index-range",
                "element " + std::to_string(x) + " out of range for order " +
                    std::to_string(order()));
  }
  return Perm(table_->column(x));
}

std::vector<Perm> Loop::right_translations() const {
  std::vector<Perm> all;
  all.reserve(order());
  for (unsigned x = 0; x < order(); ++x) {
    all.push_back(right_translation(x));
  }
  return all;
}

PowerChain Loop::power_chain(unsigned x) const {
  if (x >= order()) {
    throw Error("index-range",
                "element " + std::to_string(x) + " out of range for order " +
                    std::to_string(order()));
  }
  PowerChain result;
  result.chain = {identity_};
  if (x == identity_) return result;
  result.chain.push_back(x);
  // chain[k] is the single value of x^k; with all lower powers single-valued,
  // the bracketings of x^k are exactly the split products chain[i]*chain[k-i].
  while (true) {
    const std::size_t k = result.chain.size();
    const unsigned first = mul(x, result.chain[k - 1]);
    for (std::size_t i = 2; i < k; ++i) {
      const unsigned other = mul(result.chain[i], result.chain[k - i]);
      if (other != first) {
        result.ambiguous = true;
        result.ambiguous_exponent = static_cast<unsigned>(k);
        result.value_a = first;
        result.value_b = other;
        return result;
      }
    }
    if (first == identity_) return result;
    result.chain.push_back(first);
  }
}

unsigned Loop::element_power(unsigned x, long long m) const {
  const PowerChain pc = power_chain(x);
  if (pc.ambiguous) {
    throw Error("power-ambiguity",
                "bracketings of " + std::to_string(x) + "^" +
                    std::to_string(pc.ambiguous_exponent) + " disagree: " +
                    std::to_string(pc.value_a) + " vs " + std::to_string(pc.value_b),
                {x, pc.ambiguous_exponent, pc.value_a, pc.value_b});
  }
  const long long o = static_cast<long long>(pc.chain.size());
  const long long idx = ((m % o) + o) % o;
  return pc.chain[static_cast<std::size_t>(idx)];
}

namespace {

unsigned parse_entry(std::string_view token, std::size_t line_no) {
  unsigned value = 0;
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error("tbl-format", "line " + std::to_string(line_no) +
                                  ": token '" + std::string(token) +
                                  "' is not a nonnegative integer");
  }
  return value;
}

}  // namespace

CayleyTable read_table_file(std::string_view text) {
  // Collect content lines: skip comments ('#'-prefixed) and blank lines.
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line;
    if (nl == std::string_view::npos) {
      if (pos >= text.size()) break;
      line = text.substr(pos);
      pos = text.size() + 1;
    } else {
      line = text.substr(pos, nl - pos);
      pos = nl + 1;
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') continue;
    lines.emplace_back(line_no, line);
  }
  if (lines.empty()) {
    throw Error("tbl-format", "no content lines");
  }

  const auto tokens_of = [](std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
  };

  const auto header = tokens_of(lines[0].second);
  if (header.size() != 1) {
    throw Error("tbl-format", "line " + std::to_string(lines[0].first) +
                                  ": expected a single order token, got " +
                                  std::to_string(header.size()));
  }
  const unsigned n = parse_entry(header[0], lines[0].first);
  if (n == 0) {
    throw Error("tbl-format", "order must be at least 1");
  }
  if (lines.size() != static_cast<std::size_t>(n) + 1) {
    throw Error("tbl-format", "expected " + std::to_string(n) +
                                  " table rows, found " +
                                  std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<unsigned>> rows;
  rows.reserve(n);
  for (unsigned x = 0; x < n; ++x) {
    const auto [row_line_no, row_line] = lines[x + 1];
    const auto tokens = tokens_of(row_line);
    if (tokens.size() != n) {
      throw Error("tbl-format", "line " + std::to_string(row_line_no) + ": expected " +
                                    std::to_string(n) + " entries, got " +
                                    std::to_string(tokens.size()));
    }
    std::vector<unsigned> row;
    row.reserve(n);
    for (const auto& token : tokens) {
      row.push_back(parse_entry(token, row_line_no));
    }
    rows.push_back(std::move(row));
  }
  return CayleyTable::from_rows(rows);
}

std::string write_table_file(const CayleyTable& q) {
  std::string out = std::to_string(q.order());
  out += '\n';
  for (unsigned x = 0; x < q.order(); ++x) {
    for (unsigned y = 0; y < q.order(); ++y) {
      if (y != 0) out += ' ';
      out += std::to_string(q.at(x, y));
    }
    out += '\n';
  }
  return out;
}

}  // namespace loopkit
