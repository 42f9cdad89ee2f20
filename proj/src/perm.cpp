#include "loopkit/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "loopkit/error.hpp"

namespace loopkit {

namespace {

constexpr unsigned long kMaxParsePoint = 1ul << 20;

void check_bijection(const std::vector<unsigned>& images) {
  if (images.empty()) {
    throw Error("invalid-degree", "permutation degree must be at least 1");
  }
  const unsigned n = static_cast<unsigned>(images.size());
  std::vector<bool> seen(n, false);
  for (unsigned i = 0; i < n; ++i) {
    const unsigned v = images[i];
    if (v >= n) {
      throw Error("invalid-perm",
                  "image of " + std::to_string(i) + " is " + std::to_string(v) +
                      ", outside 0.." + std::to_string(n - 1),
                  {i, v});
    }
    if (seen[v]) {
      throw Error("invalid-perm",
                  "value " + std::to_string(v) + " appears twice in the image sequence",
                  {i, v});
    }
    seen[v] = true;
  }
}

}  // namespace

Perm::Perm(std::vector<unsigned> images) : images_(std::move(images)) {
  check_bijection(images_);
}

Perm Perm::identity(unsigned degree) {
  if (degree == 0) {
    throw Error("invalid-degree", "permutation degree must be at least 1");
  }
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Perm(std::move(images));
}

unsigned Perm::apply(unsigned point) const {
  if (point >= degree()) {
    throw Error("index-range", "point " + std::to_string(point) +
                                   " out of range for degree " +
                                   std::to_string(degree()));
  }
  return images_[point];
}

bool Perm::is_identity() const {
  for (unsigned i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm identity_perm(unsigned degree) { return Perm::identity(degree); }

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) {
    throw Error("degree-mismatch", "cannot compose permutations of degree " +
                                       std::to_string(p.degree()) + " and " +
                                       std::to_string(q.degree()));
  }
  std::vector<unsigned> images(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i) {
    images[i] = q[p[i]];
  }
  return Perm(std::move(images));
}

Perm invert(const Perm& p) {
  std::vector<unsigned> images(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i) {
    images[p[i]] = i;
  }
  return Perm(std::move(images));
}

Perm power(const Perm& p, long long exponent) {
  if (exponent < 0) {
    return invert(power(p, -exponent));
  }
  Perm result = Perm::identity(p.degree());
  Perm base = p;
  unsigned long long k = static_cast<unsigned long long>(exponent);
  while (k > 0) {
    if (k & 1u) result = compose(result, base);
    base = compose(base, base);
    k >>= 1u;
  }
  return result;
}

Perm parse_cycles(std::string_view text, unsigned degree) {
  if (degree == 0) {
    throw Error("invalid-degree", "permutation degree must be at least 1");
  }
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  bool any_cycle = false;
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw ParseError("expected '(' at offset " + std::to_string(i), i);
    }
    const std::size_t open = i;
    ++i;
    std::vector<unsigned> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size()) {
        throw ParseError("unclosed cycle opened at offset " + std::to_string(open), open);
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError(std::string("unexpected character '") + text[i] +
                             "' at offset " + std::to_string(i),
                         i);
      }
      const std::size_t tok = i;
      unsigned long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned long>(text[i] - '0');
        if (value > kMaxParsePoint) {
          throw ParseError("point too large at offset " + std::to_string(tok), tok);
        }
        ++i;
      }
      if (value >= degree) {
        throw ParseError("point " + std::to_string(value) + " at offset " +
                             std::to_string(tok) + " exceeds degree " +
                             std::to_string(degree),
                         tok);
      }
      const unsigned point = static_cast<unsigned>(value);
      if (used[point]) {
        throw ParseError("repeated point " + std::to_string(point) + " at offset " +
                             std::to_string(tok),
                         tok);
      }
      used[point] = true;
      cycle.push_back(point);
    }
    any_cycle = true;
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k) {
      images[cycle[k]] = cycle[k + 1];
    }
    if (cycle.size() > 1) {
      images[cycle.back()] = cycle.front();
    }
    skip_ws();
  }
  if (!any_cycle) {
    throw ParseError("empty cycle-notation input", text.size());
  }
  return Perm(std::move(images));
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (unsigned start = 0; start < p.degree(); ++start) {
    if (seen[start] || p[start] == start) {
      seen[start] = true;
      continue;
    }
    out += '(';
    unsigned point = start;
    bool first = true;
    while (!seen[point]) {
      seen[point] = true;
      if (!first) out += ' ';
      out += std::to_string(point);
      first = false;
      point = p[point];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace loopkit
