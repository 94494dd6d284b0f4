#include "scrollreg/oracle.hpp"

#include <algorithm>

namespace scrollreg {

namespace {

struct SignPattern {
  bool x_negative;
  bool y_negative;
};

std::vector<SignPattern> patterns_for_row(const Scroll& x, int row) {
  std::vector<SignPattern> out;
  for (bool xn : {false, true})
    for (bool yn : {false, true})
      if ((xn ? x.m() : 0) + (yn ? x.n() : 0) == row) out.push_back({xn, yn});
  return out;
}

// Visits the exponent vectors with all entries >= 0 (or all <= -1) summing to
// `total`.  All-negative vectors are written as -1 - u with u >= 0.
template <typename Visit>
void signed_compositions(std::int64_t total, int parts, bool negative, std::vector<std::int64_t>& v,
                         std::size_t pos, Visit&& visit) {
  std::int64_t budget = negative ? -total - parts : total;
  if (pos == 0 && budget < 0) return;
  if (pos + 1 == v.size()) {
    std::int64_t used = 0;
    for (std::size_t i = 0; i < pos; ++i) used += negative ? -1 - v[i] : v[i];
    std::int64_t rest = budget - used;
    v[pos] = negative ? -1 - rest : rest;
    visit(v);
    return;
  }
  std::int64_t used = 0;
  for (std::size_t i = 0; i < pos; ++i) used += negative ? -1 - v[i] : v[i];
  for (std::int64_t k = 0; k <= budget - used; ++k) {
    v[pos] = negative ? -1 - k : k;
    signed_compositions(total, parts, negative, v, pos + 1, visit);
  }
}

template <typename Visit>
void enumerate_pattern(const Scroll& x, DivClass d, SignPattern pat, Visit&& visit) {
  std::vector<std::int64_t> beta(static_cast<std::size_t>(x.n()) + 1);
  std::vector<std::int64_t> alpha(static_cast<std::size_t>(x.m()) + 1);
  signed_compositions(d.p, x.n() + 1, pat.y_negative, beta, 0, [&](const std::vector<std::int64_t>& b) {
    std::int64_t total_x = d.q;
    for (int j = 0; j <= x.n(); ++j) total_x += x.a(j) * b[static_cast<std::size_t>(j)];
    signed_compositions(total_x, x.m() + 1, pat.x_negative, alpha, 0,
                        [&](const std::vector<std::int64_t>& a) { visit(a, b); });
  });
}

void check_row(const Scroll& x, int row) {
  if (row != 0 && row != x.m() && row != x.n() && row != x.n() + x.m())
    throw PreconditionError("enumerate_contributing: row must be one of 0, m, n, n+m");
}

}  // namespace

void for_each_contributing(const Scroll& x, DivClass d, int row, const std::function<void(const Character&)>& visit) {
  check_row(x, row);
  Character ch;
  for (auto pat : patterns_for_row(x, row))
    enumerate_pattern(x, d, pat, [&](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
      ch.alpha = a;
      ch.beta = b;
      visit(ch);
    });
}

std::vector<Character> enumerate_contributing(const Scroll& x, DivClass d, int row) {
  std::vector<Character> out;
  for_each_contributing(x, d, row, [&](const Character& ch) { out.push_back(ch); });
  std::sort(out.begin(), out.end(), [](const Character& l, const Character& r) {
    if (l.beta != r.beta) return l.beta < r.beta;
    return l.alpha < r.alpha;
  });
  return out;
}

CohomTable character_cohom(const Scroll& x, DivClass d) {
  CohomTable t(x.dim());
  for (bool xn : {false, true})
    for (bool yn : {false, true}) {
      std::int64_t count = 0;
      enumerate_pattern(x, d, {xn, yn}, [&](const auto&, const auto&) { ++count; });
      t[(xn ? x.m() : 0) + (yn ? x.n() : 0)] += count;
    }
  return t;
}

}  // namespace scrollreg
