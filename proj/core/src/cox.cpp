#include "scrollreg/cox.hpp"

#include <numeric>

namespace scrollreg {

DivClass cox_degree(const Scroll& x, const CoxExponent& e) {
  std::int64_t p = std::accumulate(e.beta.begin(), e.beta.end(), std::int64_t{0});
  std::int64_t q = std::accumulate(e.alpha.begin(), e.alpha.end(), std::int64_t{0});
  for (int j = 0; j <= x.n(); ++j) q -= x.a(j) * e.beta[static_cast<std::size_t>(j)];
  return {p, q};
}

namespace {

void compose(std::vector<std::int64_t>& v, std::size_t pos, std::int64_t remaining,
             const std::function<void(std::span<const std::int64_t>)>& visit) {
  if (pos + 1 == v.size()) {
    v[pos] = remaining;
    visit(v);
    return;
  }
  for (std::int64_t k = 0; k <= remaining; ++k) {
    v[pos] = k;
    compose(v, pos + 1, remaining - k, visit);
  }
}

}  // namespace

void for_each_weak_composition(std::int64_t total, int parts,
                               const std::function<void(std::span<const std::int64_t>)>& visit) {
  if (total < 0 || parts < 0) return;
  if (parts == 0) {
    if (total == 0) visit({});
    return;
  }
  std::vector<std::int64_t> v(static_cast<std::size_t>(parts), 0);
  compose(v, 0, total, visit);
}

std::int64_t weak_composition_count(std::int64_t total, int parts) {
  if (total < 0 || parts <= 0) return (total == 0 && parts == 0) ? 1 : 0;
  // C(total + parts - 1, parts - 1) with parts small.
  std::int64_t r = 1;
  for (int i = 1; i < parts; ++i) r = r * (total + i) / i;
  return r;
}

std::vector<CoxExponent> section_monomials(const Scroll& x, DivClass d) {
  std::vector<CoxExponent> out;
  d = x.normalize(d);
  if (d.p < 0) return out;
  for_each_weak_composition(d.p, x.n() + 1, [&](std::span<const std::int64_t> beta) {
    if (x.m() == 0) {
      // F = 0 on P^n; x_0 only carries the trivial grading.
      out.push_back({{0}, {beta.begin(), beta.end()}});
      return;
    }
    std::int64_t deg_x = d.q;
    for (int j = 0; j <= x.n(); ++j) deg_x += x.a(j) * beta[static_cast<std::size_t>(j)];
    for_each_weak_composition(deg_x, x.m() + 1, [&](std::span<const std::int64_t> alpha) {
      out.push_back({{alpha.begin(), alpha.end()}, {beta.begin(), beta.end()}});
    });
  });
  return out;
}

}  // namespace scrollreg
