#include "scrollreg/hypercohomology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <tuple>
#include <unordered_map>

#include "scrollreg/exact_rank.hpp"
#include "scrollreg/oracle.hpp"

namespace scrollreg {

BigInt HyperTable::at(int degree) const {
  int k = degree - min_degree;
  if (k < 0 || k >= static_cast<int>(h.size())) return 0;
  return h[static_cast<std::size_t>(k)];
}

bool HyperTable::is_zero() const {
  return std::all_of(h.begin(), h.end(), [](const BigInt& v) { return v.is_zero(); });
}

HyperTable& HyperTable::operator+=(const HyperTable& o) {
  if (o.h.empty()) return *this;
  if (h.empty()) return *this = o;
  int lo = std::min(min_degree, o.min_degree);
  int hi = std::max(min_degree + static_cast<int>(h.size()), o.min_degree + static_cast<int>(o.h.size()));
  std::vector<BigInt> sum(static_cast<std::size_t>(hi - lo), 0);
  for (std::size_t k = 0; k < h.size(); ++k) sum[k + static_cast<std::size_t>(min_degree - lo)] += h[k];
  for (std::size_t k = 0; k < o.h.size(); ++k) sum[k + static_cast<std::size_t>(o.min_degree - lo)] += o.h[k];
  min_degree = lo;
  h = std::move(sum);
  return *this;
}

namespace {

// Negative-exponent supports of one summand's exponent for a fixed character.
struct Support {
  unsigned nx;
  unsigned ny;
};

using PatternKey = std::vector<std::uint64_t>;

Support support_of(const CoxExponent& rep, const CoxExponent& w) {
  Support s{0, 0};
  for (std::size_t i = 0; i < rep.alpha.size(); ++i)
    if (rep.alpha[i] + w.alpha[i] < 0) s.nx |= 1u << i;
  for (std::size_t j = 0; j < rep.beta.size(); ++j)
    if (rep.beta[j] + w.beta[j] < 0) s.ny |= 1u << j;
  return s;
}

PatternKey pattern_key(const MonomialComplex& c, const CoxExponent& w) {
  PatternKey key;
  key.reserve(c.summand_count());
  for (const auto& term : c.terms)
    for (const auto& s : term.summands) {
      Support sp = support_of(s.rep, w);
      key.push_back((static_cast<std::uint64_t>(sp.nx) << 32) | sp.ny);
    }
  return key;
}

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

// Cohomology of the Cech total complex attached to a support pattern.
HyperTable pattern_table(const MonomialComplex& c, const PatternKey& key) {
  const Scroll& x = c.scroll;
  const unsigned full_x = (1u << (x.m() + 1)) - 1;
  const unsigned full_y = (1u << (x.n() + 1)) - 1;
  const int min_deg = c.start_degree;
  const int span = static_cast<int>(c.terms.size()) + x.m() + x.n();

  std::vector<std::size_t> offset(c.terms.size() + 1, 0);
  for (std::size_t k = 0; k < c.terms.size(); ++k) offset[k + 1] = offset[k] + c.terms[k].summands.size();

  // cell (summand, I, J) -> index inside its degree
  std::vector<std::int64_t> size_of_degree(static_cast<std::size_t>(span), 0);
  std::map<std::tuple<std::size_t, unsigned, unsigned>, std::int32_t> index;
  auto degree_of = [&](std::size_t k, unsigned I, unsigned J) {
    return static_cast<int>(k) + std::popcount(I) - 1 + std::popcount(J) - 1;
  };
  for (std::size_t k = 0; k < c.terms.size(); ++k)
    for (std::size_t s = offset[k]; s < offset[k + 1]; ++s) {
      unsigned nx = static_cast<unsigned>(key[s] >> 32), ny = static_cast<unsigned>(key[s] & 0xffffffffu);
      for (unsigned I = 1; I <= full_x; ++I) {
        if ((I & nx) != nx) continue;
        for (unsigned J = 1; J <= full_y; ++J) {
          if ((J & ny) != ny) continue;
          auto d = static_cast<std::size_t>(degree_of(k, I, J));
          index[{s, I, J}] = static_cast<std::int32_t>(size_of_degree[d]++);
        }
      }
    }

  std::vector<std::vector<SparseRow>> rows(static_cast<std::size_t>(span));
  for (const auto& [cell, idx] : index) {
    auto [s, I, J] = cell;
    std::size_t k = static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), s) - offset.begin()) - 1;
    const int eps = parity_sign(c.degree_of(k));
    SparseRow row;
    for (int i = 0; i <= x.m(); ++i) {
      if (I & (1u << i)) continue;
      unsigned below = I & ((1u << i) - 1);
      row.push_back({index.at({s, I | (1u << i), J}), eps * parity_sign(std::popcount(below))});
    }
    const int ysign = eps * parity_sign(std::popcount(I) - 1);
    for (int j = 0; j <= x.n(); ++j) {
      if (J & (1u << j)) continue;
      unsigned below = J & ((1u << j) - 1);
      row.push_back({index.at({s, I, J | (1u << j)}), ysign * parity_sign(std::popcount(below))});
    }
    if (k < c.differentials.size())
      for (const auto& e : c.differentials[k])
        if (e.source == s - offset[k]) row.push_back({index.at({offset[k + 1] + e.target, I, J}), e.sign});
    // Cech targets and complex targets lie in the same next degree.
    auto d = static_cast<std::size_t>(degree_of(k, I, J));
    if (d + 1 < rows.size()) {
      row = canonical_row(std::move(row));
      if (!row.empty()) rows[d].push_back(std::move(row));
    }
    (void)idx;
  }

  std::vector<std::int64_t> rank(static_cast<std::size_t>(span), 0);
  for (std::size_t d = 0; d + 1 < rows.size(); ++d) rank[d] = static_cast<std::int64_t>(exact_rank(rows[d]));
  HyperTable t;
  t.min_degree = min_deg;
  for (std::size_t d = 0; d < static_cast<std::size_t>(span); ++d)
    t.h.emplace_back(size_of_degree[d] - rank[d] - (d > 0 ? rank[d - 1] : 0));
  return t;
}

struct ExponentHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : v) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
    return h;
  }
};

template <typename Visit>
void for_each_class(const MonomialComplex& c, Visit&& visit) {
  const Scroll& x = c.scroll;
  std::set<int> rows{0, x.m(), x.n(), x.n() + x.m()};
  std::unordered_map<std::vector<std::int64_t>, char, ExponentHash> seen;
  CoxExponent w;
  std::vector<std::int64_t> flat;
  for (const auto& term : c.terms)
    for (const auto& s : term.summands) {
      DivClass d = cox_degree(x, s.rep);
      for (int row : rows)
        for_each_contributing(x, d, row, [&](const Character& ch) {
          flat.clear();
          for (std::size_t i = 0; i < ch.alpha.size(); ++i) flat.push_back(ch.alpha[i] - s.rep.alpha[i]);
          for (std::size_t j = 0; j < ch.beta.size(); ++j) flat.push_back(ch.beta[j] - s.rep.beta[j]);
          if (!seen.emplace(flat, 0).second) return;
          w.alpha.assign(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(ch.alpha.size()));
          w.beta.assign(flat.begin() + static_cast<std::ptrdiff_t>(ch.alpha.size()), flat.end());
          visit(w);
        });
    }
}

void require_valid(const MonomialComplex& c) {
  auto report = validate_complex(c);
  if (!report.ok()) throw PreconditionError("hypercohom: invalid complex: " + report.violations.front().message);
}

}  // namespace

std::vector<CoxExponent> contributing_classes(const MonomialComplex& c) {
  std::vector<CoxExponent> out;
  for_each_class(c, [&](const CoxExponent& w) { out.push_back(w); });
  std::sort(out.begin(), out.end());
  return out;
}

HyperTable class_hypercohom(const MonomialComplex& c, const CoxExponent& w) {
  if (w.alpha.size() != static_cast<std::size_t>(c.scroll.m()) + 1 ||
      w.beta.size() != static_cast<std::size_t>(c.scroll.n()) + 1)
    throw PreconditionError("class_hypercohom: character has the wrong length");
  return pattern_table(c, pattern_key(c, w));
}

HyperTable hypercohom_full(const MonomialComplex& c) {
  require_valid(c);
  std::map<PatternKey, std::int64_t> multiplicity;
  for_each_class(c, [&](const CoxExponent& w) { ++multiplicity[pattern_key(c, w)]; });
  HyperTable total;
  total.min_degree = c.start_degree;
  total.h.assign(c.terms.size() + static_cast<std::size_t>(c.scroll.dim()), 0);
  for (const auto& [key, count] : multiplicity) {
    HyperTable t = pattern_table(c, key);
    for (auto& v : t.h) v *= count;
    total += t;
  }
  return total;
}

CohomTable hypercohom(const MonomialComplex& c) {
  HyperTable full = hypercohom_full(c);
  const int dim = c.scroll.dim();
  CohomTable t(dim);
  for (std::size_t k = 0; k < full.h.size(); ++k) {
    int d = full.min_degree + static_cast<int>(k);
    if (d >= 0 && d <= dim)
      t[d] = full.h[k];
    else if (!full.h[k].is_zero())
      throw Error("hypercohom: nonzero hypercohomology in degree " + std::to_string(d) + " outside 0..dim X");
  }
  return t;
}

CohomTable omega_cohom(const Scroll& x, int i, DivClass t, OmegaRoute route) {
  if (i < 0 || i > x.n()) throw PreconditionError("omega_cohom: index must satisfy 0 <= i <= n");
  if (i == 0 && route == OmegaRoute::kAuto) return line_cohom(x, t);
  if (route == OmegaRoute::kAuto) {
    std::int64_t res = 0, cores = 0;
    for (int r = i + 1; r <= x.n() + 1; ++r) res += static_cast<std::int64_t>(binomial(x.n() + 1, r));
    for (int r = 0; r <= i; ++r) cores += static_cast<std::int64_t>(binomial(x.n() + 1, r));
    route = res <= cores ? OmegaRoute::kResolution : OmegaRoute::kCoresolution;
  }

  static std::mutex mutex;
  static std::map<std::tuple<Scroll, int, DivClass, int>, CohomTable> cache;
  auto key = std::make_tuple(x, i, x.normalize(t), static_cast<int>(route));
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  MonomialComplex c = route == OmegaRoute::kResolution ? build_omega_resolution(x, i) : build_omega_coresolution(x, i);
  CohomTable result = hypercohom(c.twisted(t));
  std::lock_guard lock(mutex);
  cache.emplace(key, result);
  return result;
}

}  // namespace scrollreg
