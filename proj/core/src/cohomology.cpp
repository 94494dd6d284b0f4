#include "scrollreg/cohomology.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "scrollreg/cox.hpp"
#include "scrollreg/exact_rank.hpp"

namespace scrollreg {

BigInt CohomTable::at(int i) const {
  if (i < 0 || i > dim()) return 0;
  return h[static_cast<std::size_t>(i)];
}

bool CohomTable::is_zero() const {
  return std::all_of(h.begin(), h.end(), [](const BigInt& v) { return v.is_zero(); });
}

BigInt CohomTable::euler() const {
  BigInt chi = 0;
  for (std::size_t i = 0; i < h.size(); ++i) chi += (i % 2 == 0) ? h[i] : BigInt(-h[i]);
  return chi;
}

CohomTable& CohomTable::operator+=(const CohomTable& o) {
  if (h.size() < o.h.size()) h.resize(o.h.size(), 0);
  for (std::size_t i = 0; i < o.h.size(); ++i) h[i] += o.h[i];
  return *this;
}

std::ostream& operator<<(std::ostream& os, const CohomTable& t) {
  os << '(';
  for (std::size_t i = 0; i < t.h.size(); ++i) os << (i ? "," : "") << t.h[i];
  return os << ')';
}

SplitBundle SplitBundle::dual() const {
  SplitBundle d;
  for (auto s : summands) d.summands.push_back(-s);
  return d;
}

SplitBundle SplitBundle::twisted(DivClass t) const {
  SplitBundle d;
  for (auto s : summands) d.summands.push_back(s + t);
  return d;
}

ProjectiveCohom pm_cohom(int m, std::int64_t d) {
  if (m < 0) throw PreconditionError("pm_cohom: negative dimension");
  ProjectiveCohom r;
  r.h0 = d >= 0 ? binomial(d + m, m) : BigInt(0);
  r.hm = (-d - 1 >= m) ? binomial(-d - 1, m) : BigInt(0);
  return r;
}

std::vector<std::int64_t> sym_twists(const Scroll& x, std::int64_t k) {
  if (k < 0) throw PreconditionError("sym_twists: negative symmetric power");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(weak_composition_count(k, x.n() + 1)));
  for_each_weak_composition(k, x.n() + 1, [&](std::span<const std::int64_t> beta) {
    std::int64_t t = 0;
    for (int j = 0; j <= x.n(); ++j) t += beta[static_cast<std::size_t>(j)] * x.a(j);
    out.push_back(t);
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Multiplicities of the twists of Sym^k V.  Summands are listed when there
// are few of them, otherwise counted by a knapsack over the shifted weights
// a_j - a_0.
template <typename Count>
std::map<std::int64_t, Count> sym_twist_histogram(const Scroll& x, std::int64_t k) {
  std::map<std::int64_t, Count> mult;
  const std::int64_t spread = x.a(x.n()) - x.a(0);
  const std::int64_t cols = k * spread + 1;
  const BigInt listed = binomial(k + x.n(), x.n());
  if (listed <= BigInt(k + 1) * cols) {
    for (auto t : sym_twists(x, k)) mult[t] += 1;
    return mult;
  }
  std::vector<Count> f(static_cast<std::size_t>((k + 1) * cols), Count(0));
  auto at = [&](std::int64_t row, std::int64_t s) -> Count& { return f[static_cast<std::size_t>(row * cols + s)]; };
  for (std::int64_t row = 0; row <= k; ++row) at(row, 0) = 1;
  for (int j = 1; j <= x.n(); ++j) {
    const std::int64_t b = x.a(j) - x.a(0);
    for (std::int64_t row = 1; row <= k; ++row)
      for (std::int64_t s = b; s < cols; ++s) at(row, s) += at(row - 1, s - b);
  }
  for (std::int64_t s = 0; s < cols; ++s)
    if (at(k, s) != 0) mult[k * x.a(0) + s] = at(k, s);
  return mult;
}

// Accumulates h^*(P^m, Sym^k V (d)) with multiplicities.
template <typename Sink>
void sym_pm_cohom(const Scroll& x, std::int64_t k, std::int64_t d, Sink&& sink) {
  auto emit = [&](const auto& mult) {
    for (const auto& [t, count] : mult) {
      auto c = pm_cohom(x.m(), t + d);
      sink(c.h0 * count, c.hm * count);
    }
  };
  if (binomial(k + x.n(), x.n()) <= std::numeric_limits<std::int64_t>::max())
    emit(sym_twist_histogram<std::int64_t>(x, k));
  else
    emit(sym_twist_histogram<BigInt>(x, k));
}

}  // namespace

CohomTable line_cohom(const Scroll& x, DivClass d) {
  const int n = x.n(), m = x.m();
  CohomTable t(n + m);
  if (d.p >= 0) {
    sym_pm_cohom(x, d.p, d.q, [&](const BigInt& h0, const BigInt& hm) {
      t[0] += h0;
      t[m] += hm;
    });
  } else if (d.p < -n) {
    sym_pm_cohom(x, -d.p - n - 1, x.c() - d.q - 1 - m, [&](const BigInt& h0, const BigInt& hm) {
      t[n + m] += h0;
      t[n] += hm;
    });
  }
  return t;
}

CohomTable bundle_cohom(const Scroll& x, const SplitBundle& e, DivClass twist) {
  CohomTable t(x.dim());
  for (auto s : e.summands) t += line_cohom(x, s + twist);
  return t;
}

BigInt euler_char(const Scroll& x, DivClass d) { return line_cohom(x, d).euler(); }

bool is_globally_generated(const Scroll& x, DivClass d) {
  d = x.normalize(d);
  if (x.m() == 0) return d.p >= 0;
  return d.p >= 0 && d.p * x.a(0) + d.q >= 0;
}

MultRank mult_map_rank(const Scroll& x, const SplitBundle& e, DivClass by) {
  const bool along_f = by == DivClass{0, 1};
  const bool along_h = by == DivClass{1, 0};
  if (!along_f && !along_h) throw PreconditionError("mult_map_rank: twist direction must be (0,1) or (1,0)");
  if (along_h && x.n() == 0) throw PreconditionError("mult_map_rank: (1,0) needs n > 0");

  // Target basis: monomials of every summand of E(by), indexed per summand.
  std::map<std::pair<std::size_t, CoxExponent>, std::int32_t> target_index;
  for (std::size_t s = 0; s < e.summands.size(); ++s)
    for (auto& mono : section_monomials(x, e.summands[s] + by))
      target_index.emplace(std::make_pair(s, std::move(mono)), static_cast<std::int32_t>(target_index.size()));

  std::vector<SparseRow> rows;
  auto image = [&](std::size_t s, CoxExponent mono) {
    auto it = target_index.find({s, mono});
    if (it == target_index.end()) throw Error("mult_map_rank: product left the target basis");
    rows.push_back({{it->second, 1}});
  };

  for (std::size_t s = 0; s < e.summands.size(); ++s) {
    if (along_f) {
      for (const auto& mono : section_monomials(x, e.summands[s]))
        for (int i = 0; i <= x.m(); ++i) {
          CoxExponent prod = mono;
          if (x.m() > 0) ++prod.alpha[static_cast<std::size_t>(i)];
          image(s, std::move(prod));
        }
    } else {
      for (int k = 0; k <= x.n(); ++k)
        for (const auto& mono : section_monomials(x, e.summands[s] + DivClass{0, x.a(k)})) {
          CoxExponent prod = mono;
          ++prod.beta[static_cast<std::size_t>(k)];
          image(s, std::move(prod));
        }
    }
  }
  return {static_cast<std::int64_t>(exact_rank(rows)), static_cast<std::int64_t>(target_index.size())};
}

}  // namespace scrollreg
