#include "scrollreg/splitting.hpp"

#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace scrollreg {

std::string theorem_id(Theorem t) {
  switch (t) {
    case Theorem::kSplitO: return "2.1";
    case Theorem::kSplitOFH: return "2.2";
    case Theorem::kIndecomposable: return "2.3";
    case Theorem::kRnsSplitO: return "c2.5";
    case Theorem::kRnsSplitOFH: return "c2.6";
    case Theorem::kRnsIndecomposable: return "c2.7";
  }
  return "?";
}

std::optional<Theorem> parse_theorem(const std::string& s) {
  static const std::map<std::string, Theorem> names{
      {"2.1", Theorem::kSplitO},
      {"2.2", Theorem::kSplitOFH},
      {"2.3", Theorem::kIndecomposable},
      {"c2.5", Theorem::kRnsSplitO},
      {"c2.6", Theorem::kRnsSplitOFH},
      {"c2.7", Theorem::kRnsIndecomposable},
      {"split-o", Theorem::kSplitO},
      {"split-ofh", Theorem::kSplitOFH},
      {"indecomposable", Theorem::kIndecomposable},
      {"rns-split-o", Theorem::kRnsSplitO},
      {"rns-split-ofh", Theorem::kRnsSplitOFH},
      {"rns-indecomposable", Theorem::kRnsIndecomposable},
  };
  auto it = names.find(s);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

namespace {

TwistCondition cond(std::string label, int degree, DivClass offset, bool dual = false, int i = -1, int j = -1) {
  TwistCondition c;
  c.label = std::move(label);
  c.degree = degree;
  c.offset = offset;
  c.dual = dual;
  c.i = i;
  c.j = j;
  return c;
}

TwistCondition subset_cond(std::string label, int degree, DivClass offset, bool dual, int size, std::int64_t a_I,
                           int i = -1) {
  TwistCondition c = cond(std::move(label), degree, offset, dual, i);
  c.subset_size = size;
  c.a_I = a_I;
  return c;
}

// Distinct values of a_I over subsets I of {0..n} with |I| = size.
std::set<std::int64_t> subset_sums(const Scroll& x, int size) {
  std::set<std::int64_t> out;
  for (unsigned mask = 0; mask < (1u << (x.n() + 1)); ++mask)
    if (std::popcount(mask) == size) out.insert(x.a_sum(mask));
  return out;
}

void add_d(const Scroll& x, ConditionFamily& f) {
  for (int s = 1; s <= x.n(); ++s)
    for (auto a : subset_sums(x, s)) {
      f.push_back(subset_cond("d", s, {0, a - 1}, false, s, a));
      f.push_back(subset_cond("d", s, {0, a - 1}, true, s, a));
    }
}

void add_indecomposable_de(const Scroll& x, ConditionFamily& f) {
  const int n = x.n();
  for (int s = 1; s <= n; ++s)
    for (auto a : subset_sums(x, s)) {
      f.push_back(subset_cond("d", s, {-s, a - 1}, false, s, a));
      f.push_back(subset_cond("d", s, {-s + 1, a - 1}, true, s, a));
    }
  for (int i = 1; i < n; ++i)
    for (int k = 1; k <= i; ++k) {
      const int s = 1 - k + i;
      for (auto a : subset_sums(x, s)) {
        auto c = subset_cond("e", k, {-k, k + 1 - a}, false, s, a, i);
        c.j = k;
        f.push_back(c);
      }
    }
  for (int i = 1; i < n; ++i)
    for (int k = 1; k <= n - i; ++k) {
      const int s = k + 1;
      for (auto a : subset_sums(x, s)) {
        auto c = subset_cond("e", k, {-(k - 1), a - i - 1}, true, s, a, i);
        c.j = k;
        f.push_back(c);
      }
    }
}

void require_theorem_scroll(const Scroll& x) {
  if (!x.positive()) throw PreconditionError("splitting criteria need a positive scroll (a_0 > 0)");
  if (x.m() == 0 || x.n() == 0) throw PreconditionError("splitting criteria need m, n > 0");
}

void require_rns(const Scroll& x) {
  if (x.m() != 1) throw PreconditionError("rational normal scroll corollaries need m = 1");
}

SplittingWitness witness_of(const TwistCondition& c, std::optional<std::int64_t> t, const BigInt& h) {
  SplittingWitness w;
  w.condition = c.label;
  w.t = t;
  w.i = c.i;
  w.j = c.j;
  w.subset_size = c.subset_size;
  w.a_I = c.a_I;
  w.degree = c.degree;
  w.dual = c.dual;
  w.twist = condition_twist(c, t.value_or(0));
  w.h = h;
  return w;
}

SplittingReport check_uniform(const Scroll& x, const SheafSpec& e, Theorem which, const ConditionFamily& family) {
  check_sheaf(x, e);
  SplittingReport r;
  r.theorem = which;
  r.window = nonvanishing_window(x, e, family);
  if (!r.window.bounded()) throw Error("splitting check: unbounded t-window " + to_string(r.window));
  if (!r.window.empty)
    for (const auto& c : family)
      for (std::int64_t t = *r.window.lo; t <= *r.window.hi; ++t) {
        BigInt h = evaluate_condition(x, e, c, t);
        if (!h.is_zero()) r.witnesses.push_back(witness_of(c, t, h));
      }
  r.verdict = r.witnesses.empty();
  return r;
}

SplittingReport check_fixed(const Scroll& x, const SheafSpec& e, Theorem which, const ConditionFamily& family) {
  check_sheaf(x, e);
  SplittingReport r;
  r.theorem = which;
  RegResult measured = reg(x, e);
  r.measured_reg = measured.value;
  if (measured.value != std::optional<std::int64_t>(0)) {
    std::ostringstream os;
    os << "Reg(E) = " << (measured.value ? std::to_string(*measured.value) : std::string("-inf")) << ", not 0";
    r.precondition_failure = os.str();
  }
  for (const auto& c : family) {
    BigInt h = evaluate_condition(x, e, c, 0);
    if (!h.is_zero()) r.witnesses.push_back(witness_of(c, std::nullopt, h));
  }
  r.verdict = r.witnesses.empty() && !r.precondition_failure;
  if (!r.verdict) return r;

  const int n = x.n(), m = x.m();
  const std::int64_t c = x.c();
  auto h_at = [&](int degree, DivClass twist) { return sheaf_cohom(x, e, twist).at(degree); };
  Classification cl;
  if (BigInt h = h_at(n + m, {-(n + 1), c - m - 1}); !h.is_zero())
    cl = {1, "O", SplitBundle{{0, 0}}, -1, h};
  else if (BigInt h2 = h_at(n, {-(n + 1), c - 1}); !h2.is_zero())
    cl = {2, "O(F)", SplitBundle{{0, 1}}, -1, h2};
  else if (BigInt h3 = h_at(m, {-1, -m}); !h3.is_zero())
    cl = {3, "O(H-F)", SplitBundle{{1, -1}}, -1, h3};
  else
    for (int i = 1; i < n; ++i)
      if (BigInt h4 = h_at(i + m, {-(i + 1), i - m}); !h4.is_zero()) {
        std::ostringstream os;
        os << "Omega^" << i << "(" << i + 1 << "H-" << i + 1 << "F)";
        cl = {4, os.str(), OmegaSpec{i, {i + 1, -(i + 1)}}, i, h4};
        break;
      }
  if (cl.case_number == 0) cl.conclusion = "none";
  r.classification = cl;
  return r;
}

}  // namespace

ConditionFamily split_o_conditions(const Scroll& x) {
  ConditionFamily f;
  const int n = x.n(), m = x.m();
  for (int j = 0; j < m; ++j) f.push_back(cond("a", n + j, {0, x.c() - j - 1}, false, n, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j)
      if (i != 0 || j != 0) f.push_back(cond("b", i + j, {0, i - j}, false, i, j));
  return f;
}

ConditionFamily split_ofh_conditions(const Scroll& x) {
  ConditionFamily f;
  const int n = x.n(), m = x.m();
  for (int j = 1; j < m; ++j) f.push_back(cond("a", n + j, {0, x.c() - j - 1}, false, n, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j)
      if (!(i == 0 && (j == 0 || j == m))) f.push_back(cond("b", i + j, {0, i - j}, false, i, j));
  for (int j = 0; j < m; ++j) f.push_back(cond("c", j + 1, {0, -j}, true, -1, j));
  add_d(x, f);
  return f;
}

ConditionFamily rns_split_o_conditions(const Scroll& x) {
  require_rns(x);
  ConditionFamily f;
  const int n = x.n();
  f.push_back(cond("a", n, {0, x.c() - 1}, false, n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= 1; ++j)
      if (i != 0 || j != 0) f.push_back(cond("b", i + j, {0, i - j}, false, i, j));
  return f;
}

ConditionFamily rns_split_ofh_conditions(const Scroll& x) {
  require_rns(x);
  ConditionFamily f;
  for (int i = 1; i < x.n(); ++i)
    for (int j = 0; j <= 1; ++j) f.push_back(cond("b", i + j, {0, i - j}, false, i, j));
  add_d(x, f);
  return f;
}

ConditionFamily indecomposable_conditions(const Scroll& x) {
  ConditionFamily f;
  const int n = x.n(), m = x.m();
  for (int j = 1; j < m; ++j) f.push_back(cond("a", n + j, {-(n + 1), x.c() - j - 1}, false, n, j));
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= m; ++j) {
      // At j = m the first twist is the nonvanishing of cases (iii)/(iv).
      if (j < m) f.push_back(cond("b", i + j, {-(i + 1), i - j}, false, i, j));
      f.push_back(cond("b", i + j, {-(i + 1), i - j + 1}, false, i, j));
    }
  for (int j = 0; j < m; ++j) {
    f.push_back(cond("c", j + 1, {0, -j}, true, -1, j));
    f.push_back(cond("c", j + 1, {-1, -j}, false, -1, j));
  }
  add_indecomposable_de(x, f);
  return f;
}

ConditionFamily rns_indecomposable_conditions(const Scroll& x) {
  require_rns(x);
  ConditionFamily f;
  for (int i = 0; i < x.n(); ++i) f.push_back(cond("b", i + 1, {-(i + 1), i}, false, i, 1));
  add_indecomposable_de(x, f);
  return f;
}

SplittingReport check_thm_splittingO(const Scroll& x, const SheafSpec& e) {
  require_theorem_scroll(x);
  return check_uniform(x, e, Theorem::kSplitO, split_o_conditions(x));
}

SplittingReport check_thm_splittingOfh(const Scroll& x, const SheafSpec& e) {
  require_theorem_scroll(x);
  return check_uniform(x, e, Theorem::kSplitOFH, split_ofh_conditions(x));
}

SplittingReport check_thm_indecomposible(const Scroll& x, const SheafSpec& e) {
  require_theorem_scroll(x);
  return check_fixed(x, e, Theorem::kIndecomposable, indecomposable_conditions(x));
}

SplittingReport check_cor_rns(const Scroll& x, const SheafSpec& e, Theorem which) {
  require_rns(x);
  require_theorem_scroll(x);
  switch (which) {
    case Theorem::kRnsSplitO: return check_uniform(x, e, which, rns_split_o_conditions(x));
    case Theorem::kRnsSplitOFH: return check_uniform(x, e, which, rns_split_ofh_conditions(x));
    case Theorem::kRnsIndecomposable: return check_fixed(x, e, which, rns_indecomposable_conditions(x));
    default: throw PreconditionError("check_cor_rns: not a rational normal scroll corollary");
  }
}

SplittingReport check_theorem(const Scroll& x, const SheafSpec& e, Theorem which) {
  switch (which) {
    case Theorem::kSplitO: return check_thm_splittingO(x, e);
    case Theorem::kSplitOFH: return check_thm_splittingOfh(x, e);
    case Theorem::kIndecomposable: return check_thm_indecomposible(x, e);
    default: return check_cor_rns(x, e, which);
  }
}

GroundTruth ground_truth_classify(const SheafSpec& e) {
  const auto* b = std::get_if<SplitBundle>(&e);
  if (!b) throw PreconditionError("ground_truth_classify: needs a split bundle");
  if (b->summands.empty()) throw PreconditionError("ground_truth_classify: empty bundle");
  GroundTruth g{true, true};
  for (auto d : b->summands) {
    if (d.q != 0) g.pure_h = false;
    if (d.q < -1 || d.q > 1) g.ofh = false;
  }
  return g;
}

}  // namespace scrollreg
