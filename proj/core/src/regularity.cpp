#include "scrollreg/regularity.hpp"

#include <algorithm>

namespace scrollreg {

namespace {

TwistCondition make_condition(std::string label, int i, int j, int degree, DivClass offset) {
  TwistCondition c;
  c.label = std::move(label);
  c.i = i;
  c.j = j;
  c.degree = degree;
  c.offset = offset;
  return c;
}

RegularityReport evaluate(const Scroll& x, const SheafSpec& e, const ConditionFamily& family, std::int64_t p,
                          std::int64_t q) {
  check_sheaf(x, e);
  RegularityReport r;
  r.target = {p, q};
  for (const auto& cond : family) {
    BigInt h = evaluate_condition(x, e, cond, p);
    if (!h.is_zero()) r.failures.push_back({cond.label, cond.i, cond.j, cond.degree, condition_twist(cond, p), h});
  }
  std::stable_sort(r.failures.begin(), r.failures.end(), [](const RegularityFailure& a, const RegularityFailure& b) {
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  });
  r.verdict = r.failures.empty();
  return r;
}

}  // namespace

ConditionFamily regularity_conditions(const Scroll& x, std::int64_t q) {
  ConditionFamily f;
  const int n = x.n(), m = x.m();
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= m; ++j) {
      if (i == 0 && j == 0) continue;
      if (i < n)
        f.push_back(make_condition("b", i, j, i + j, {-i, q + i - j}));
      else
        f.push_back(make_condition("a", i, j, n + j, {-n, q + x.c() - j - 1}));
    }
  return f;
}

ConditionFamily rns_regularity_conditions(const Scroll& x, std::int64_t q) {
  if (x.m() != 1) throw PreconditionError("rational normal scroll conditions need m = 1");
  const int n = x.n();
  ConditionFamily f;
  f.push_back(make_condition("a", n, 1, n + 1, {-n, q + x.c() - 2}));
  if (n > 0) f.push_back(make_condition("a", n, 0, n, {-n, q + x.c() - 1}));
  for (int i = 0; i < n; ++i) f.push_back(make_condition("b", i, 1, i + 1, {-i, q + i - 1}));
  for (int i = 1; i < n; ++i) f.push_back(make_condition("c", i, 0, i, {-i, q + i}));
  return f;
}

RegularityReport is_pq_regular(const Scroll& x, const SheafSpec& e, std::int64_t p, std::int64_t q) {
  return evaluate(x, e, regularity_conditions(x, q), p, q);
}

RegularityReport rns_is_pq_regular(const Scroll& x, const SheafSpec& e, std::int64_t p, std::int64_t q) {
  return evaluate(x, e, rns_regularity_conditions(x, q), p, q);
}

RegularityReport is_ms_regular(const Scroll& x, const SheafSpec& e, std::int64_t p, std::int64_t q) {
  if (!x.semipositive()) throw PreconditionError("multigraded regularity needs a semipositive scroll (a_0 >= 0)");
  ConditionFamily f;
  for (int i = 0; i <= x.dim(); ++i)
    for (int j = 0; i + j <= x.dim(); ++j)
      if (i + j >= 1) f.push_back(make_condition("ms", i, j, i + j, {-i, q - j}));
  return evaluate(x, e, f, p, q);
}

RegResult reg(const Scroll& x, const SheafSpec& e, std::optional<ScanRange> range, std::int64_t max_steps) {
  check_sheaf(x, e);
  const ConditionFamily family = regularity_conditions(x, 0);
  RegResult r;
  r.monotonicity_proven = x.positive();
  r.failure_hull = TInterval::none();
  for (const auto& cond : family) r.failure_hull = r.failure_hull.hull(condition_support(x, e, cond));

  auto regular = [&](std::int64_t p) {
    for (const auto& cond : family)
      if (!evaluate_condition(x, e, cond, p).is_zero()) return false;
    return true;
  };

  std::int64_t lo_stop;
  bool has_lo;
  if (range) {
    if (range->lo > range->hi) throw PreconditionError("reg: empty scan range");
    r.scan_hi = range->hi;
    lo_stop = range->lo;
    has_lo = true;
  } else {
    if (r.failure_hull.empty) {
      r.scan_lo = r.scan_hi = 0;
      return r;
    }
    if (!r.failure_hull.hi)
      throw PreconditionError("reg: possible failures are unbounded above; pass an explicit scan range");
    r.scan_hi = *r.failure_hull.hi + 1;
    has_lo = r.failure_hull.lo.has_value();
    lo_stop = has_lo ? *r.failure_hull.lo - 1 : 0;
  }

  std::int64_t steps = 0;
  for (std::int64_t p = r.scan_hi;; --p) {
    if (has_lo && p < lo_stop) {
      r.scan_lo = lo_stop;
      if (range) {
        r.value = range->lo;
        r.bounded_by_range = true;
      }
      return r;
    }
    if (++steps > max_steps) {
      if (!x.positive()) throw PreconditionError("reg: scan exceeded the step limit on a non-positive scroll");
      throw Error("reg: scan exceeded the step limit");
    }
    if (!regular(p)) {
      if (range && p == range->hi) {
        r.none_in_range = true;
        r.scan_lo = p;
        return r;
      }
      r.value = p + 1;
      r.scan_lo = p;
      for (std::int64_t below = p - 1; below >= p - 2; --below) {
        if (has_lo && below < lo_stop) break;
        r.scan_lo = below;
        if (regular(below)) r.monotone_in_scan = false;
      }
      return r;
    }
  }
}

ComparisonReport compare_regularities(const Scroll& x, const SheafSpec& e, ScanRange p_range, ScanRange q_range) {
  ComparisonReport r;
  for (std::int64_t p = p_range.lo; p <= p_range.hi; ++p)
    for (std::int64_t q = q_range.lo; q <= q_range.hi; ++q) {
      ComparisonEntry entry{p, q, is_ms_regular(x, e, p, q).verdict, is_pq_regular(x, e, p, q).verdict};
      r.entries.push_back(entry);
      if (entry.ms && !entry.pq) r.violations.push_back(entry);
      if (!entry.ms && entry.pq) r.separations.push_back(entry);
    }
  return r;
}

}  // namespace scrollreg
