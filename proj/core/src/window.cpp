#include "scrollreg/window.hpp"

#include <algorithm>
#include <sstream>

namespace scrollreg {

TInterval TInterval::closed(std::int64_t a, std::int64_t b) {
  if (a > b) return none();
  return {a, b, false};
}

bool TInterval::contains(std::int64_t t) const noexcept {
  if (empty) return false;
  return (!lo || *lo <= t) && (!hi || t <= *hi);
}

TInterval TInterval::hull(const TInterval& o) const {
  if (empty) return o;
  if (o.empty) return *this;
  TInterval r;
  if (lo && o.lo) r.lo = std::min(*lo, *o.lo);
  if (hi && o.hi) r.hi = std::max(*hi, *o.hi);
  return r;
}

TInterval TInterval::intersect(const TInterval& o) const {
  if (empty || o.empty) return none();
  TInterval r;
  r.lo = !lo ? o.lo : !o.lo ? lo : std::max(*lo, *o.lo);
  r.hi = !hi ? o.hi : !o.hi ? hi : std::min(*hi, *o.hi);
  if (r.lo && r.hi && *r.lo > *r.hi) return none();
  return r;
}

std::string to_string(const TInterval& t) {
  if (t.empty) return "{}";
  std::ostringstream os;
  os << '[' << (t.lo ? std::to_string(*t.lo) : "-inf") << ',' << (t.hi ? std::to_string(*t.hi) : "+inf") << ']';
  return os.str();
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// {t : a t + b >= 0}
TInterval at_least_zero(std::int64_t a, std::int64_t b) {
  if (a == 0) return b >= 0 ? TInterval::all() : TInterval::none();
  if (a > 0) return {-floor_div(b, a), std::nullopt, false};
  return {std::nullopt, floor_div(b, -a), false};
}

TInterval at_least(std::int64_t from) { return {from, std::nullopt, false}; }
TInterval at_most(std::int64_t to) { return {std::nullopt, to, false}; }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Hull of the t where some term summand of the complex can be nonzero in
// the degree feeding total degree k.
TInterval complex_support(const MonomialComplex& c, DivClass shift, int k) {
  TInterval s = TInterval::none();
  for (std::size_t term = 0; term < c.terms.size(); ++term)
    for (const auto& sm : c.terms[term].summands) s = s.hull(line_support(c.scroll, sm.cls + shift, k - c.degree_of(term)));
  return s;
}

TInterval omega_support(const Scroll& x, const OmegaSpec& o, DivClass shift, int k) {
  TInterval res = complex_support(build_omega_resolution(x, o.i), o.twist + shift, k);
  TInterval cores = complex_support(build_omega_coresolution(x, o.i), o.twist + shift, k);
  return res.intersect(cores);
}

}  // namespace

TInterval line_support(const Scroll& x, DivClass d, int k) {
  const int n = x.n(), m = x.m();
  if (k < 0 || k > n + m) return TInterval::none();
  const std::int64_t P = d.p, Q = d.q, a0 = x.a(0), an = x.a(n);
  TInterval out = TInterval::none();

  const TInterval region_a = at_least(-P);
  if (k == 0) out = out.hull(region_a.intersect(m == 0 ? TInterval::all() : at_least_zero(an, an * P + Q)));
  if (k == m && m > 0) out = out.hull(region_a.intersect(at_least_zero(-a0, -(a0 * P + Q) - m - 1)));

  // p < -n with K = -p-n-1 = -t + (-P-n-1) and d' = c-Q-1-m
  const TInterval region_b = at_most(-P - n - 1);
  const std::int64_t k0 = -P - n - 1, dd = x.c() - Q - 1 - m;
  if (k == n + m) out = out.hull(region_b.intersect(m == 0 ? TInterval::all() : at_least_zero(-an, an * k0 + dd)));
  if (k == n && m > 0) out = out.hull(region_b.intersect(at_least_zero(a0, -(a0 * k0 + dd) - m - 1)));
  return out;
}

TInterval condition_support(const Scroll& x, const SheafSpec& e, const TwistCondition& cond) {
  const SheafSpec target = cond.dual ? dual(x, e) : e;
  return std::visit(overloaded{
                        [&](const SplitBundle& b) {
                          TInterval s = TInterval::none();
                          for (auto d : b.summands) s = s.hull(line_support(x, d + cond.offset, cond.degree));
                          return s;
                        },
                        [&](const OmegaSpec& o) { return omega_support(x, o, cond.offset, cond.degree); },
                        [&](const ComplexSpec& c) { return complex_support(*c.complex, cond.offset, cond.degree); },
                    },
                    target);
}

TInterval nonvanishing_window(const Scroll& x, const SheafSpec& e, const ConditionFamily& family) {
  if (!x.positive()) throw PreconditionError("nonvanishing_window: needs a positive scroll (a_0 > 0)");
  check_sheaf(x, e);
  const std::int64_t n = x.n();
  TInterval w = TInterval::none();
  for (const auto& cond : family) {
    w = w.hull(condition_support(x, e, cond));
    const SheafSpec target = cond.dual ? dual(x, e) : e;
    auto band = [&](std::int64_t p) { w = w.hull(TInterval::closed(-n - 1 - p, -p)); };
    std::visit(overloaded{
                   [&](const SplitBundle& b) {
                     for (auto d : b.summands) band(d.p + cond.offset.p);
                   },
                   [&](const OmegaSpec& o) { band(o.twist.p + cond.offset.p); },
                   [&](const ComplexSpec& c) {
                     for (const auto& term : c.complex->terms)
                       for (const auto& sm : term.summands) band(sm.cls.p + cond.offset.p);
                   },
               },
               target);
  }
  return w;
}

BigInt evaluate_condition(const Scroll& x, const SheafSpec& e, const TwistCondition& cond, std::int64_t t) {
  const SheafSpec target = cond.dual ? dual(x, e) : e;
  return sheaf_cohom(x, target, condition_twist(cond, t)).at(cond.degree);
}

}  // namespace scrollreg
