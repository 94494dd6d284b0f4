#include "scrollreg/verify.hpp"

#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "scrollreg/hypercohomology.hpp"
#include "scrollreg/oracle.hpp"
#include "scrollreg/regularity.hpp"
#include "scrollreg/splitting.hpp"

namespace scrollreg {

namespace {

using Counterexample = std::optional<std::string>;

template <typename... Args>
std::string text(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

struct Runner {
  std::string suite;
  std::vector<CheckResult>* out;

  void check(const std::string& name, const std::function<Counterexample()>& body) {
    CheckResult r{suite, name, true, ""};
    try {
      if (auto bad = body()) {
        r.passed = false;
        r.detail = *bad;
      }
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = text("exception: ", e.what());
    }
    out->push_back(std::move(r));
  }
};

std::vector<DivClass> box(std::int64_t r) {
  std::vector<DivClass> v;
  for (std::int64_t p = -r; p <= r; ++p)
    for (std::int64_t q = -r; q <= r; ++q) v.push_back({p, q});
  return v;
}

bool theorem_scroll(const Scroll& x) { return x.positive() && x.m() > 0 && x.n() > 0; }

void closed_form(Runner& run, const std::vector<Scroll>& family) {
  run.check("serre-duality", [&]() -> Counterexample {
    for (const auto& x : family)
      for (auto d : box(5)) {
        auto a = line_cohom(x, d), b = line_cohom(x, serre_dual_twist(x, d));
        for (int i = 0; i <= x.dim(); ++i)
          if (a[i] != b[x.dim() - i]) return text(x, " D=", d);
      }
    return std::nullopt;
  });
  run.check("horrocks-vanishing", [&]() -> Counterexample {
    for (const auto& x : family)
      for (auto d : box(6)) {
        bool upper = d.p >= 0 && d.q >= -x.m();
        bool lower = d.p < -x.n() && d.q < x.c();
        if (!upper && !lower) continue;
        auto t = line_cohom(x, d);
        for (int i = 1; i < x.dim(); ++i)
          if (!t[i].is_zero()) return text(x, " D=", d, " i=", i);
      }
    return std::nullopt;
  });
  run.check("row-support", [&]() -> Counterexample {
    for (const auto& x : family)
      for (auto d : box(5)) {
        auto t = line_cohom(x, d);
        for (int i = 0; i <= x.dim(); ++i)
          if (i != 0 && i != x.m() && i != x.n() && i != x.dim() && !t[i].is_zero()) return text(x, " D=", d);
      }
    return std::nullopt;
  });
  run.check("twist-normalization-invariance", [&]() -> Counterexample {
    for (const auto& x : family)
      for (std::int64_t w : {-1, 1, 2}) {
        auto tn = normalize_twist(x, w);
        for (auto d : box(4))
          if (line_cohom(x, d) != line_cohom(tn.scroll, tn.forward(d))) return text(x, " w=", w, " D=", d);
      }
    return std::nullopt;
  });
  run.check("split-additivity", [&]() -> Counterexample {
    for (const auto& x : family)
      for (auto d : box(3)) {
        DivClass e{1 - d.q, d.p};
        if (bundle_cohom(x, SplitBundle{d, e}) != line_cohom(x, d) + line_cohom(x, e)) return text(x, " ", d, e);
      }
    return std::nullopt;
  });
}

void oracle(Runner& run, const std::vector<Scroll>& family) {
  run.check("oracle-agreement", [&]() -> Counterexample {
    for (const auto& x : family)
      for (auto d : box(5))
        if (line_cohom(x, d) != character_cohom(x, d)) return text(x, " D=", d);
    return std::nullopt;
  });
}

void koszul(Runner& run, const std::vector<Scroll>& family) {
  std::vector<Scroll> xs;
  for (const auto& x : family)
    if (x.n() >= 1 && x.n() <= 2 && x.m() <= 2) xs.push_back(x);
  run.check("complexes-validate", [&]() -> Counterexample {
    for (const auto& x : xs) {
      std::vector<MonomialComplex> cs{build_euler(x), build_exterior(x), build_base_koszul(x), build_spliced_koszul(x)};
      for (int i = 0; i <= x.n(); ++i) {
        cs.push_back(build_omega_resolution(x, i));
        cs.push_back(build_omega_coresolution(x, i));
      }
      for (const auto& c : cs)
        if (auto r = validate_complex(c); !r.ok()) return text(x, " ", r.violations.front().message);
    }
    return std::nullopt;
  });
  run.check("koszul-exactness", [&]() -> Counterexample {
    for (const auto& x : xs)
      for (const auto& c : {build_base_koszul(x), build_exterior(x), build_spliced_koszul(x)})
        if (!hypercohom_full(c).is_zero()) return text(x);
    return std::nullopt;
  });
  run.check("omega-route-agreement", [&]() -> Counterexample {
    for (const auto& x : xs)
      for (int i = 1; i <= x.n(); ++i)
        for (auto t : box(2))
          if (omega_cohom(x, i, t, OmegaRoute::kResolution) != omega_cohom(x, i, t, OmegaRoute::kCoresolution))
            return text(x, " i=", i, " T=", t);
    return std::nullopt;
  });
  run.check("relative-canonical-identity", [&]() -> Counterexample {
    for (const auto& x : xs)
      if (x.n() == 1)
        for (auto t : box(3))
          if (omega_cohom(x, 1, t) != line_cohom(x, t + relative_canonical(x))) return text(x, " T=", t);
    return std::nullopt;
  });
  run.check("omega-duality", [&]() -> Counterexample {
    for (const auto& x : xs)
      for (int i = 0; i <= x.n(); ++i)
        for (auto t : box(2)) {
          auto a = omega_cohom(x, i, t);
          auto b = omega_cohom(x, x.n() - i, DivClass{0, -1 - x.m()} - t);
          for (int k = 0; k <= x.dim(); ++k)
            if (a[k] != b[x.dim() - k]) return text(x, " i=", i, " T=", t);
        }
    return std::nullopt;
  });
  run.check("omega-euler-characteristic", [&]() -> Counterexample {
    for (const auto& x : xs)
      for (int i = 0; i <= x.n(); ++i)
        for (auto t : box(2)) {
          MonomialComplex c = build_omega_resolution(x, i).twisted(t);
          BigInt chi = 0;
          for (std::size_t k = 0; k < c.terms.size(); ++k)
            for (const auto& s : c.terms[k].summands)
              chi += (c.degree_of(k) % 2 == 0 ? 1 : -1) * euler_char(x, s.cls);
          if (omega_cohom(x, i, t).euler() != chi) return text(x, " i=", i, " T=", t);
        }
    return std::nullopt;
  });
}

std::vector<SplitBundle> regular_line_bundles(const Scroll& x) {
  std::vector<SplitBundle> out;
  for (auto d : box(2))
    if (is_pq_regular(x, SplitBundle{d}, 0, 0).verdict) out.push_back(SplitBundle{d});
  return out;
}

void regularity(Runner& run, const std::vector<Scroll>& family) {
  run.check("structure-sheaf-reg-zero", [&]() -> Counterexample {
    for (const auto& x : family) {
      if (!x.positive() || x.n() == 0) continue;
      for (DivClass d : {DivClass{0, 0}, DivClass{0, 1}, DivClass{1, -1}}) {
        SheafSpec e = SplitBundle{d};
        if (reg(x, e).value != std::optional<std::int64_t>(0)) return text(x, " E=O", d);
        if (!is_pq_regular(x, e, 0, 0).verdict || is_pq_regular(x, e, -1, 0).verdict) return text(x, " E=O", d);
      }
    }
    return std::nullopt;
  });
  run.check("hirzebruch-separation", [&]() -> Counterexample {
    Scroll f2(1, 1, {0, 2});
    SheafSpec o = SplitBundle{{0, 0}};
    auto ms = is_ms_regular(f2, o, 0, 0);
    if (!is_pq_regular(f2, o, 0, 0).verdict || ms.verdict) return std::string("verdicts");
    for (const auto& f : ms.failures)
      if (f.twist == DivClass{-2, 0} && f.degree == 2 && f.h == 1) return std::nullopt;
    return std::string("missing h^2(O(-2H)) = 1 witness");
  });
  run.check("ms-implies-pq", [&]() -> Counterexample {
    for (const auto& x : family) {
      if (!x.semipositive()) continue;
      for (DivClass d : {DivClass{0, 0}, DivClass{0, 1}, DivClass{1, -1}, canonical_class(x)}) {
        auto r = compare_regularities(x, SplitBundle{d}, {-2, 2}, {-2, 2});
        if (!r.violations.empty()) return text(x, " E=O", d, " at (", r.violations[0].p, ",", r.violations[0].q, ")");
      }
    }
    return std::nullopt;
  });
  run.check("rns-agreement", [&]() -> Counterexample {
    for (const auto& x : family) {
      if (x.m() != 1) continue;
      for (auto d : box(2))
        for (auto pq : box(1))
          if (is_pq_regular(x, SplitBundle{d}, pq.p, pq.q).verdict != rns_is_pq_regular(x, SplitBundle{d}, pq.p, pq.q).verdict)
            return text(x, " E=O", d, " at ", pq);
    }
    return std::nullopt;
  });
  run.check("positive-twist-vanishing", [&]() -> Counterexample {
    for (const auto& x : family) {
      if (!x.positive()) continue;
      for (const auto& e : regular_line_bundles(x))
        for (int a = 0; a <= 3; ++a)
          for (int b = 0; b <= 3; ++b)
            if (!bundle_cohom(x, e, {a - x.n(), x.c() - 1 - x.m() + b}).at(x.dim()).is_zero())
              return text(x, " E=O", e.summands[0], " a=", a, " b=", b);
    }
    return std::nullopt;
  });
  run.check("spanning-and-monotonicity", [&]() -> Counterexample {
    for (const auto& x : family) {
      if (!x.positive()) continue;
      for (const auto& e : regular_line_bundles(x))
        for (int p = 0; p <= 3; ++p)
          for (int q = 0; q <= 3; ++q)
            if (!is_pq_regular(x, e, p, q).verdict) return text(x, " E=O", e.summands[0], " at (", p, ",", q, ")");
    }
    return std::nullopt;
  });
  run.check("global-generation", [&]() -> Counterexample {
    for (const auto& x : family) {
      if (!x.positive()) continue;
      for (const auto& e : regular_line_bundles(x))
        if (!is_globally_generated(x, e.summands[0])) return text(x, " E=O", e.summands[0]);
    }
    return std::nullopt;
  });
  run.check("multiplication-surjective", [&]() -> Counterexample {
    for (const auto& x : family) {
      if (!x.positive() || x.n() == 0) continue;
      for (const auto& e : regular_line_bundles(x))
        for (DivClass by : {DivClass{0, 1}, DivClass{1, 0}})
          if (!mult_map_rank(x, e, by).surjective()) return text(x, " E=O", e.summands[0], " by ", by);
    }
    return std::nullopt;
  });
}

std::vector<SplitBundle> small_catalog() {
  std::vector<SplitBundle> out;
  auto cls = box(1);
  for (std::size_t a = 0; a < cls.size(); ++a) {
    out.push_back(SplitBundle{cls[a]});
    for (std::size_t b = a; b < cls.size(); ++b) out.push_back(SplitBundle{cls[a], cls[b]});
  }
  return out;
}

void splitting(Runner& run, const std::vector<Scroll>& family) {
  std::vector<Scroll> xs;
  for (const auto& x : family)
    if (theorem_scroll(x) && x.dim() <= 3) xs.push_back(x);
  run.check("split-o-biconditional", [&]() -> Counterexample {
    for (const auto& x : xs)
      for (const auto& e : small_catalog())
        if (check_thm_splittingO(x, e).verdict != ground_truth_classify(e).pure_h) return text(x, " ", describe(e));
    return std::nullopt;
  });
  run.check("split-ofh-biconditional", [&]() -> Counterexample {
    for (const auto& x : xs)
      for (const auto& e : small_catalog())
        if (check_thm_splittingOfh(x, e).verdict != ground_truth_classify(e).ofh) return text(x, " ", describe(e));
    return std::nullopt;
  });
  run.check("witnesses-reevaluate", [&]() -> Counterexample {
    for (const auto& x : xs)
      for (const auto& e : small_catalog())
        for (const auto& w : check_thm_splittingO(x, e).witnesses)
          if (bundle_cohom(x, e, w.twist).at(w.degree) != w.h || w.h.is_zero()) return text(x, " ", describe(e));
    return std::nullopt;
  });
  run.check("window-margins", [&]() -> Counterexample {
    for (const auto& x : xs)
      for (const auto& e : small_catalog()) {
        auto family_o = split_o_conditions(x);
        auto w = nonvanishing_window(x, e, family_o);
        if (w.empty) continue;
        for (const auto& c : family_o)
          for (std::int64_t t : {*w.lo - 1, *w.lo - 2, *w.hi + 1, *w.hi + 2})
            if (!evaluate_condition(x, e, c, t).is_zero()) return text(x, " ", describe(e), " t=", t);
      }
    return std::nullopt;
  });
  run.check("indecomposable-cases", [&]() -> Counterexample {
    for (const auto& x : xs) {
      int expected = 1;
      for (DivClass d : {DivClass{0, 0}, DivClass{0, 1}, DivClass{1, -1}}) {
        auto r = check_thm_indecomposible(x, SplitBundle{d});
        if (!r.verdict || !r.classification || r.classification->case_number != expected)
          return text(x, " E=O", d);
        ++expected;
      }
    }
    return std::nullopt;
  });
  run.check("rns-corollary-agreement", [&]() -> Counterexample {
    for (const auto& x : xs) {
      if (x.m() != 1) continue;
      for (const auto& e : small_catalog()) {
        if (check_cor_rns(x, e, Theorem::kRnsSplitO).verdict != check_thm_splittingO(x, e).verdict ||
            check_cor_rns(x, e, Theorem::kRnsSplitOFH).verdict != check_thm_splittingOfh(x, e).verdict)
          return text(x, " ", describe(e));
      }
    }
    return std::nullopt;
  });
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"closed-form", "oracle", "koszul", "regularity", "splitting"};
  return names;
}

std::vector<Scroll> default_verify_family() {
  return {Scroll(1, 1, {1, 2}), Scroll(1, 1, {0, 2}), Scroll(1, 1, {1, 1}), Scroll(1, 2, {1, 1, 2}),
          Scroll(2, 1, {1, 3}), Scroll(2, 2, {1, 1, 1}), Scroll(0, 2, {0, 0, 0}), Scroll(2, 0, {1})};
}

std::vector<CheckResult> run_verify(const std::string& suite, const std::vector<Scroll>& family) {
  static const std::map<std::string, void (*)(Runner&, const std::vector<Scroll>&)> suites{
      {"closed-form", closed_form}, {"oracle", oracle}, {"koszul", koszul}, {"regularity", regularity}, {"splitting", splitting}};
  std::vector<CheckResult> out;
  for (const auto& name : verify_suites()) {
    if (suite != "all" && suite != name) continue;
    Runner run{name, &out};
    suites.at(name)(run, family);
  }
  if (out.empty()) throw PreconditionError("verify: unknown suite \"" + suite + "\"");
  return out;
}

}  // namespace scrollreg
