#include <doctest.h>

#include <algorithm>

#include "scrollreg/hypercohomology.hpp"
#include "scrollreg/sheaf.hpp"
#include "scrollreg/splitting.hpp"
#include "support.hpp"

using namespace scrollreg;
using scrollreg::testing::S;

namespace {

BigInt reevaluate(const Scroll& x, const SheafSpec& e, const SplittingWitness& w) {
  SheafSpec target = w.dual ? dual(x, e) : e;
  return sheaf_cohom(x, target, w.twist).at(w.degree);
}

}  // namespace

TEST_CASE("ground truth classification") {
  CHECK(ground_truth_classify(SplitBundle{{0, 0}, {2, 0}}).pure_h);
  auto g = ground_truth_classify(SplitBundle{{0, 1}, {1, -1}, {3, 0}});
  CHECK(g.ofh);
  CHECK_FALSE(g.pure_h);
  auto n = ground_truth_classify(SplitBundle{{0, 2}});
  CHECK_FALSE(n.ofh);
  CHECK_FALSE(n.pure_h);
  CHECK_THROWS_AS(ground_truth_classify(OmegaSpec{1, {0, 0}}), PreconditionError);
}

TEST_CASE("split-O criterion examples") {
  Scroll x = S(1, 1, {1, 2});
  CHECK(check_thm_splittingO(x, SplitBundle{{0, 0}, {2, 0}}).verdict);

  SheafSpec e = SplitBundle{{0, 1}};
  SplittingReport r = check_thm_splittingO(x, e);
  CHECK_FALSE(r.verdict);
  bool found = std::any_of(r.witnesses.begin(), r.witnesses.end(), [](const SplittingWitness& w) {
    return w.condition == "a" && w.t == -2 && w.j == 0 && w.twist == DivClass{-2, 2} && w.h == 1 && w.degree == 1;
  });
  CHECK(found);
  CHECK(r.window.contains(-2));
  for (const auto& w : r.witnesses) CHECK(reevaluate(x, e, w) == w.h);

  SplittingReport o = check_thm_splittingO(x, SplitBundle{{0, 0}});
  CHECK(o.window.contains(0));
  CHECK(o.window.contains(-2));
}

TEST_CASE("split-O rejects a twisted relative cotangent bundle") {
  Scroll x = S(1, 3, {1, 1, 1, 1});
  SheafSpec e = OmegaSpec{1, {2, -2}};
  SplittingReport r = check_thm_splittingO(x, e);
  CHECK_FALSE(r.verdict);
  REQUIRE_FALSE(r.witnesses.empty());
  for (const auto& w : r.witnesses) CHECK(reevaluate(x, e, w) != 0);
}

TEST_CASE("split-OFH criterion examples") {
  Scroll x = S(1, 1, {1, 2});
  CHECK(check_thm_splittingOfh(x, SplitBundle{{0, 0}, {0, 1}, {1, -1}}).verdict);
  SplittingReport r = check_thm_splittingOfh(x, SplitBundle{{0, 2}});
  CHECK_FALSE(r.verdict);
  CHECK_FALSE(r.witnesses.empty());
  CHECK(check_thm_splittingOfh(x, SplitBundle{{1, 0}, {0, 0}}).verdict);
}

TEST_CASE("split criteria match ground truth on a small catalog") {
  for (const Scroll& x : {S(1, 1, {1, 2}), S(2, 1, {1, 3})})
    for (const auto& e : scrollreg::testing::split_catalog(2, -2, 2)) {
      auto g = ground_truth_classify(e);
      CAPTURE(x);
      CAPTURE(describe(e));
      SplittingReport o = check_thm_splittingO(x, e);
      CHECK(o.verdict == g.pure_h);
      CHECK(check_thm_splittingOfh(x, e).verdict == g.ofh);
      for (const auto& w : o.witnesses) CHECK(reevaluate(x, e, w) == w.h);
    }
}

TEST_CASE("window margins vanish") {
  Scroll x = S(1, 2, {1, 1, 2});
  for (const auto& e : scrollreg::testing::split_catalog(2, -1, 1))
    for (const auto& family : {split_o_conditions(x), split_ofh_conditions(x)}) {
      TInterval w = nonvanishing_window(x, e, family);
      REQUIRE(w.bounded());
      if (w.empty) continue;
      for (const auto& cond : family)
        for (std::int64_t t : {*w.lo - 3, *w.lo - 2, *w.lo - 1, *w.hi + 1, *w.hi + 2, *w.hi + 3})
          CHECK(evaluate_condition(x, e, cond, t) == 0);
    }
}

TEST_CASE("regular-indecomposable case analysis") {
  Scroll x = S(1, 1, {1, 2});
  struct Case {
    SplitBundle e;
    int number;
  };
  for (const auto& c : {Case{{{0, 0}}, 1}, Case{{{0, 1}}, 2}, Case{{{1, -1}}, 3}}) {
    SplittingReport r = check_thm_indecomposible(x, c.e);
    CAPTURE(describe(c.e));
    CHECK(r.verdict);
    CHECK(r.measured_reg == 0);
    REQUIRE(r.classification);
    CHECK(r.classification->case_number == c.number);
    CHECK(std::get<SplitBundle>(r.classification->bundle) == c.e);
    CHECK(r.classification->h != 0);
  }
}

TEST_CASE("regular-indecomposable: twisted top relative form on a 4-fold") {
  Scroll x = S(1, 3, {1, 1, 1, 1});
  SheafSpec e = OmegaSpec{2, {3, -3}};
  SplittingReport r = check_thm_indecomposible(x, e);
  CHECK(r.measured_reg == 0);
  CHECK_FALSE(r.precondition_failure);
  CHECK(r.verdict);
  REQUIRE(r.classification);
  CHECK(r.classification->case_number == 4);
  CHECK(r.classification->omega_index == 2);
  const auto& spec = std::get<OmegaSpec>(r.classification->bundle);
  CHECK(spec.i == 2);
  CHECK(spec.twist == DivClass{3, -3});
}

TEST_CASE("regular-indecomposable reports a failed Reg precondition") {
  SplittingReport r = check_thm_indecomposible(S(1, 1, {1, 2}), SplitBundle{{-1, 0}});
  CHECK_FALSE(r.verdict);
  CHECK(r.precondition_failure);
  CHECK(r.measured_reg == 1);
}

TEST_CASE("regular-indecomposable conclusions are summands of split bundles") {
  for (const Scroll& x : {S(1, 1, {1, 2}), S(1, 2, {1, 1, 2})})
    for (const auto& e : scrollreg::testing::split_catalog(2, -2, 2)) {
      SplittingReport r = check_thm_indecomposible(x, e);
      if (!r.verdict) continue;
      REQUIRE(r.classification);
      CAPTURE(describe(e));
      const auto& b = std::get<SplitBundle>(r.classification->bundle);
      REQUIRE(b.summands.size() == 1);
      CHECK(std::find(e.summands.begin(), e.summands.end(), b.summands[0]) != e.summands.end());
    }
}

TEST_CASE("rational normal scroll corollaries") {
  Scroll x = S(1, 2, {1, 1, 2});
  CHECK(check_cor_rns(x, SplitBundle{{0, 0}, {3, 0}}, Theorem::kRnsSplitO).verdict);
  CHECK_FALSE(check_cor_rns(x, SplitBundle{{1, -1}}, Theorem::kRnsSplitO).verdict);
  CHECK(check_cor_rns(x, SplitBundle{{1, -1}}, Theorem::kRnsSplitOFH).verdict);
  CHECK_THROWS_AS(check_cor_rns(S(2, 1, {1, 3}), SplitBundle{{0, 0}}, Theorem::kRnsSplitO), PreconditionError);
  CHECK_THROWS_AS(check_cor_rns(x, SplitBundle{{0, 0}}, Theorem::kSplitO), PreconditionError);

  for (const auto& e : scrollreg::testing::split_catalog(2, -2, 2)) {
    CHECK(check_cor_rns(x, e, Theorem::kRnsSplitO).verdict == check_thm_splittingO(x, e).verdict);
    CHECK(check_cor_rns(x, e, Theorem::kRnsSplitOFH).verdict == check_thm_splittingOfh(x, e).verdict);
    CHECK(check_cor_rns(x, e, Theorem::kRnsIndecomposable).verdict == check_thm_indecomposible(x, e).verdict);
  }
}

TEST_CASE("theorem ids") {
  for (auto t : {Theorem::kSplitO, Theorem::kSplitOFH, Theorem::kIndecomposable, Theorem::kRnsSplitO,
                 Theorem::kRnsSplitOFH, Theorem::kRnsIndecomposable})
    CHECK(parse_theorem(theorem_id(t)) == t);
  CHECK(parse_theorem("split-ofh") == Theorem::kSplitOFH);
  CHECK_FALSE(parse_theorem("2.4"));
}
