#include <doctest.h>

#include "scrollreg/scroll.hpp"
#include "support.hpp"

using namespace scrollreg;
using scrollreg::testing::S;

TEST_CASE("make_scroll sorts twists and sums them") {
  Scroll x = S(1, 1, {2, 1});
  CHECK(x.m() == 1);
  CHECK(x.n() == 1);
  CHECK(x.a(0) == 1);
  CHECK(x.a(1) == 2);
  CHECK(x.c() == 3);
  CHECK(x.positive());

  Scroll f2 = S(1, 1, {0, 2});
  CHECK(f2.c() == 2);
  CHECK(f2.semipositive());
  CHECK_FALSE(f2.positive());

  Scroll p2 = S(0, 2, {0, 0, 0});
  CHECK(p2.dim() == 2);
}

TEST_CASE("make_scroll rejects bad input") {
  CHECK_THROWS_AS(S(1, 1, {1}), PreconditionError);
  CHECK_THROWS_AS(S(0, 0, {1}), PreconditionError);
  CHECK_THROWS_AS(S(-1, 1, {1, 1}), PreconditionError);
}

TEST_CASE("canonical classes") {
  CHECK(canonical_class(S(1, 1, {1, 2})) == DivClass{-2, 1});
  CHECK(canonical_class(S(1, 1, {0, 2})) == DivClass{-2, 0});
  CHECK(canonical_class(S(2, 2, {1, 1, 1})) == DivClass{-3, 0});

  CHECK(relative_canonical(S(1, 1, {1, 1})) == DivClass{-2, 2});
  CHECK(relative_canonical(S(1, 2, {1, 1, 2})) == DivClass{-3, 4});
  CHECK(relative_canonical(S(2, 1, {1, 3})) == DivClass{-2, 4});
}

TEST_CASE("serre dual twist") {
  Scroll x = S(1, 1, {1, 2});
  CHECK(serre_dual_twist(x, {0, 0}) == DivClass{-2, 1});
  CHECK(serre_dual_twist(x, {-2, 1}) == DivClass{0, 0});
  CHECK(serre_dual_twist(S(2, 2, {1, 1, 1}), {1, -1}) == DivClass{-4, 1});
}

TEST_CASE("normalize_twist") {
  auto t = normalize_twist(S(1, 1, {0, 2}), 1);
  CHECK(t.scroll == S(1, 1, {1, 3}));
  CHECK(t.scroll.c() == 4);
  CHECK(t.forward({1, 0}) == DivClass{1, -1});
  CHECK(t.inverse(t.forward({3, -5})) == DivClass{3, -5});

  auto id = normalize_twist(S(1, 1, {1, 2}), 0);
  CHECK(id.scroll == S(1, 1, {1, 2}));
  CHECK(id.forward({2, 3}) == DivClass{2, 3});
}

TEST_CASE("degenerate scrolls normalize classes") {
  Scroll pn = S(0, 2, {0, 0, 0});
  CHECK(pn.normalize({3, 7}) == DivClass{3, 0});
  Scroll pm = S(2, 0, {2});
  CHECK(pm.normalize({1, -1}) == DivClass{0, 1});
  CHECK(canonical_class(pn) == DivClass{-3, 0});
  CHECK(canonical_class(pm) == DivClass{0, -3});
}
