#include <doctest.h>

#include "scrollreg/cohomology.hpp"
#include "scrollreg/oracle.hpp"
#include "support.hpp"

using namespace scrollreg;
using scrollreg::testing::S;

TEST_CASE("enumerate_contributing examples") {
  auto one = enumerate_contributing(S(1, 1, {1, 2}), {0, 0}, 0);
  REQUIRE(one.size() == 1);
  CHECK(one[0].alpha == std::vector<std::int64_t>{0, 0});
  CHECK(one[0].beta == std::vector<std::int64_t>{0, 0});

  auto top = enumerate_contributing(S(1, 1, {0, 2}), {-2, 0}, 2);
  REQUIRE(top.size() == 1);
  CHECK(top[0].beta == std::vector<std::int64_t>{-1, -1});
  CHECK(top[0].alpha == std::vector<std::int64_t>{-1, -1});

  for (int row : {0, 1, 2}) CHECK(enumerate_contributing(S(1, 1, {1, 2}), {-1, 5}, row).empty());
}

TEST_CASE("enumerate_contributing rejects rows outside the pattern set") {
  CHECK_THROWS_AS(enumerate_contributing(S(2, 3, {1, 1, 1, 1}), {0, 0}, 1), PreconditionError);
}

TEST_CASE("characters have the requested degree and sign pattern") {
  Scroll x = S(1, 2, {1, 1, 2});
  DivClass d{-4, 3};
  for (int row : {0, 1, 2, 3})
    for (const auto& ch : enumerate_contributing(x, d, row)) {
      CHECK(cox_degree(x, ch) == d);
      bool xneg = ch.alpha[0] < 0;
      bool yneg = ch.beta[0] < 0;
      for (auto v : ch.alpha) CHECK((v < 0) == xneg);
      for (auto v : ch.beta) CHECK((v < 0) == yneg);
      CHECK((xneg ? x.m() : 0) + (yneg ? x.n() : 0) == row);
    }
}

TEST_CASE("character_cohom examples") {
  Scroll x = S(1, 1, {1, 2});
  CHECK(character_cohom(x, {0, 0}) == CohomTable{1, 0, 0});
  CHECK(character_cohom(x, {-2, 1}) == CohomTable{0, 0, 1});
  CHECK(character_cohom(x, {0, -2}) == CohomTable{0, 1, 0});
}

TEST_CASE("row counts sum to character_cohom") {
  Scroll x = S(2, 1, {1, 3});
  for (std::int64_t p = -3; p <= 2; ++p)
    for (std::int64_t q = -4; q <= 3; ++q) {
      CohomTable t = character_cohom(x, {p, q});
      CohomTable rows(x.dim());
      for (int row : {0, 1, 2, 3}) rows[row] += enumerate_contributing(x, {p, q}, row).size();
      CHECK(t == rows);
    }
}
