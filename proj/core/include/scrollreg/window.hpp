#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scrollreg/sheaf.hpp"

namespace scrollreg {

/// The vanishing condition h^degree(E'(tH + offset)) = 0, with E' = E or E^vee.
/// i, j and subset_size carry index data for reports (-1 when unused).
struct TwistCondition {
  std::string label;
  int degree = 0;
  DivClass offset;
  bool dual = false;
  int i = -1;
  int j = -1;
  int subset_size = -1;
  std::int64_t a_I = 0;
};

using ConditionFamily = std::vector<TwistCondition>;

/// A set of integers lo..hi; a missing end is unbounded.
struct TInterval {
  std::optional<std::int64_t> lo;
  std::optional<std::int64_t> hi;
  bool empty = false;

  static TInterval none() { return {std::nullopt, std::nullopt, true}; }
  static TInterval all() { return {}; }
  static TInterval closed(std::int64_t a, std::int64_t b);

  bool bounded() const noexcept { return empty || (lo && hi); }
  bool contains(std::int64_t t) const noexcept;
  TInterval hull(const TInterval& o) const;
  TInterval intersect(const TInterval& o) const;
  friend bool operator==(const TInterval&, const TInterval&) = default;
};

std::string to_string(const TInterval& t);

/// Exact hull of {t : h^k(O(D + tH)) != 0}.
TInterval line_support(const Scroll& x, DivClass d, int k);

/// A hull of the t for which the condition can fail.  Exact per line bundle;
/// for Omega specs the hulls of both resolutions are intersected, each term
/// contributing at its shifted degree.
TInterval condition_support(const Scroll& x, const SheafSpec& e, const TwistCondition& cond);

/// Hull of condition_support over the family, widened by the band
/// [-n-1-P, -P] around each summand's H-coefficient P.  Requires a positive
/// scroll.
TInterval nonvanishing_window(const Scroll& x, const SheafSpec& e, const ConditionFamily& family);

/// h^degree of the condition at t.
BigInt evaluate_condition(const Scroll& x, const SheafSpec& e, const TwistCondition& cond, std::int64_t t);

/// The twist applied to E (or E^vee) at t.
inline DivClass condition_twist(const TwistCondition& cond, std::int64_t t) { return DivClass{t, 0} + cond.offset; }

}  // namespace scrollreg
