#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "scrollreg/scroll.hpp"

namespace scrollreg {

/// Exponent vector of a Cox Laurent monomial x^alpha y^beta.  The x variables
/// have degree F, y_j has degree H - a_j F.
struct CoxExponent {
  std::vector<std::int64_t> alpha;  // length m+1
  std::vector<std::int64_t> beta;   // length n+1

  friend auto operator<=>(const CoxExponent&, const CoxExponent&) = default;
};

/// Picard degree (|beta|, |alpha| - sum a_j beta_j).
DivClass cox_degree(const Scroll& x, const CoxExponent& e);

/// Visits every v in N^parts with |v| = total in lexicographic order.
/// Nothing is visited when total < 0 or parts == 0 (unless total == 0).
void for_each_weak_composition(std::int64_t total, int parts,
                               const std::function<void(std::span<const std::int64_t>)>& visit);

/// Number of weak compositions, C(total + parts - 1, parts - 1), as a machine integer.
std::int64_t weak_composition_count(std::int64_t total, int parts);

/// Monomial basis of H^0(X, O(D)): nonnegative exponents of degree D, ordered
/// lexicographically by beta, then alpha.
std::vector<CoxExponent> section_monomials(const Scroll& x, DivClass d);

}  // namespace scrollreg
