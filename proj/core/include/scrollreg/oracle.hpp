#pragma once

#include <functional>
#include <vector>

#include "scrollreg/cohomology.hpp"
#include "scrollreg/cox.hpp"
#include "scrollreg/scroll.hpp"

namespace scrollreg {

/// A torus character of a line bundle, written as the exponent vector of the
/// corresponding Cox Laurent monomial.
using Character = CoxExponent;

/// Characters of degree D contributing to H^row(O(D)).
///
/// Row r selects the sign pattern: r = 0 needs alpha, beta >= 0; r = m needs
/// alpha <= -1 and beta >= 0; r = n needs alpha >= 0 and beta <= -1; r = n+m
/// needs both all <= -1.  When two of {0, m, n, n+m} coincide, the row
/// contains the union of the matching patterns.  Listing order is
/// lexicographic in beta, then alpha, within each pattern.
std::vector<Character> enumerate_contributing(const Scroll& x, DivClass d, int row);

/// Same enumeration without materialising the list.
void for_each_contributing(const Scroll& x, DivClass d, int row, const std::function<void(const Character&)>& visit);

/// h^r = number of contributing characters.  Independent of line_cohom.
CohomTable character_cohom(const Scroll& x, DivClass d);

}  // namespace scrollreg
