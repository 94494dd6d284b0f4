#pragma once

#include <memory>
#include <string>
#include <variant>

#include "scrollreg/cohomology.hpp"
#include "scrollreg/complex.hpp"

namespace scrollreg {

/// Omega^i_{X|P^m}(twist).
struct OmegaSpec {
  int i = 0;
  DivClass twist;

  friend bool operator==(const OmegaSpec&, const OmegaSpec&) = default;
};

/// A bundle given as the hypercohomology of a monomial complex; the complex
/// carries its own placement.
struct ComplexSpec {
  std::shared_ptr<const MonomialComplex> complex;

  friend bool operator==(const ComplexSpec& a, const ComplexSpec& b) { return a.complex == b.complex; }
};

using SheafSpec = std::variant<SplitBundle, OmegaSpec, ComplexSpec>;

/// Throws PreconditionError when the spec does not live on x (empty split
/// bundle, omega index out of range, complex on another scroll).
void check_sheaf(const Scroll& x, const SheafSpec& e);

/// h^*(E(T)).
CohomTable sheaf_cohom(const Scroll& x, const SheafSpec& e, DivClass t = {});

/// E^vee.  Split bundles negate their summands; Omega^i(T) becomes
/// Omega^{n-i}(-T + (n+1)H - cF).  Complexes are not dualised.
SheafSpec dual(const Scroll& x, const SheafSpec& e);

SheafSpec twisted(const SheafSpec& e, DivClass t);

std::size_t sheaf_rank(const Scroll& x, const SheafSpec& e);

std::string describe(const SheafSpec& e);

}  // namespace scrollreg
