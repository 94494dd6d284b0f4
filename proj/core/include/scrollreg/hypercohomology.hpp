#pragma once

#include <vector>

#include "scrollreg/cohomology.hpp"
#include "scrollreg/complex.hpp"

namespace scrollreg {

/// Hypercohomology dimensions in total degrees min_degree, min_degree+1, ...
struct HyperTable {
  int min_degree = 0;
  std::vector<BigInt> h;

  BigInt at(int degree) const;
  bool is_zero() const;
  HyperTable& operator+=(const HyperTable& o);
  friend bool operator==(const HyperTable&, const HyperTable&) = default;
};

/// Torus characters w (as exponent shifts with cox_degree(w) = 0) for which
/// some summand s has a contributing character rep_s + w.
std::vector<CoxExponent> contributing_classes(const MonomialComplex& c);

/// Hypercohomology of the character-w part of c, from the full Cech total
/// complex over the charts {x_i y_j != 0}.
HyperTable class_hypercohom(const MonomialComplex& c, const CoxExponent& w);

/// Hypercohomology of c, summed over contributing_classes.  Characters
/// outside that set contribute nothing: every summand's Cech column is
/// acyclic for them.
HyperTable hypercohom_full(const MonomialComplex& c);

/// hypercohom_full as a table in degrees 0..dim X.  Throws Error if a degree
/// outside that range is nonzero.
CohomTable hypercohom(const MonomialComplex& c);

enum class OmegaRoute { kAuto, kResolution, kCoresolution };

/// h^*(Omega^i_{X|P^m}(T)).  kAuto picks the route with fewer summands and is
/// cached process-wide.
CohomTable omega_cohom(const Scroll& x, int i, DivClass t, OmegaRoute route = OmegaRoute::kAuto);

}  // namespace scrollreg
