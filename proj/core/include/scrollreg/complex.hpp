#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "scrollreg/cox.hpp"
#include "scrollreg/scroll.hpp"

namespace scrollreg {

/// One line bundle summand of a complex term, together with a torus-invariant
/// divisor representing it.  The representative pins down which Cox Laurent
/// monomials of the summand share a torus character with those of other
/// summands.
struct ComplexSummand {
  DivClass cls;
  CoxExponent rep;

  friend bool operator==(const ComplexSummand&, const ComplexSummand&) = default;
};

/// A nonzero differential entry: sign * (Cox monomial) from a summand of term
/// k to a summand of term k+1.
struct ComplexEntry {
  std::size_t source;
  std::size_t target;
  int sign;
  CoxExponent mono;

  friend bool operator==(const ComplexEntry&, const ComplexEntry&) = default;
};

struct ComplexTerm {
  std::vector<ComplexSummand> summands;
};

/// A bounded complex of sums of line bundles with monomial differentials.
/// Term k sits in cohomological degree start_degree + k; differentials[k]
/// maps term k to term k+1.
struct MonomialComplex {
  Scroll scroll;
  int start_degree = 0;
  std::vector<ComplexTerm> terms;
  std::vector<std::vector<ComplexEntry>> differentials;

  int degree_of(std::size_t term) const { return start_degree + static_cast<int>(term); }
  std::size_t summand_count() const;

  /// Tensor with O(T).  Representatives shift by the canonical one of T,
  /// monomials are unchanged.
  MonomialComplex twisted(DivClass t) const;
  /// Shift the cohomological placement.
  MonomialComplex placed_at(int start) const;
};

/// T = pH + qF is represented by p D_{y_0} + (q + p a_0) D_{x_0}.
CoxExponent canonical_representative(const Scroll& x, DivClass t);

/// 0 -> Omega^1(H) -> sum O(a_i F) -> O(H) -> 0, kept as its two right terms
/// [sum O(a_i F) -> O(H)] with differential (y_0 ... y_n); the sum sits in
/// degree 0, so the complex computes the cohomology of Omega^1(H).
MonomialComplex build_euler(const Scroll& x);

/// The exact Koszul complex on y_0..y_n twisted by H:
/// O(-n, c) -> ... -> sum_{|I|=r} O(1-r, a_I) -> ... -> O(H).
MonomialComplex build_exterior(const Scroll& x);

/// Left resolution of Omega^i_{X|P^m}:
/// O(-(n+1), c) -> ... -> sum_{|I|=i+1} O(-(i+1), a_I), last term in degree 0.
MonomialComplex build_omega_resolution(const Scroll& x, int i);

/// Right resolution of Omega^i_{X|P^m}:
/// sum_{|I|=i} O(-i, a_I) -> ... -> sum_{|I|=1} O(-1, a_I) -> O, first term in degree 0.
MonomialComplex build_omega_coresolution(const Scroll& x, int i);

/// Koszul complex on x_0..x_m twisted by F:
/// O(-mF) -> O(-(m-1)F)^{C(m+1,m)} -> ... -> O^{m+1} -> O(F).  Exact.
MonomialComplex build_base_koszul(const Scroll& x);

/// The x-Koszul complex twisted by (-n, c) spliced onto build_exterior:
/// O(-n, c-m-1) -> ... -> O(-n, c-1)^{m+1} -> sum O(-(n-1), c-a_i) -> ... -> O(H).  Exact.
MonomialComplex build_spliced_koszul(const Scroll& x);

struct ComplexViolation {
  enum class Kind { kIndex, kSign, kRepresentativeClass, kDegree, kRepresentative, kNegativeExponent, kSquare };
  Kind kind;
  std::size_t term;   // term (or differential) index
  std::size_t entry;  // entry or summand index; for kSquare the source summand
  std::string message;
};

struct ValidationReport {
  std::vector<ComplexViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks representative classes, monomial degrees, representative
/// compatibility of every entry, and d o d = 0 with sign cancellation.
ValidationReport validate_complex(const MonomialComplex& c);

const char* to_string(ComplexViolation::Kind k);

}  // namespace scrollreg
