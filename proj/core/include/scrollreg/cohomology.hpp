#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "scrollreg/integer.hpp"
#include "scrollreg/scroll.hpp"

namespace scrollreg {

/// Cohomology dimensions h^0 .. h^{dim X}.
struct CohomTable {
  std::vector<BigInt> h;

  CohomTable() = default;
  explicit CohomTable(int dim) : h(static_cast<std::size_t>(dim) + 1, 0) {}
  CohomTable(std::initializer_list<int> values) {
    for (int v : values) h.emplace_back(v);
  }

  int dim() const noexcept { return static_cast<int>(h.size()) - 1; }
  const BigInt& operator[](int i) const { return h.at(static_cast<std::size_t>(i)); }
  BigInt& operator[](int i) { return h.at(static_cast<std::size_t>(i)); }

  /// h^i, or zero when i is outside 0..dim.
  BigInt at(int i) const;
  bool is_zero() const;
  BigInt euler() const;

  CohomTable& operator+=(const CohomTable& o);
  friend CohomTable operator+(CohomTable a, const CohomTable& b) { return a += b; }
  friend bool operator==(const CohomTable&, const CohomTable&) = default;
};

std::ostream& operator<<(std::ostream& os, const CohomTable& t);

/// A finite direct sum of line bundles O(pH + qF).
struct SplitBundle {
  std::vector<DivClass> summands;

  SplitBundle() = default;
  SplitBundle(std::initializer_list<DivClass> s) : summands(s) {}
  explicit SplitBundle(std::vector<DivClass> s) : summands(std::move(s)) {}

  std::size_t rank() const noexcept { return summands.size(); }
  SplitBundle dual() const;
  SplitBundle twisted(DivClass t) const;

  friend bool operator==(const SplitBundle&, const SplitBundle&) = default;
};

/// (h^0, h^m) of O(d) on P^m.  For m = 0 both numbers land in degree 0 and
/// exactly one of them is 1.
struct ProjectiveCohom {
  BigInt h0;
  BigInt hm;
};
ProjectiveCohom pm_cohom(int m, std::int64_t d);

/// Twists of the summands of Sym^k V, as a sorted multiset of size C(k+n, n).
std::vector<std::int64_t> sym_twists(const Scroll& x, std::int64_t k);

/// h^i(X, O(D)) from the pushforward to P^m.
CohomTable line_cohom(const Scroll& x, DivClass d);

/// Sum of line_cohom over the summands of E(T).
CohomTable bundle_cohom(const Scroll& x, const SplitBundle& e, DivClass twist = {});

BigInt euler_char(const Scroll& x, DivClass d);

/// O(pH + qF) is globally generated iff p >= 0 and p a_0 + q >= 0.
bool is_globally_generated(const Scroll& x, DivClass d);

struct MultRank {
  std::int64_t rank = 0;
  std::int64_t target_dim = 0;
  bool surjective() const noexcept { return rank == target_dim; }
};

/// Rank of the multiplication map on Cox monomial bases.
///
/// by = (0,1): H^0(E) x H^0(O(F)) -> H^0(E(F)).
/// by = (1,0): sum_k H^0(E(a_k F)) -> H^0(E(H)), the k-th summand multiplied by y_k.
MultRank mult_map_rank(const Scroll& x, const SplitBundle& e, DivClass by);

}  // namespace scrollreg
