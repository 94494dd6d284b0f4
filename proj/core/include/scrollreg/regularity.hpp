#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scrollreg/sheaf.hpp"
#include "scrollreg/window.hpp"

namespace scrollreg {

/// One violated vanishing condition: h^degree(E(twist)) = h != 0.
struct RegularityFailure {
  std::string condition;
  int i = -1;
  int j = -1;
  int degree = 0;
  DivClass twist;
  BigInt h;
};

struct RegularityReport {
  DivClass target;
  bool verdict = true;
  std::vector<RegularityFailure> failures;  // ordered lexicographically in (i, j)
};

/// The (p,q)-regularity conditions as a family in t = p, for fixed q:
/// (i, j) with i < n is h^{i+j}(E<t - i, q + i - j>), i = n is
/// h^{n+j}(E<t - n, q + c - j - 1>); (0, 0) excluded.
ConditionFamily regularity_conditions(const Scroll& x, std::int64_t q);

/// The conditions of regularity_conditions specialised to m = 1, listed as
/// three families (a), (b), (c).
ConditionFamily rns_regularity_conditions(const Scroll& x, std::int64_t q);

RegularityReport is_pq_regular(const Scroll& x, const SheafSpec& e, std::int64_t p, std::int64_t q);

/// Same verdict from the m = 1 condition lists.  Throws unless m = 1.
RegularityReport rns_is_pq_regular(const Scroll& x, const SheafSpec& e, std::int64_t p, std::int64_t q);

/// H^{i+j}(E(p,q)<-i,-j>) = 0 for i, j >= 0 with 1 <= i+j <= n+m.
/// Throws unless the scroll is semipositive.
RegularityReport is_ms_regular(const Scroll& x, const SheafSpec& e, std::int64_t p, std::int64_t q);

struct RegResult {
  /// Least p with E (p,0)-regular; nullopt when E is (p,0)-regular for every p.
  std::optional<std::int64_t> value;
  /// True on positive scrolls, where regularity is preserved by +H.
  bool monotonicity_proven = false;
  /// Whether the extra steps below the first failure all failed too.
  bool monotone_in_scan = true;
  /// True when value is the lower end of a user range rather than a failure bound.
  bool bounded_by_range = false;
  /// True when E fails at the top of a user range, so no p in it qualifies.
  bool none_in_range = false;
  std::int64_t scan_lo = 0;
  std::int64_t scan_hi = 0;
  TInterval failure_hull;
};

struct ScanRange {
  std::int64_t lo;
  std::int64_t hi;
};

/// Scans p downward from just above the hull of possible failures.
/// Throws PreconditionError when the hull is unbounded above and no range is
/// given, or when a scan on a non-positive scroll runs past max_steps.
RegResult reg(const Scroll& x, const SheafSpec& e, std::optional<ScanRange> range = std::nullopt,
              std::int64_t max_steps = 4096);

struct ComparisonEntry {
  std::int64_t p;
  std::int64_t q;
  bool ms;
  bool pq;
};

struct ComparisonReport {
  std::vector<ComparisonEntry> entries;  // row-major in (p, q)
  std::vector<ComparisonEntry> violations;   // ms true, pq false
  std::vector<ComparisonEntry> separations;  // ms false, pq true
};

ComparisonReport compare_regularities(const Scroll& x, const SheafSpec& e, ScanRange p_range, ScanRange q_range);

}  // namespace scrollreg
