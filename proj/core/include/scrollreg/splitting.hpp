#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scrollreg/regularity.hpp"
#include "scrollreg/sheaf.hpp"
#include "scrollreg/window.hpp"

namespace scrollreg {

enum class Theorem {
  kSplitO,         // sums of O(tH)
  kSplitOFH,       // sums of O, O(F), O(H-F), each twisted by some tH
  kIndecomposable, // regular indecomposable bundles with Reg = 0
  kRnsSplitO,      // m = 1 forms of the three
  kRnsSplitOFH,
  kRnsIndecomposable,
};

/// "2.1", "2.2", "2.3", "c2.5", "c2.6", "c2.7".
std::string theorem_id(Theorem t);
/// Accepts the ids above and the names split-o, split-ofh, indecomposable,
/// rns-split-o, rns-split-ofh, rns-indecomposable.
std::optional<Theorem> parse_theorem(const std::string& s);

struct SplittingWitness {
  std::string condition;
  std::optional<std::int64_t> t;  // empty for conditions at a fixed twist
  int i = -1;
  int j = -1;
  int subset_size = -1;
  std::int64_t a_I = 0;
  int degree = 0;
  bool dual = false;
  DivClass twist;  // applied to E (or E^vee)
  BigInt h;
};

/// Which case of the regular-indecomposable case split fired.
struct Classification {
  int case_number = 0;  // 1..4
  std::string conclusion;
  SheafSpec bundle;
  int omega_index = -1;  // for case 4
  BigInt h;
};

struct SplittingReport {
  Theorem theorem;
  bool verdict = true;
  std::vector<SplittingWitness> witnesses;
  TInterval window = TInterval::none();
  std::optional<std::int64_t> measured_reg;
  /// Set when a hypothesis on E itself (Reg(E) = 0) does not hold; the
  /// verdict is then false.
  std::optional<std::string> precondition_failure;
  std::optional<Classification> classification;
};

/// The t-uniform condition lists.  `dual` conditions refer to E^vee.
ConditionFamily split_o_conditions(const Scroll& x);
ConditionFamily split_ofh_conditions(const Scroll& x);
ConditionFamily rns_split_o_conditions(const Scroll& x);
ConditionFamily rns_split_ofh_conditions(const Scroll& x);
/// Fixed-twist conditions (evaluated at t = 0).
ConditionFamily indecomposable_conditions(const Scroll& x);
ConditionFamily rns_indecomposable_conditions(const Scroll& x);

SplittingReport check_thm_splittingO(const Scroll& x, const SheafSpec& e);
SplittingReport check_thm_splittingOfh(const Scroll& x, const SheafSpec& e);
SplittingReport check_thm_indecomposible(const Scroll& x, const SheafSpec& e);
/// m = 1 corollaries; throws unless m = 1 and `which` is one of the kRns ids.
SplittingReport check_cor_rns(const Scroll& x, const SheafSpec& e, Theorem which);
SplittingReport check_theorem(const Scroll& x, const SheafSpec& e, Theorem which);

struct GroundTruth {
  bool pure_h = false;  // every summand is O(tH)
  bool ofh = false;     // every summand is O(tH), O(F + tH) or O(H - F + tH)
};

GroundTruth ground_truth_classify(const SheafSpec& e);

}  // namespace scrollreg
