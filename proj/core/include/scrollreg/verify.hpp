#pragma once

#include <string>
#include <vector>

#include "scrollreg/scroll.hpp"

namespace scrollreg {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// "closed-form", "oracle", "koszul", "regularity", "splitting".
const std::vector<std::string>& verify_suites();

/// Scrolls used when no family is given: positive and semipositive members
/// with m, n up to 2, plus P^2 and P^2 seen as a scroll over a point.
std::vector<Scroll> default_verify_family();

/// Runs one suite ("all" runs every suite) over the family.  Each property
/// yields one CheckResult; detail names the first counterexample.
std::vector<CheckResult> run_verify(const std::string& suite, const std::vector<Scroll>& family);

}  // namespace scrollreg
