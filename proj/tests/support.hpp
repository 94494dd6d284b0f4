#pragma once

#include <vector>

#include "scrollreg/cohomology.hpp"
#include "scrollreg/scroll.hpp"

namespace scrollreg::testing {

inline Scroll S(int m, int n, std::vector<std::int64_t> a) { return make_scroll(m, n, std::move(a)); }

/// Every split bundle with 1..max_rank summands from the box, as sorted multisets.
inline std::vector<SplitBundle> split_catalog(int max_rank, std::int64_t lo, std::int64_t hi) {
  std::vector<DivClass> classes;
  for (std::int64_t p = lo; p <= hi; ++p)
    for (std::int64_t q = lo; q <= hi; ++q) classes.push_back({p, q});
  std::vector<SplitBundle> out;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!pick.empty()) {
      SplitBundle e;
      for (auto k : pick) e.summands.push_back(classes[k]);
      out.push_back(e);
    }
    if (static_cast<int>(pick.size()) == max_rank) return;
    for (std::size_t k = from; k < classes.size(); ++k) {
      pick.push_back(k);
      self(self, k);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace scrollreg::testing
