#include "scrollreg/exact_rank.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "scrollreg/integer.hpp"

namespace scrollreg {

namespace {

struct Overflow {};

struct CheckedOps {
  using Int = std::int64_t;
  static Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Int gcd(Int a, Int b) { return std::gcd(a, b); }
  static bool is_zero(const Int& a) { return a == 0; }
  static bool negative(const Int& a) { return a < 0; }
};

struct BigOps {
  using Int = BigInt;
  static Int mul(const Int& a, const Int& b) { return a * b; }
  static Int sub(const Int& a, const Int& b) { return a - b; }
  static Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
  static bool is_zero(const Int& a) { return a.is_zero(); }
  static bool negative(const Int& a) { return a < 0; }
};

template <typename Ops>
class Eliminator {
 public:
  using Int = typename Ops::Int;
  struct Entry {
    std::int32_t col;
    Int value;
  };
  using Row = std::vector<Entry>;

  std::size_t rank(const std::vector<SparseRow>& rows) {
    std::vector<const SparseRow*> order;
    order.reserve(rows.size());
    for (const auto& r : rows) order.push_back(&r);
    // Short rows first keeps fill-in down.
    std::stable_sort(order.begin(), order.end(),
                     [](const SparseRow* a, const SparseRow* b) { return a->size() < b->size(); });
    for (const SparseRow* src : order) {
      Row row;
      row.reserve(src->size());
      for (const auto& e : *src) row.push_back({e.col, Int(e.value)});
      insert(std::move(row));
    }
    return pivots_.size();
  }

 private:
  void normalise(Row& row) {
    Int g = 0;
    for (const auto& e : row) g = Ops::gcd(g, e.value);
    if (Ops::negative(row.front().value)) g = Ops::sub(Int(0), g);
    if (g != Int(1))
      for (auto& e : row) e.value /= g;
  }

  // row := b * row - a * piv, where a, b are the leading coefficients.
  Row combine(const Row& row, const Row& piv) {
    Int a = row.front().value, b = piv.front().value;
    Int g = Ops::gcd(a, b);
    a /= g;
    b /= g;
    Row out;
    out.reserve(row.size() + piv.size());
    std::size_t i = 1, j = 1;
    while (i < row.size() || j < piv.size()) {
      if (j >= piv.size() || (i < row.size() && row[i].col < piv[j].col)) {
        out.push_back({row[i].col, Ops::mul(b, row[i].value)});
        ++i;
      } else if (i >= row.size() || piv[j].col < row[i].col) {
        out.push_back({piv[j].col, Ops::sub(Int(0), Ops::mul(a, piv[j].value))});
        ++j;
      } else {
        Int v = Ops::sub(Ops::mul(b, row[i].value), Ops::mul(a, piv[j].value));
        if (!Ops::is_zero(v)) out.push_back({row[i].col, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  void insert(Row row) {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().col);
      if (it == pivots_.end()) {
        normalise(row);
        pivots_.emplace(row.front().col, std::move(row));
        return;
      }
      row = combine(row, it->second);
      if (!row.empty()) normalise(row);
    }
  }

  std::unordered_map<std::int32_t, Row> pivots_;
};

}  // namespace

SparseRow canonical_row(SparseRow row) {
  std::sort(row.begin(), row.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
  SparseRow out;
  for (const auto& e : row) {
    if (!out.empty() && out.back().col == e.col)
      out.back().value += e.value;
    else
      out.push_back(e);
    if (out.back().value == 0) out.pop_back();
  }
  return out;
}

std::size_t exact_rank(const std::vector<SparseRow>& rows) {
  try {
    return Eliminator<CheckedOps>{}.rank(rows);
  } catch (const Overflow&) {
    return Eliminator<BigOps>{}.rank(rows);
  }
}

}  // namespace scrollreg
