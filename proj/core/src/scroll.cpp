#include "scrollreg/scroll.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace scrollreg {

std::ostream& operator<<(std::ostream& os, DivClass d) { return os << '(' << d.p << ',' << d.q << ')'; }

Scroll::Scroll(int m, int n, std::vector<std::int64_t> a) : m_(m), n_(n), a_(std::move(a)), c_(0) {
  if (m < 0 || n < 0) throw PreconditionError("scroll dimensions must be nonnegative");
  if (m == 0 && n == 0) throw PreconditionError("degenerate scroll: m = n = 0 is a point");
  if (a_.size() != static_cast<std::size_t>(n) + 1) {
    std::ostringstream msg;
    msg << "dimension mismatch: n = " << n << " needs " << n + 1 << " twists, got " << a_.size();
    throw PreconditionError(msg.str());
  }
  std::sort(a_.begin(), a_.end());
  c_ = std::accumulate(a_.begin(), a_.end(), std::int64_t{0});
}

DivClass Scroll::normalize(DivClass d) const noexcept {
  if (m_ == 0) return {d.p, 0};
  if (n_ == 0) return {0, d.p * c_ + d.q};
  return d;
}

std::int64_t Scroll::a_sum(unsigned mask) const noexcept {
  std::int64_t s = 0;
  for (int i = 0; i <= n_; ++i)
    if (mask & (1u << i)) s += a_[static_cast<std::size_t>(i)];
  return s;
}

std::string Scroll::describe() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scroll& x) {
  os << "Scroll{" << x.m() << ',' << x.n() << ",[";
  for (std::size_t i = 0; i < x.a().size(); ++i) os << (i ? "," : "") << x.a()[i];
  return os << "]}";
}

Scroll make_scroll(int m, int n, std::vector<std::int64_t> a) { return Scroll(m, n, std::move(a)); }

DivClass canonical_class(const Scroll& x) { return x.normalize({-(x.n() + 1), x.c() - 1 - x.m()}); }

DivClass relative_canonical(const Scroll& x) { return x.normalize({-(x.n() + 1), x.c()}); }

DivClass serre_dual_twist(const Scroll& x, DivClass d) { return x.normalize(canonical_class(x) - d); }

TwistNormalization normalize_twist(const Scroll& x, std::int64_t w) {
  std::vector<std::int64_t> a(x.a().begin(), x.a().end());
  for (auto& v : a) v += w;
  return {Scroll(x.m(), x.n(), std::move(a)), w};
}

}  // namespace scrollreg
