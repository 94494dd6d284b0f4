#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace scrollreg {

/// Base class of every exception thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
struct PreconditionError : Error {
  using Error::Error;
};

/// A Picard class pH + qF.  H is the relative hyperplane class, F the pullback
/// of the hyperplane class of the base.
struct DivClass {
  std::int64_t p = 0;
  std::int64_t q = 0;

  friend constexpr DivClass operator+(DivClass a, DivClass b) { return {a.p + b.p, a.q + b.q}; }
  friend constexpr DivClass operator-(DivClass a, DivClass b) { return {a.p - b.p, a.q - b.q}; }
  friend constexpr DivClass operator-(DivClass a) { return {-a.p, -a.q}; }
  constexpr DivClass& operator+=(DivClass b) {
    p += b.p;
    q += b.q;
    return *this;
  }
  friend constexpr auto operator<=>(const DivClass&, const DivClass&) = default;
};

std::ostream& operator<<(std::ostream& os, DivClass d);

/// The scroll X = P(O(a_0) + ... + O(a_n)) over P^m.
///
/// Twists are stored sorted ascending.  The scroll is immutable; all accessors
/// are cheap.
class Scroll {
 public:
  /// Throws PreconditionError on a length mismatch or when m = n = 0.
  Scroll(int m, int n, std::vector<std::int64_t> a);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int dim() const noexcept { return m_ + n_; }
  std::span<const std::int64_t> a() const noexcept { return a_; }
  std::int64_t a(int i) const { return a_.at(static_cast<std::size_t>(i)); }
  std::int64_t c() const noexcept { return c_; }

  bool positive() const noexcept { return a_.front() > 0; }
  bool semipositive() const noexcept { return a_.front() >= 0; }

  /// Canonical representative of a class: q is dropped on P^n (m = 0) and the
  /// class is rewritten as (0, pc + q) on P^m (n = 0, where H = cF).
  DivClass normalize(DivClass d) const noexcept;

  /// Sum a_I over an index subset given as a bit mask over {0..n}.
  std::int64_t a_sum(unsigned mask) const noexcept;

  std::string describe() const;

  friend bool operator==(const Scroll&, const Scroll&) = default;
  friend auto operator<=>(const Scroll&, const Scroll&) = default;

 private:
  int m_;
  int n_;
  std::vector<std::int64_t> a_;
  std::int64_t c_;
};

std::ostream& operator<<(std::ostream& os, const Scroll& x);

Scroll make_scroll(int m, int n, std::vector<std::int64_t> a);

/// K_X = -(n+1)H + (c-1-m)F.
DivClass canonical_class(const Scroll& x);

/// The relative canonical class -(n+1)H + cF of X over P^m.
DivClass relative_canonical(const Scroll& x);

/// K_X - D.
DivClass serre_dual_twist(const Scroll& x, DivClass d);

/// Result of replacing V by V(w): the new scroll (same variety, H' = H + wF)
/// and the class translation between the two bases.
struct TwistNormalization {
  Scroll scroll;
  std::int64_t w;

  /// (p, q) in the old basis to the new basis: (p, q - wp).
  DivClass forward(DivClass d) const noexcept { return {d.p, d.q - w * d.p}; }
  DivClass inverse(DivClass d) const noexcept { return {d.p, d.q + w * d.p}; }
};

TwistNormalization normalize_twist(const Scroll& x, std::int64_t w);

}  // namespace scrollreg
