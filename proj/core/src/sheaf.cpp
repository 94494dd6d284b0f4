#include "scrollreg/sheaf.hpp"

#include <sstream>

#include "scrollreg/hypercohomology.hpp"

namespace scrollreg {

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

void check_sheaf(const Scroll& x, const SheafSpec& e) {
  std::visit(overloaded{
                 [](const SplitBundle& b) {
                   if (b.summands.empty()) throw PreconditionError("split bundle needs at least one summand");
                 },
                 [&](const OmegaSpec& o) {
                   if (o.i < 0 || o.i > x.n()) throw PreconditionError("omega index must satisfy 0 <= i <= n");
                 },
                 [&](const ComplexSpec& c) {
                   if (!c.complex) throw PreconditionError("complex spec is empty");
                   if (!(c.complex->scroll == x)) throw PreconditionError("complex spec lives on another scroll");
                 },
             },
             e);
}

CohomTable sheaf_cohom(const Scroll& x, const SheafSpec& e, DivClass t) {
  check_sheaf(x, e);
  return std::visit(overloaded{
                        [&](const SplitBundle& b) { return bundle_cohom(x, b, t); },
                        [&](const OmegaSpec& o) { return omega_cohom(x, o.i, o.twist + t); },
                        [&](const ComplexSpec& c) { return hypercohom(c.complex->twisted(t)); },
                    },
                    e);
}

SheafSpec dual(const Scroll& x, const SheafSpec& e) {
  check_sheaf(x, e);
  return std::visit(overloaded{
                        [](const SplitBundle& b) -> SheafSpec { return b.dual(); },
                        [&](const OmegaSpec& o) -> SheafSpec {
                          return OmegaSpec{x.n() - o.i, -o.twist + DivClass{x.n() + 1, -x.c()}};
                        },
                        [](const ComplexSpec&) -> SheafSpec {
                          throw PreconditionError("dual: complex specs cannot be dualised");
                        },
                    },
                    e);
}

SheafSpec twisted(const SheafSpec& e, DivClass t) {
  return std::visit(overloaded{
                        [&](const SplitBundle& b) -> SheafSpec { return b.twisted(t); },
                        [&](const OmegaSpec& o) -> SheafSpec { return OmegaSpec{o.i, o.twist + t}; },
                        [&](const ComplexSpec& c) -> SheafSpec {
                          return ComplexSpec{std::make_shared<const MonomialComplex>(c.complex->twisted(t))};
                        },
                    },
                    e);
}

std::size_t sheaf_rank(const Scroll& x, const SheafSpec& e) {
  return std::visit(overloaded{
                        [](const SplitBundle& b) { return b.rank(); },
                        [&](const OmegaSpec& o) { return static_cast<std::size_t>(binomial(x.n(), o.i)); },
                        [](const ComplexSpec& c) {
                          std::int64_t r = 0;
                          for (std::size_t k = 0; k < c.complex->terms.size(); ++k) {
                            auto s = static_cast<std::int64_t>(c.complex->terms[k].summands.size());
                            r += (c.complex->degree_of(k) % 2 == 0) ? s : -s;
                          }
                          return static_cast<std::size_t>(r < 0 ? -r : r);
                        },
                    },
                    e);
}

std::string describe(const SheafSpec& e) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const SplitBundle& b) {
                   os << "split[";
                   for (std::size_t k = 0; k < b.summands.size(); ++k) os << (k ? "," : "") << b.summands[k];
                   os << ']';
                 },
                 [&](const OmegaSpec& o) { os << "omega^" << o.i << o.twist; },
                 [&](const ComplexSpec& c) { os << "complex[" << c.complex->terms.size() << " terms]"; },
             },
             e);
  return os.str();
}

}  // namespace scrollreg
