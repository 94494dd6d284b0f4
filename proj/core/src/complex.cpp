#include "scrollreg/complex.hpp"

#include <bit>
#include <map>
#include <sstream>

namespace scrollreg {

std::size_t MonomialComplex::summand_count() const {
  std::size_t s = 0;
  for (const auto& t : terms) s += t.summands.size();
  return s;
}

namespace {

CoxExponent zero_exponent(const Scroll& x) {
  return {std::vector<std::int64_t>(static_cast<std::size_t>(x.m()) + 1, 0),
          std::vector<std::int64_t>(static_cast<std::size_t>(x.n()) + 1, 0)};
}

CoxExponent add(CoxExponent a, const CoxExponent& b) {
  for (std::size_t i = 0; i < a.alpha.size(); ++i) a.alpha[i] += b.alpha[i];
  for (std::size_t i = 0; i < a.beta.size(); ++i) a.beta[i] += b.beta[i];
  return a;
}

CoxExponent subtract(CoxExponent a, const CoxExponent& b) {
  for (std::size_t i = 0; i < a.alpha.size(); ++i) a.alpha[i] -= b.alpha[i];
  for (std::size_t i = 0; i < a.beta.size(); ++i) a.beta[i] -= b.beta[i];
  return a;
}

enum class Vars { kX, kY };

// Subsets of {0..count-1} of the given size, as masks in increasing order.
std::vector<unsigned> subsets_of_size(int count, int size) {
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask < (1u << count); ++mask)
    if (std::popcount(mask) == size) out.push_back(mask);
  return out;
}

struct KoszulBlock {
  std::vector<ComplexTerm> terms;
  std::vector<std::vector<ComplexEntry>> differentials;
  std::vector<std::vector<unsigned>> masks;  // subset of each summand, per term
};

// Koszul complex on one block of Cox variables, terms for r = from, from-1, ..., to,
// twisted by `shift` (class and representative).
KoszulBlock koszul_block(const Scroll& x, Vars vars, int from, int to, DivClass shift, const CoxExponent& shift_rep) {
  const int count = vars == Vars::kX ? x.m() + 1 : x.n() + 1;
  KoszulBlock block;
  for (int r = from; r >= to; --r) {
    ComplexTerm term;
    auto masks = subsets_of_size(count, r);
    for (unsigned mask : masks) {
      ComplexSummand s{shift, shift_rep};
      if (vars == Vars::kX) {
        s.cls += DivClass{0, -r};
        for (int j = 0; j < count; ++j)
          if (mask & (1u << j)) s.rep.alpha[static_cast<std::size_t>(j)] -= 1;
      } else {
        s.cls += DivClass{-r, x.a_sum(mask)};
        for (int j = 0; j < count; ++j)
          if (mask & (1u << j)) s.rep.beta[static_cast<std::size_t>(j)] -= 1;
      }
      term.summands.push_back(std::move(s));
    }
    block.terms.push_back(std::move(term));
    block.masks.push_back(std::move(masks));
  }
  for (std::size_t k = 0; k + 1 < block.terms.size(); ++k) {
    std::map<unsigned, std::size_t> target_of;
    for (std::size_t t = 0; t < block.masks[k + 1].size(); ++t) target_of[block.masks[k + 1][t]] = t;
    std::vector<ComplexEntry> diff;
    for (std::size_t s = 0; s < block.masks[k].size(); ++s) {
      unsigned mask = block.masks[k][s];
      int pos = 0;
      for (int v = 0; v < count; ++v) {
        if (!(mask & (1u << v))) continue;
        ComplexEntry e{s, target_of.at(mask & ~(1u << v)), pos % 2 == 0 ? 1 : -1, zero_exponent(x)};
        if (vars == Vars::kX)
          e.mono.alpha[static_cast<std::size_t>(v)] = 1;
        else
          e.mono.beta[static_cast<std::size_t>(v)] = 1;
        diff.push_back(std::move(e));
        ++pos;
      }
    }
    block.differentials.push_back(std::move(diff));
  }
  return block;
}

MonomialComplex from_block(const Scroll& x, KoszulBlock block, int start) {
  MonomialComplex c{x, start, std::move(block.terms), std::move(block.differentials)};
  return c;
}

void check_omega_index(const Scroll& x, int i) {
  if (i < 0 || i > x.n()) throw PreconditionError("omega index must satisfy 0 <= i <= n");
}

}  // namespace

CoxExponent canonical_representative(const Scroll& x, DivClass t) {
  CoxExponent r = zero_exponent(x);
  r.beta[0] = t.p;
  r.alpha[0] = t.q + t.p * x.a(0);
  return r;
}

MonomialComplex MonomialComplex::twisted(DivClass t) const {
  MonomialComplex c = *this;
  const CoxExponent shift = canonical_representative(scroll, t);
  for (auto& term : c.terms)
    for (auto& s : term.summands) {
      s.cls += t;
      s.rep = add(std::move(s.rep), shift);
    }
  return c;
}

MonomialComplex MonomialComplex::placed_at(int start) const {
  MonomialComplex c = *this;
  c.start_degree = start;
  return c;
}

MonomialComplex build_euler(const Scroll& x) {
  if (x.n() == 0) throw PreconditionError("build_euler: needs n >= 1");
  const DivClass h{1, 0};
  return from_block(x, koszul_block(x, Vars::kY, 1, 0, h, canonical_representative(x, h)), 0);
}

MonomialComplex build_exterior(const Scroll& x) {
  const DivClass h{1, 0};
  return from_block(x, koszul_block(x, Vars::kY, x.n() + 1, 0, h, canonical_representative(x, h)), 0);
}

MonomialComplex build_omega_resolution(const Scroll& x, int i) {
  check_omega_index(x, i);
  return from_block(x, koszul_block(x, Vars::kY, x.n() + 1, i + 1, {}, zero_exponent(x)), -(x.n() - i));
}

MonomialComplex build_omega_coresolution(const Scroll& x, int i) {
  check_omega_index(x, i);
  return from_block(x, koszul_block(x, Vars::kY, i, 0, {}, zero_exponent(x)), 0);
}

MonomialComplex build_base_koszul(const Scroll& x) {
  const DivClass f{0, 1};
  return from_block(x, koszul_block(x, Vars::kX, x.m() + 1, 0, f, canonical_representative(x, f)), 0);
}

MonomialComplex build_spliced_koszul(const Scroll& x) {
  const DivClass h{1, 0};
  const CoxExponent h_rep = canonical_representative(x, h);
  // Representative of O(-n, c) as the top Koszul term of build_exterior.
  CoxExponent top_rep = h_rep;
  for (auto& b : top_rep.beta) b -= 1;
  const DivClass top{-x.n(), x.c()};

  KoszulBlock xs = koszul_block(x, Vars::kX, x.m() + 1, 1, top, top_rep);
  KoszulBlock ys = koszul_block(x, Vars::kY, x.n(), 0, h, h_rep);

  const unsigned all = (1u << (x.n() + 1)) - 1;
  std::map<unsigned, std::size_t> y_target;
  for (std::size_t t = 0; t < ys.masks.front().size(); ++t) y_target[ys.masks.front()[t]] = t;
  std::vector<ComplexEntry> splice;
  for (std::size_t s = 0; s < xs.masks.back().size(); ++s) {
    int j = std::countr_zero(xs.masks.back()[s]);
    for (int i = 0; i <= x.n(); ++i) {
      ComplexEntry e{s, y_target.at(all & ~(1u << i)), i % 2 == 0 ? 1 : -1, zero_exponent(x)};
      e.mono.alpha[static_cast<std::size_t>(j)] = 1;
      e.mono.beta[static_cast<std::size_t>(i)] = 1;
      splice.push_back(std::move(e));
    }
  }

  MonomialComplex c{x, 0, std::move(xs.terms), std::move(xs.differentials)};
  c.differentials.push_back(std::move(splice));
  for (auto& t : ys.terms) c.terms.push_back(std::move(t));
  for (auto& d : ys.differentials) c.differentials.push_back(std::move(d));
  return c;
}

const char* to_string(ComplexViolation::Kind k) {
  switch (k) {
    case ComplexViolation::Kind::kIndex: return "index";
    case ComplexViolation::Kind::kSign: return "sign";
    case ComplexViolation::Kind::kRepresentativeClass: return "representative-class";
    case ComplexViolation::Kind::kDegree: return "degree";
    case ComplexViolation::Kind::kRepresentative: return "representative";
    case ComplexViolation::Kind::kNegativeExponent: return "negative-exponent";
    case ComplexViolation::Kind::kSquare: return "d-squared";
  }
  return "unknown";
}

ValidationReport validate_complex(const MonomialComplex& c) {
  using Kind = ComplexViolation::Kind;
  const Scroll& x = c.scroll;
  ValidationReport report;
  auto fail = [&](Kind kind, std::size_t term, std::size_t entry, const std::string& what) {
    std::ostringstream os;
    os << to_string(kind) << " violation at term " << term << ", entry " << entry << ": " << what;
    report.violations.push_back({kind, term, entry, os.str()});
  };

  for (std::size_t k = 0; k < c.terms.size(); ++k)
    for (std::size_t s = 0; s < c.terms[k].summands.size(); ++s) {
      const auto& sm = c.terms[k].summands[s];
      if (sm.rep.alpha.size() != static_cast<std::size_t>(x.m()) + 1 ||
          sm.rep.beta.size() != static_cast<std::size_t>(x.n()) + 1) {
        fail(Kind::kIndex, k, s, "representative has the wrong length");
        continue;
      }
      if (x.normalize(cox_degree(x, sm.rep)) != x.normalize(sm.cls))
        fail(Kind::kRepresentativeClass, k, s, "representative degree differs from the summand class");
    }

  if (c.differentials.size() + 1 != c.terms.size() && !(c.terms.empty() && c.differentials.empty())) {
    fail(Kind::kIndex, c.differentials.size(), 0, "need exactly one differential per adjacent term pair");
    return report;
  }

  bool indices_ok = true;
  for (std::size_t k = 0; k < c.differentials.size(); ++k)
    for (std::size_t e = 0; e < c.differentials[k].size(); ++e) {
      const auto& en = c.differentials[k][e];
      if (en.source >= c.terms[k].summands.size() || en.target >= c.terms[k + 1].summands.size() ||
          en.mono.alpha.size() != static_cast<std::size_t>(x.m()) + 1 ||
          en.mono.beta.size() != static_cast<std::size_t>(x.n()) + 1) {
        fail(Kind::kIndex, k, e, "entry refers to a missing summand or has the wrong length");
        indices_ok = false;
        continue;
      }
      if (en.sign != 1 && en.sign != -1) fail(Kind::kSign, k, e, "sign must be +1 or -1");
      for (auto v : en.mono.alpha)
        if (v < 0) fail(Kind::kNegativeExponent, k, e, "monomial exponent is negative");
      for (auto v : en.mono.beta)
        if (v < 0) fail(Kind::kNegativeExponent, k, e, "monomial exponent is negative");
      const auto& src = c.terms[k].summands[en.source];
      const auto& dst = c.terms[k + 1].summands[en.target];
      if (x.normalize(cox_degree(x, en.mono)) != x.normalize(dst.cls - src.cls))
        fail(Kind::kDegree, k, e, "monomial degree differs from target minus source class");
      if (en.mono != subtract(dst.rep, src.rep))
        fail(Kind::kRepresentative, k, e, "monomial differs from target minus source representative");
    }
  if (!indices_ok) return report;

  for (std::size_t k = 0; k + 1 < c.differentials.size(); ++k) {
    // (source, final target, monomial) -> accumulated coefficient
    std::map<std::tuple<std::size_t, std::size_t, CoxExponent>, long> composite;
    for (const auto& first : c.differentials[k])
      for (const auto& second : c.differentials[k + 1])
        if (second.source == first.target)
          composite[{first.source, second.target, add(first.mono, second.mono)}] += first.sign * second.sign;
    for (const auto& [key, coeff] : composite)
      if (coeff != 0) {
        std::ostringstream os;
        os << "d o d does not cancel from summand " << std::get<0>(key) << " of term " << k << " to summand "
           << std::get<1>(key) << " of term " << k + 2 << " (coefficient " << coeff << ")";
        fail(Kind::kSquare, k, std::get<0>(key), os.str());
      }
  }
  return report;
}

}  // namespace scrollreg
