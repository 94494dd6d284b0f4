#include "scrollreg/json_io.hpp"

#include <charconv>

namespace scrollreg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw JsonError(std::string(what) + ": expected an integer");
  return j.get<std::int64_t>();
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw JsonError(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw JsonError(std::string("missing key \"") + key + "\"");
  return *it;
}

Json exponents(const std::vector<std::int64_t>& v) { return Json(v); }

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw JsonError(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Scroll& x) {
  Json j;
  j["m"] = x.m();
  j["n"] = x.n();
  j["a"] = Json(std::vector<std::int64_t>(x.a().begin(), x.a().end()));
  return j;
}

Scroll scroll_from_json(const Json& j) {
  const Json& a = member(j, "a");
  if (!a.is_array()) throw JsonError("scroll: \"a\" must be an array");
  std::vector<std::int64_t> twists;
  for (const auto& v : a) twists.push_back(as_int(v, "scroll twist"));
  return make_scroll(static_cast<int>(as_int(member(j, "m"), "scroll m")), static_cast<int>(as_int(member(j, "n"), "scroll n")),
                     std::move(twists));
}

Json to_json(DivClass d) { return Json::array({d.p, d.q}); }

DivClass divclass_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw JsonError("class: expected [p, q]");
  return {as_int(j[0], "class p"), as_int(j[1], "class q")};
}

DivClass parse_divclass(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw JsonError("class: expected p,q but got \"" + s + "\"");
  auto parse = [&](std::string_view part) {
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw JsonError("class: expected p,q but got \"" + s + "\"");
    return v;
  };
  std::string_view sv(s);
  return {parse(sv.substr(0, comma)), parse(sv.substr(comma + 1))};
}

Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(to_string(v));
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw JsonError("integer: malformed decimal string");
    }
  }
  throw JsonError("integer: expected a number or decimal string");
}

Json to_json(const CohomTable& t) {
  Json h = Json::array();
  for (const auto& v : t.h) h.push_back(to_json(v));
  return Json{{"h", h}};
}

CohomTable cohom_table_from_json(const Json& j) {
  const Json& h = member(j, "h");
  if (!h.is_array() || h.empty()) throw JsonError("table: \"h\" must be a nonempty array");
  CohomTable t;
  for (const auto& v : h) t.h.push_back(bigint_from_json(v));
  return t;
}

Json to_json(const HyperTable& t) {
  Json h = Json::array();
  for (const auto& v : t.h) h.push_back(to_json(v));
  return Json{{"min_degree", t.min_degree}, {"h", h}};
}

Json to_json(const SheafSpec& e) {
  return std::visit(overloaded{
                        [](const SplitBundle& b) {
                          Json s = Json::array();
                          for (auto d : b.summands) s.push_back(to_json(d));
                          return Json{{"split", s}};
                        },
                        [](const OmegaSpec& o) {
                          return Json{{"omega", Json{{"i", o.i}, {"twist", to_json(o.twist)}}}};
                        },
                        [](const ComplexSpec& c) { return Json{{"complex", to_json(*c.complex)}}; },
                    },
                    e);
}

SheafSpec sheaf_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) throw JsonError("sheaf: expected {\"split\": ...} or {\"omega\": ...}");
  if (j.contains("split")) {
    const Json& s = j["split"];
    if (!s.is_array() || s.empty()) throw JsonError("sheaf: \"split\" must be a nonempty array of [p, q]");
    SplitBundle b;
    for (const auto& d : s) b.summands.push_back(divclass_from_json(d));
    return b;
  }
  if (j.contains("omega")) {
    const Json& o = j["omega"];
    return OmegaSpec{static_cast<int>(as_int(member(o, "i"), "omega i")), divclass_from_json(member(o, "twist"))};
  }
  throw JsonError("sheaf: expected {\"split\": ...} or {\"omega\": ...}");
}

Json to_json(const CoxExponent& c) { return Json{{"alpha", exponents(c.alpha)}, {"beta", exponents(c.beta)}}; }

Json to_json(const TInterval& t) {
  if (t.empty) return Json{{"empty", true}};
  return Json{{"lo", t.lo ? Json(*t.lo) : Json(nullptr)}, {"hi", t.hi ? Json(*t.hi) : Json(nullptr)}};
}

Json to_json(const MonomialComplex& c) {
  Json terms = Json::array();
  for (std::size_t k = 0; k < c.terms.size(); ++k) {
    Json summands = Json::array();
    for (const auto& s : c.terms[k].summands)
      summands.push_back(Json{{"class", to_json(s.cls)}, {"rep", to_json(s.rep)}});
    terms.push_back(Json{{"degree", c.degree_of(k)}, {"summands", summands}});
  }
  Json diffs = Json::array();
  for (const auto& d : c.differentials) {
    Json entries = Json::array();
    for (const auto& e : d)
      entries.push_back(Json{{"source", e.source}, {"target", e.target}, {"sign", e.sign}, {"mono", to_json(e.mono)}});
    diffs.push_back(entries);
  }
  return Json{{"scroll", to_json(c.scroll)}, {"terms", terms}, {"differentials", diffs}};
}

Json to_json(const ValidationReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back(Json{{"kind", to_string(x.kind)}, {"term", x.term}, {"entry", x.entry}, {"message", x.message}});
  return Json{{"ok", r.ok()}, {"violations", v}};
}

Json to_json(const RegularityReport& r) {
  Json f = Json::array();
  for (const auto& x : r.failures)
    f.push_back(Json{{"condition", x.condition},
                     {"i", x.i},
                     {"j", x.j},
                     {"degree", x.degree},
                     {"twist", to_json(x.twist)},
                     {"h", to_json(x.h)}});
  return Json{{"target", to_json(r.target)}, {"verdict", r.verdict}, {"failures", f}};
}

Json to_json(const RegResult& r) {
  Json value = r.value ? Json(*r.value) : r.none_in_range ? Json(nullptr) : Json("-inf");
  return Json{{"reg", value},
              {"monotonicity", r.monotonicity_proven ? "proven (positive scroll)" : "unverified"},
              {"monotone_in_scan", r.monotone_in_scan},
              {"bounded_by_range", r.bounded_by_range},
              {"scan", Json::array({r.scan_lo, r.scan_hi})},
              {"failure_hull", to_json(r.failure_hull)}};
}

namespace {
Json entries_json(const std::vector<ComparisonEntry>& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back(Json{{"p", e.p}, {"q", e.q}, {"ms", e.ms}, {"pq", e.pq}});
  return a;
}
}  // namespace

Json to_json(const ComparisonReport& r) {
  return Json{{"entries", entries_json(r.entries)},
              {"violations", entries_json(r.violations)},
              {"separations", entries_json(r.separations)}};
}

Json to_json(const SplittingReport& r) {
  Json w = Json::array();
  for (const auto& x : r.witnesses) {
    Json item{{"condition", x.condition}};
    item["t"] = x.t ? Json(*x.t) : Json(nullptr);
    if (x.i >= 0) item["i"] = x.i;
    if (x.j >= 0) item["j"] = x.j;
    if (x.subset_size >= 0) {
      item["subset_size"] = x.subset_size;
      item["a_I"] = x.a_I;
    }
    item["degree"] = x.degree;
    item["dual"] = x.dual;
    item["twist"] = to_json(x.twist);
    item["h"] = to_json(x.h);
    w.push_back(item);
  }
  Json j{{"theorem", theorem_id(r.theorem)}, {"verdict", r.verdict}, {"witnesses", w}};
  if (!r.window.empty || r.theorem == Theorem::kSplitO || r.theorem == Theorem::kSplitOFH ||
      r.theorem == Theorem::kRnsSplitO || r.theorem == Theorem::kRnsSplitOFH)
    j["window"] = to_json(r.window);
  if (r.theorem == Theorem::kIndecomposable || r.theorem == Theorem::kRnsIndecomposable)
    j["measured_reg"] = r.measured_reg ? Json(*r.measured_reg) : Json("-inf");
  if (r.precondition_failure) j["precondition_failure"] = *r.precondition_failure;
  if (r.classification) {
    const auto& c = *r.classification;
    Json cl{{"case", c.case_number}, {"conclusion", c.conclusion}, {"bundle", to_json(c.bundle)}, {"h", to_json(c.h)}};
    if (c.omega_index >= 0) cl["i"] = c.omega_index;
    j["classification"] = cl;
  }
  return j;
}

}  // namespace scrollreg
