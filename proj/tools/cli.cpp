#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "scrollreg/hypercohomology.hpp"
#include "scrollreg/json_io.hpp"
#include "scrollreg/oracle.hpp"
#include "scrollreg/regularity.hpp"
#include "scrollreg/splitting.hpp"
#include "scrollreg/sweep.hpp"
#include "scrollreg/verify.hpp"

namespace scrollreg::cli {

namespace {

// Bad input detected after flag parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename F>
auto as_usage(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Scroll read_scroll(const std::string& text) {
  if (text.empty()) throw UsageError("--scroll is required");
  return as_usage([&] { return scroll_from_json(parse_json(text)); });
}

SheafSpec read_sheaf(const Scroll& x, const std::string& text) {
  return as_usage([&] {
    SheafSpec e = text.empty() ? SheafSpec{SplitBundle{{0, 0}}} : sheaf_from_json(parse_json(text));
    check_sheaf(x, e);
    return e;
  });
}

DivClass read_class(const std::string& text) {
  return as_usage([&] { return parse_divclass(text); });
}

ScanRange read_range(const std::string& text, const char* flag) {
  DivClass d = as_usage([&] { return parse_divclass(text); });
  if (d.p > d.q) throw UsageError(std::string(flag) + ": expected lo,hi with lo <= hi");
  return {d.p, d.q};
}

std::vector<int> read_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": expected a comma separated list of integers");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t at = text.find(sep, pos);
    out.push_back(text.substr(pos, at == std::string::npos ? std::string::npos : at - pos));
    if (at == std::string::npos) break;
    pos = at + 1;
  }
  return out;
}

void emit(std::ostream& out, const Json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }

struct Flags {
  std::string scroll, sheaf, twist = "0,0", at, range, p_range = "-3,3", q_range = "-3,3", theorem, suite = "all",
                                 route = "auto", format = "json", klass, kind, out_dir, cache_dir, ms = "1", ns = "1,2",
                                 a_range = "1,3", ops = "compare", sheaves = "O";
  std::vector<std::string> family;
  int row = -1;
  int index = 1;
  bool oracle = false, rns = false, pretty = false, no_timing = false, no_cache = false;
  std::size_t max_records = 1'000'000;
};

int cmd_cohom(const Flags& f, std::ostream& out) {
  Scroll x = read_scroll(f.scroll);
  SheafSpec e = read_sheaf(x, f.sheaf);
  DivClass t = read_class(f.twist);
  if (f.oracle) {
    const auto* b = std::get_if<SplitBundle>(&e);
    if (!b) throw UsageError("--oracle needs a split bundle");
    CohomTable sum(x.dim());
    for (auto d : b->summands) sum += character_cohom(x, d + t);
    emit(out, to_json(sum), f.pretty);
    return kExitOk;
  }
  if (const auto* o = std::get_if<OmegaSpec>(&e); o && f.route != "auto") {
    OmegaRoute route = f.route == "resolution" ? OmegaRoute::kResolution : OmegaRoute::kCoresolution;
    emit(out, to_json(omega_cohom(x, o->i, o->twist + t, route)), f.pretty);
    return kExitOk;
  }
  emit(out, to_json(sheaf_cohom(x, e, t)), f.pretty);
  return kExitOk;
}

int cmd_table(const Flags& f, std::ostream& out) {
  Scroll x = read_scroll(f.scroll);
  SheafSpec e = read_sheaf(x, f.sheaf);
  ScanRange p = read_range(f.p_range, "--p"), q = read_range(f.q_range, "--q");
  if (f.format == "csv") {
    out << "p,q";
    for (int i = 0; i <= x.dim(); ++i) out << ",h" << i;
    out << '\n';
  }
  Json rows = Json::array();
  for (std::int64_t a = p.lo; a <= p.hi; ++a)
    for (std::int64_t b = q.lo; b <= q.hi; ++b) {
      CohomTable t = sheaf_cohom(x, e, {a, b});
      if (f.format == "csv") {
        out << a << ',' << b;
        for (const auto& v : t.h) out << ',' << v;
        out << '\n';
      } else {
        rows.push_back(Json{{"twist", Json::array({a, b})}, {"h", to_json(t)["h"]}});
      }
    }
  if (f.format != "csv") emit(out, Json{{"scroll", to_json(x)}, {"sheaf", to_json(e)}, {"rows", rows}}, f.pretty);
  return kExitOk;
}

int cmd_reg(const Flags& f, std::ostream& out) {
  Scroll x = read_scroll(f.scroll);
  SheafSpec e = read_sheaf(x, f.sheaf);
  if (!f.at.empty()) {
    DivClass at = read_class(f.at);
    RegularityReport r = f.rns ? rns_is_pq_regular(x, e, at.p, at.q) : is_pq_regular(x, e, at.p, at.q);
    emit(out, to_json(r), f.pretty);
    return kExitOk;
  }
  std::optional<ScanRange> range;
  if (!f.range.empty()) range = read_range(f.range, "--range");
  emit(out, to_json(reg(x, e, range)), f.pretty);
  return kExitOk;
}

int cmd_msreg(const Flags& f, std::ostream& out) {
  Scroll x = read_scroll(f.scroll);
  SheafSpec e = read_sheaf(x, f.sheaf);
  DivClass at = read_class(f.at.empty() ? "0,0" : f.at);
  emit(out, to_json(is_ms_regular(x, e, at.p, at.q)), f.pretty);
  return kExitOk;
}

int cmd_compare(const Flags& f, std::ostream& out) {
  Scroll x = read_scroll(f.scroll);
  SheafSpec e = read_sheaf(x, f.sheaf);
  emit(out, to_json(compare_regularities(x, e, read_range(f.p_range, "--p"), read_range(f.q_range, "--q"))), f.pretty);
  return kExitOk;
}

int cmd_split(const Flags& f, std::ostream& out) {
  Scroll x = read_scroll(f.scroll);
  SheafSpec e = read_sheaf(x, f.sheaf);
  auto which = parse_theorem(f.theorem);
  if (!which) throw UsageError("--theorem: unknown theorem \"" + f.theorem + "\"");
  emit(out, to_json(check_theorem(x, e, *which)), f.pretty);
  return kExitOk;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  std::vector<Scroll> family;
  for (const auto& s : f.family) family.push_back(read_scroll(s));
  if (family.empty()) family = default_verify_family();
  if (f.suite != "all" && std::find(verify_suites().begin(), verify_suites().end(), f.suite) == verify_suites().end())
    throw UsageError("--suite: unknown suite \"" + f.suite + "\"");
  std::size_t failed = 0;
  auto results = run_verify(f.suite, family);
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.name;
    if (!r.passed) out << "  " << r.detail;
    out << '\n';
    if (!r.passed) ++failed;
  }
  out << results.size() - failed << '/' << results.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitComputation;
}

int cmd_oracle(const Flags& f, std::ostream& out) {
  Scroll x = read_scroll(f.scroll);
  DivClass d = read_class(f.klass.empty() ? f.twist : f.klass);
  if (f.row < 0) {
    emit(out, to_json(character_cohom(x, d)), f.pretty);
    return kExitOk;
  }
  if (f.row != 0 && f.row != x.m() && f.row != x.n() && f.row != x.dim())
    throw UsageError("--row must be one of 0, m, n, n+m");
  Json chars = Json::array();
  for (const auto& c : enumerate_contributing(x, d, f.row)) chars.push_back(to_json(c));
  emit(out, Json{{"row", f.row}, {"characters", chars}}, f.pretty);
  return kExitOk;
}

int cmd_complex(const Flags& f, std::ostream& out) {
  Scroll x = read_scroll(f.scroll);
  auto build = [&]() -> MonomialComplex {
    if (f.kind == "euler") return build_euler(x);
    if (f.kind == "exterior") return build_exterior(x);
    if (f.kind == "omega-resolution") return build_omega_resolution(x, f.index);
    if (f.kind == "omega-coresolution") return build_omega_coresolution(x, f.index);
    if (f.kind == "base-koszul") return build_base_koszul(x);
    if (f.kind == "spliced-koszul") return build_spliced_koszul(x);
    throw UsageError("--kind: unknown complex \"" + f.kind + "\"");
  };
  MonomialComplex c = as_usage(build).twisted(read_class(f.twist));
  emit(out,
       Json{{"complex", to_json(c)}, {"validation", to_json(validate_complex(c))}, {"hypercohomology", to_json(hypercohom_full(c))}},
       f.pretty);
  return kExitOk;
}

int cmd_sweep(const Flags& f, std::ostream& out) {
  SweepConfig config;
  config.family.ms = read_int_list(f.ms, "--m");
  config.family.ns = read_int_list(f.ns, "--n");
  ScanRange a = read_range(f.a_range, "--a");
  config.family.a_lo = a.lo;
  config.family.a_hi = a.hi;
  config.p_box = read_range(f.p_range, "--p");
  config.q_box = read_range(f.q_range, "--q");
  config.ops = split_list(f.ops, ',');
  config.sheaves.clear();
  for (const auto& name : split_list(f.sheaves, ';')) config.sheaves.push_back(as_usage([&] { return named_sheaf(name); }));
  config.record_timing = !f.no_timing;
  config.max_records = f.max_records;
  as_usage([&] { return sweep_size(config); });
  if (f.out_dir.empty()) throw UsageError("--out is required");

  std::optional<QueryCache> cache;
  std::string cache_dir = f.cache_dir;
  if (cache_dir.empty())
    if (const char* env = std::getenv("SCROLLREG_CACHE_DIR")) cache_dir = env;
  if (!cache_dir.empty() && !f.no_cache) cache.emplace(cache_dir);

  std::filesystem::create_directories(f.out_dir);
  std::ofstream jsonl(std::filesystem::path(f.out_dir) / "records.jsonl", std::ios::trunc);
  std::ofstream csv(std::filesystem::path(f.out_dir) / "summary.csv", std::ios::trunc);
  if (!jsonl || !csv) throw Error("sweep: cannot write to " + f.out_dir);
  SweepSummary s = run_sweep(config, cache ? &*cache : nullptr, jsonl, csv);
  emit(out,
       Json{{"records", s.records},
            {"cache_hits", s.cache_hits},
            {"ms_pq_violations", s.ms_pq_violations},
            {"separations", s.separations},
            {"errors", s.errors}},
       f.pretty);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sheaf cohomology, regularity and splitting criteria on toric scrolls"};
  app.name("scrollreg");
  app.require_subcommand(1);
  Flags f;

  auto scroll_opt = [&](CLI::App* s) {
    s->add_option("--scroll", f.scroll, "Scroll as JSON, e.g. {\"m\":1,\"n\":1,\"a\":[1,2]}")->required();
  };
  auto sheaf_opt = [&](CLI::App* s) {
    s->add_option("--sheaf", f.sheaf, "{\"split\":[[p,q],...]} or {\"omega\":{\"i\":i,\"twist\":[p,q]}}; default O");
  };
  auto pretty_opt = [&](CLI::App* s) { s->add_flag("--pretty", f.pretty, "Indent JSON output"); };

  auto* cohom = app.add_subcommand("cohom", "Cohomology table of a sheaf twisted by p,q");
  scroll_opt(cohom);
  sheaf_opt(cohom);
  cohom->add_option("--twist", f.twist, "Twist p,q");
  cohom->add_flag("--oracle", f.oracle, "Count torus characters instead of using the closed form");
  cohom->add_option("--route", f.route, "Omega route")->check(CLI::IsMember({"auto", "resolution", "coresolution"}));
  pretty_opt(cohom);

  auto* table = app.add_subcommand("table", "Cohomology tables over a box of twists");
  scroll_opt(table);
  sheaf_opt(table);
  table->add_option("--p", f.p_range, "p range lo,hi");
  table->add_option("--q", f.q_range, "q range lo,hi");
  table->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  pretty_opt(table);

  auto* regc = app.add_subcommand("reg", "Reg, or the (p,q)-regularity report with --at");
  scroll_opt(regc);
  sheaf_opt(regc);
  regc->add_option("--at", f.at, "Check (p,q)-regularity at p,q");
  regc->add_flag("--rns", f.rns, "Use the m = 1 condition lists (with --at)");
  regc->add_option("--range", f.range, "Explicit scan range lo,hi");
  pretty_opt(regc);

  auto* ms = app.add_subcommand("msreg", "Multigraded regularity with respect to {H, F}");
  scroll_opt(ms);
  sheaf_opt(ms);
  ms->add_option("--at", f.at, "Twist p,q (default 0,0)");
  pretty_opt(ms);

  auto* cmp = app.add_subcommand("compare", "Multigraded versus (p,q)-regularity over a box");
  scroll_opt(cmp);
  sheaf_opt(cmp);
  cmp->add_option("--p", f.p_range, "p range lo,hi");
  cmp->add_option("--q", f.q_range, "q range lo,hi");
  pretty_opt(cmp);

  auto* split = app.add_subcommand("split", "Evaluate a splitting criterion");
  scroll_opt(split);
  sheaf_opt(split);
  split->add_option("--theorem", f.theorem, "2.1|2.2|2.3|c2.5|c2.6|c2.7 or split-o|split-ofh|indecomposable|rns-...")
      ->required();
  pretty_opt(split);

  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--suite", f.suite, "all, closed-form, oracle, koszul, regularity or splitting");
  verify->add_option("--scroll", f.family, "Scroll JSON (repeatable); default family otherwise");

  auto* orc = app.add_subcommand("oracle", "Character-count cohomology of a line bundle");
  orc->add_option("--scroll", f.scroll, "Scroll JSON")->required();
  orc->add_option("--class", f.klass, "Line bundle p,q")->required();
  orc->add_option("--row", f.row, "List the characters contributing to this row");
  pretty_opt(orc);

  auto* cx = app.add_subcommand("complex", "Dump a built complex with its validation and hypercohomology");
  scroll_opt(cx);
  cx->add_option("--kind", f.kind, "euler|exterior|omega-resolution|omega-coresolution|base-koszul|spliced-koszul")
      ->required();
  cx->add_option("--i", f.index, "Omega index");
  cx->add_option("--twist", f.twist, "Twist p,q");
  pretty_opt(cx);

  auto* sw = app.add_subcommand("sweep", "Run operations over a scroll family; writes records.jsonl and summary.csv");
  sw->add_option("--m", f.ms, "Base dimensions, comma separated");
  sw->add_option("--n", f.ns, "Fiber dimensions, comma separated");
  sw->add_option("--a", f.a_range, "Twist range lo,hi");
  sw->add_option("--p", f.p_range, "p range lo,hi");
  sw->add_option("--q", f.q_range, "q range lo,hi");
  sw->add_option("--ops", f.ops, "cohom,pqreg,msreg,compare,reg");
  sw->add_option("--sheaves", f.sheaves, "';' separated: O, O(F), O(H-F), O(K) or sheaf JSON");
  sw->add_option("--out", f.out_dir, "Output directory")->required();
  sw->add_option("--cache-dir", f.cache_dir, "Cache directory (default $SCROLLREG_CACHE_DIR)");
  sw->add_flag("--no-cache", f.no_cache, "Ignore the cache");
  sw->add_flag("--no-timing", f.no_timing, "Record wall time as 0 for reproducible records");
  sw->add_option("--max-records", f.max_records, "Reject larger grids");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (cohom->parsed()) return cmd_cohom(f, out);
    if (table->parsed()) return cmd_table(f, out);
    if (regc->parsed()) return cmd_reg(f, out);
    if (ms->parsed()) return cmd_msreg(f, out);
    if (cmp->parsed()) return cmd_compare(f, out);
    if (split->parsed()) return cmd_split(f, out);
    if (verify->parsed()) return cmd_verify(f, out);
    if (orc->parsed()) return cmd_oracle(f, out);
    if (cx->parsed()) return cmd_complex(f, out);
    if (sw->parsed()) return cmd_sweep(f, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}

}  // namespace scrollreg::cli
