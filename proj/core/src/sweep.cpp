#include "scrollreg/sweep.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#ifndef SCROLLREG_VERSION
#define SCROLLREG_VERSION "dev"
#endif

namespace scrollreg {

const char* engine_version() { return "scrollreg-" SCROLLREG_VERSION; }

std::vector<Scroll> enumerate_family(const ScrollFamily& f) {
  std::vector<Scroll> out;
  for (int m : f.ms)
    for (int n : f.ns) {
      if (m < 0 || n < 0 || (m == 0 && n == 0)) continue;
      std::vector<std::int64_t> a(static_cast<std::size_t>(n) + 1, f.a_lo);
      std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t pos, std::int64_t from) {
        if (pos == a.size()) {
          out.emplace_back(m, n, a);
          return;
        }
        for (std::int64_t v = from; v <= f.a_hi; ++v) {
          a[pos] = v;
          rec(pos + 1, v);
        }
      };
      rec(0, f.a_lo);
    }
  return out;
}

SheafSpec SweepSheaf::resolve(const Scroll& x) const {
  if (fixed) return *fixed;
  if (name == "O") return SplitBundle{{0, 0}};
  if (name == "O(F)") return SplitBundle{{0, 1}};
  if (name == "O(H-F)") return SplitBundle{{1, -1}};
  if (name == "O(K)") return SplitBundle{canonical_class(x)};
  throw PreconditionError("unknown sheaf name \"" + name + "\"");
}

SweepSheaf named_sheaf(const std::string& name) {
  if (name == "O" || name == "O(F)" || name == "O(H-F)" || name == "O(K)") return {name, std::nullopt};
  SheafSpec spec = sheaf_from_json(parse_json(name));
  return {to_json(spec).dump(), spec};
}

Json to_json(const QueryRecord& r) {
  return Json{{"key", r.key},       {"scroll", r.scroll}, {"operation", r.operation}, {"inputs", r.inputs},
              {"result", r.result}, {"engine", r.engine}, {"wall_ms", r.wall_ms}};
}

QueryRecord record_from_json(const Json& j) {
  try {
    return {j.at("key").get<std::string>(), j.at("scroll"),  j.at("operation").get<std::string>(), j.at("inputs"),
            j.at("result"),                 j.at("engine").get<std::string>(), j.at("wall_ms").get<double>()};
  } catch (const nlohmann::json::exception& e) {
    throw JsonError(std::string("query record: ") + e.what());
  }
}

std::string query_key(const Json& scroll, const std::string& operation, const Json& inputs) {
  const std::string text = Json::array({scroll, operation, inputs}).dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

QueryCache::QueryCache(std::filesystem::path dir) : file_(std::move(dir) / "records.jsonl") {
  std::error_code ec;
  std::filesystem::create_directories(file_.parent_path(), ec);
  if (ec) throw Error("cache: cannot create " + file_.parent_path().string() + ": " + ec.message());
  std::ifstream in(file_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("key")) continue;
    lines_.emplace(j["key"].get<std::string>(), line);
  }
}

const std::string* QueryCache::find(const std::string& key) const {
  auto it = lines_.find(key);
  return it == lines_.end() ? nullptr : &it->second;
}

void QueryCache::store(const std::string& key, const std::string& line) {
  if (!lines_.emplace(key, line).second) return;
  std::ofstream out(file_, std::ios::app);
  if (!out) throw Error("cache: cannot append to " + file_.string());
  out << line << '\n';
}

namespace {

bool per_cell(const std::string& op) { return op == "cohom" || op == "pqreg" || op == "msreg"; }

void check_op(const std::string& op) {
  if (!per_cell(op) && op != "compare" && op != "reg") throw PreconditionError("sweep: unknown operation \"" + op + "\"");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string table_text(const CohomTable& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

// The record payload.  CSV text is derived from the payload alone so cached
// and fresh records summarise identically.
Json compute(const std::string& op, const Scroll& x, const SheafSpec& e, const Json& inputs) {
  try {
    if (op == "cohom") {
      return to_json(sheaf_cohom(x, e, divclass_from_json(inputs["twist"])));
    } else if (op == "pqreg" || op == "msreg") {
      DivClass at = divclass_from_json(inputs["at"]);
      if (op == "msreg" && !x.semipositive()) return Json{{"skipped", "not semipositive"}};
      return to_json(op == "pqreg" ? is_pq_regular(x, e, at.p, at.q) : is_ms_regular(x, e, at.p, at.q));
    } else if (op == "compare") {
      if (!x.semipositive()) return Json{{"skipped", "not semipositive"}};
      ScanRange p{inputs["p"][0].get<std::int64_t>(), inputs["p"][1].get<std::int64_t>()};
      ScanRange q{inputs["q"][0].get<std::int64_t>(), inputs["q"][1].get<std::int64_t>()};
      Json r = to_json(compare_regularities(x, e, p, q));
      return Json{{"violations", r["violations"]}, {"separations", r["separations"]}, {"cells", r["entries"].size()}};
    }
    return to_json(reg(x, e));
  } catch (const Error& err) {
    return Json{{"error", err.what()}};
  }
}

}  // namespace

std::size_t sweep_size(const SweepConfig& config) {
  const std::size_t cells = static_cast<std::size_t>(std::max<std::int64_t>(0, config.p_box.hi - config.p_box.lo + 1)) *
                            static_cast<std::size_t>(std::max<std::int64_t>(0, config.q_box.hi - config.q_box.lo + 1));
  std::size_t per_scroll = 0;
  for (const auto& op : config.ops) {
    check_op(op);
    per_scroll += per_cell(op) ? cells : 1;
  }
  return enumerate_family(config.family).size() * config.sheaves.size() * per_scroll;
}

SweepSummary run_sweep(const SweepConfig& config, QueryCache* cache, std::ostream& jsonl, std::ostream& csv) {
  const std::size_t estimate = sweep_size(config);
  if (estimate > config.max_records)
    throw PreconditionError("sweep: grid needs " + std::to_string(estimate) + " records, over the limit of " +
                            std::to_string(config.max_records));

  SweepSummary summary;
  csv << kSweepCsvHeader << '\n' << "key,scroll,operation,sheaf,inputs,summary\n";

  auto emit = [&](const Scroll& x, const std::string& op, const SweepSheaf& sheaf, Json inputs) {
    Json scroll = to_json(x);
    inputs["sheaf"] = sheaf.name;
    const std::string key = query_key(scroll, op, inputs);
    std::string line;
    Json result;
    if (const std::string* hit = cache ? cache->find(key) : nullptr) {
      line = *hit;
      ++summary.cache_hits;
      result = Json::parse(line)["result"];
    } else {
      auto start = std::chrono::steady_clock::now();
      result = compute(op, x, sheaf.resolve(x), inputs);
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      QueryRecord rec{key, scroll, op, inputs, result, engine_version(), config.record_timing ? ms : 0.0};
      line = to_json(rec).dump();
      if (cache) cache->store(key, line);
    }
    jsonl << line << '\n';
    ++summary.records;

    std::string text;
    if (result.contains("error")) {
      ++summary.errors;
      text = "error: " + result["error"].get<std::string>();
    } else if (result.contains("skipped")) {
      text = "skipped";
    } else if (op == "cohom") {
      text = "h=" + table_text(cohom_table_from_json(result));
    } else if (op == "pqreg" || op == "msreg") {
      text = result["verdict"].get<bool>() ? "regular" : "fails=" + std::to_string(result["failures"].size());
    } else if (op == "compare") {
      summary.ms_pq_violations += result["violations"].size();
      summary.separations += result["separations"].size();
      bool origin = false;
      for (const auto& s : result["separations"])
        if (s["p"] == 0 && s["q"] == 0) origin = true;
      text = "violations=" + std::to_string(result["violations"].size()) +
             " separations=" + std::to_string(result["separations"].size()) +
             " origin=" + (origin ? "separated" : "agree");
    } else {
      text = "reg=" + (result["reg"].is_string() ? result["reg"].get<std::string>()
                                                   : std::to_string(result["reg"].get<std::int64_t>())) +
             " monotonicity=" + (result["monotonicity"].get<std::string>().rfind("proven", 0) == 0 ? "proven" : "unverified");
    }
    Json shown = inputs;
    shown.erase("sheaf");
    csv << key << ',' << csv_field(x.describe()) << ',' << op << ',' << csv_field(sheaf.name) << ','
        << csv_field(shown.dump()) << ',' << csv_field(text) << '\n';
  };

  for (const Scroll& x : enumerate_family(config.family))
    for (const auto& sheaf : config.sheaves)
      for (const auto& op : config.ops) {
        if (per_cell(op)) {
          for (std::int64_t p = config.p_box.lo; p <= config.p_box.hi; ++p)
            for (std::int64_t q = config.q_box.lo; q <= config.q_box.hi; ++q)
              emit(x, op, sheaf, Json{{op == "cohom" ? "twist" : "at", Json::array({p, q})}});
        } else if (op == "compare") {
          emit(x, op, sheaf,
               Json{{"p", Json::array({config.p_box.lo, config.p_box.hi})},
                    {"q", Json::array({config.q_box.lo, config.q_box.hi})}});
        } else {
          emit(x, op, sheaf, Json::object());
        }
      }
  return summary;
}

}  // namespace scrollreg
