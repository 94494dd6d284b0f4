#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "scrollreg/json_io.hpp"
#include "scrollreg/sweep.hpp"

using namespace scrollreg;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  std::random_device rd;
  fs::path p = fs::temp_directory_path() / ("scrollreg-test-" + name + "-" + std::to_string(rd()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

SweepConfig small_config() {
  SweepConfig c;
  c.family = {{1}, {1, 2}, 1, 2};
  c.p_box = {-2, 2};
  c.q_box = {-2, 2};
  c.ops = {"compare", "reg", "pqreg"};
  c.sheaves = {named_sheaf("O"), named_sheaf("O(F)")};
  c.record_timing = false;
  return c;
}

struct Output {
  std::string jsonl;
  std::string csv;
  SweepSummary summary;
};

Output sweep(const SweepConfig& c, QueryCache* cache) {
  std::ostringstream j, s;
  SweepSummary sum = run_sweep(c, cache, j, s);
  return {j.str(), s.str(), sum};
}

}  // namespace

TEST_CASE("family enumeration") {
  auto xs = enumerate_family({{1}, {1}, 0, 2});
  CHECK(xs.size() == 6);
  CHECK(xs.front() == make_scroll(1, 1, {0, 0}));
  CHECK(xs.back() == make_scroll(1, 1, {2, 2}));
  CHECK(enumerate_family({{0}, {0, 1}, 0, 0}).size() == 1);
}

TEST_CASE("query keys are stable and input sensitive") {
  Json x = to_json(make_scroll(1, 1, {1, 2}));
  Json in = Json{{"p", 0}};
  CHECK(query_key(x, "reg", in) == query_key(x, "reg", in));
  CHECK(query_key(x, "reg", in) != query_key(x, "msreg", in));
  CHECK(query_key(x, "reg", in).size() == 16);
}

TEST_CASE("sweep is deterministic and the csv is versioned") {
  SweepConfig c = small_config();
  Output a = sweep(c, nullptr);
  Output b = sweep(c, nullptr);
  CHECK(a.jsonl == b.jsonl);
  CHECK(a.csv == b.csv);
  CHECK(a.csv.rfind(std::string(kSweepCsvHeader) + "\nkey,scroll,operation,sheaf,inputs,summary\n", 0) == 0);
  CHECK(a.summary.records == sweep_size(c));
  CHECK(a.summary.errors == 0);
  CHECK(a.summary.ms_pq_violations == 0);

  std::istringstream lines(a.jsonl);
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    QueryRecord r = record_from_json(Json::parse(line));
    CHECK(r.key == query_key(r.scroll, r.operation, r.inputs));
    CHECK(r.wall_ms == 0);
    CHECK(r.engine == engine_version());
    ++n;
  }
  CHECK(n == a.summary.records);
}

TEST_CASE("warm cache reproduces outputs byte for byte") {
  fs::path dir = scratch_dir("cache");
  SweepConfig c = small_config();
  c.record_timing = true;
  Output cold, warm;
  {
    QueryCache cache(dir);
    cold = sweep(c, &cache);
    CHECK(cold.summary.cache_hits == 0);
    CHECK(cache.size() == cold.summary.records);
  }
  {
    QueryCache cache(dir);
    warm = sweep(c, &cache);
    CHECK(warm.summary.cache_hits == warm.summary.records);
  }
  CHECK(cold.jsonl == warm.jsonl);
  CHECK(cold.csv == warm.csv);

  // Payloads do not depend on whether the cache was used.
  Output fresh = sweep(c, nullptr);
  CHECK(fresh.csv == cold.csv);
  fs::remove_all(dir);
}

TEST_CASE("F2 separation shows up in a compare sweep") {
  SweepConfig c;
  c.family = {{1}, {1}, 0, 2};
  c.p_box = {-1, 1};
  c.q_box = {-1, 1};
  c.ops = {"compare"};
  c.record_timing = false;
  Output o = sweep(c, nullptr);
  CHECK(o.summary.ms_pq_violations == 0);
  std::istringstream lines(o.jsonl);
  std::string line;
  bool f2_origin = false;
  while (std::getline(lines, line)) {
    Json j = Json::parse(line);
    if (j["scroll"]["a"] != Json::array({0, 2})) continue;
    for (const auto& s : j["result"]["separations"])
      if (s["p"] == 0 && s["q"] == 0) f2_origin = true;
  }
  CHECK(f2_origin);
}

TEST_CASE("oversized grids are rejected") {
  SweepConfig c = small_config();
  c.max_records = 3;
  std::ostringstream j, s;
  CHECK_THROWS_AS(run_sweep(c, nullptr, j, s), PreconditionError);
  CHECK(j.str().empty());
}

TEST_CASE("named sheaves") {
  Scroll x = make_scroll(1, 2, {1, 1, 2});
  CHECK(std::get<SplitBundle>(named_sheaf("O(K)").resolve(x)) == SplitBundle{{canonical_class(x)}});
  CHECK(std::get<SplitBundle>(named_sheaf("O(H-F)").resolve(x)) == SplitBundle{{1, -1}});
  CHECK(std::get<SplitBundle>(named_sheaf(R"({"split":[[0,2]]})").resolve(x)) == SplitBundle{{0, 2}});
  CHECK_THROWS_AS(named_sheaf("O(G)"), Error);
}
