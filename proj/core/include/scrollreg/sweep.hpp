#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "scrollreg/json_io.hpp"
#include "scrollreg/regularity.hpp"

namespace scrollreg {

const char* engine_version();

/// Every scroll with m in ms, n in ns and a_0 <= ... <= a_n in [a_lo, a_hi].
struct ScrollFamily {
  std::vector<int> ms;
  std::vector<int> ns;
  std::int64_t a_lo = 0;
  std::int64_t a_hi = 0;
};

/// Enumerated in order of m, then n, then a lexicographically.  Points
/// (m = n = 0) are skipped.
std::vector<Scroll> enumerate_family(const ScrollFamily& f);

/// A bundle named relative to the scroll: "O", "O(F)", "O(H-F)", "O(K)", or
/// a fixed spec given as JSON.
struct SweepSheaf {
  std::string name;
  std::optional<SheafSpec> fixed;

  SheafSpec resolve(const Scroll& x) const;
};

SweepSheaf named_sheaf(const std::string& name);

struct QueryRecord {
  std::string key;
  Json scroll;
  std::string operation;
  Json inputs;
  Json result;
  std::string engine;
  double wall_ms = 0;
};

Json to_json(const QueryRecord& r);
QueryRecord record_from_json(const Json& j);

/// 64-bit FNV-1a of the canonical dump of (scroll, operation, inputs), as hex.
std::string query_key(const Json& scroll, const std::string& operation, const Json& inputs);

/// Append-only JSON-lines store keyed by query_key.  Lines are kept verbatim
/// so cached records re-emit byte for byte.
class QueryCache {
 public:
  explicit QueryCache(std::filesystem::path dir);

  const std::string* find(const std::string& key) const;
  void store(const std::string& key, const std::string& line);
  std::size_t size() const noexcept { return lines_.size(); }
  const std::filesystem::path& file() const noexcept { return file_; }

 private:
  std::filesystem::path file_;
  std::map<std::string, std::string> lines_;
};

/// Operations: "cohom", "pqreg", "msreg" (one record per box cell),
/// "compare", "reg" (one record per scroll and sheaf).
struct SweepConfig {
  ScrollFamily family;
  ScanRange p_box{-3, 3};
  ScanRange q_box{-3, 3};
  std::vector<std::string> ops{"compare"};
  std::vector<SweepSheaf> sheaves{named_sheaf("O")};
  bool record_timing = true;
  std::size_t max_records = 1'000'000;
};

struct SweepSummary {
  std::size_t records = 0;
  std::size_t cache_hits = 0;
  std::size_t ms_pq_violations = 0;
  std::size_t separations = 0;
  std::size_t errors = 0;
};

/// Number of records a sweep would produce.
std::size_t sweep_size(const SweepConfig& config);

/// Runs the sweep, writing one JSON line per record to `jsonl` and the
/// versioned CSV summary to `csv`.  Throws PreconditionError when the grid
/// exceeds config.max_records.
SweepSummary run_sweep(const SweepConfig& config, QueryCache* cache, std::ostream& jsonl, std::ostream& csv);

inline constexpr const char* kSweepCsvHeader = "# scrollreg-sweep v1";

}  // namespace scrollreg
