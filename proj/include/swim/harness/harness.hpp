#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "swim/engine/engine.hpp"
#include "swim/gen/streamgen.hpp"
#include "swim/stream/action.hpp"

namespace swim {

/// Sub-stream selection. Both parts are optional and conjunctive.
struct FilterSpec {
  std::vector<std::string> tags;             // keep actions sharing at least one tag
  std::optional<std::array<double, 4>> box;  // closed [xmin, ymin, xmax, ymax]

  bool active() const { return !tags.empty() || box.has_value(); }
};

enum class FilterVerdict { Keep, Drop, MissingPos };

FilterVerdict filter(const Action& a, const FilterSpec& spec);

enum class FunctionKind { Cardinality, Weighted };

FunctionKind parse_function_kind(std::string_view name);

struct RunConfig {
  EngineKind engine = EngineKind::Sic;
  WindowConfig window;
  FunctionKind function = FunctionKind::Cardinality;
  std::string weights_path;
  FilterSpec filter;

  std::string input_path;        // "-" reads stdin
  std::optional<GenConfig> gen;  // used instead of input_path when set
  bool strict = false;

  std::size_t query_every = 1;  // query on every n-th slide
  std::uint64_t exact_budget = 1'000'000;
  bool sic_prune = true;
  /// Index entries older than window start minus this many positions are
  /// dropped; replies to them become orphans. Unset keeps everything.
  std::optional<std::size_t> grace;

  std::string results_path;  // "-" writes to stdout
  std::string metrics_path;
  std::string checkpoints_path;
  std::string manifest_path;
  bool results_timing = false;  // fill update_micros in the results CSV

  void validate() const;
};

struct RunSummary {
  std::size_t records = 0;      // records parsed
  std::size_t skipped = 0;      // malformed records dropped in lenient mode
  std::size_t filtered = 0;     // dropped by the filter
  std::size_t missing_pos = 0;  // dropped by a box filter for lacking pos
  std::size_t actions = 0;      // actions that entered the window
  std::size_t orphans = 0;
  std::size_t slides = 0;
  std::size_t queries = 0;
  double mean_throughput = 0.0;  // actions per second of update+query time
  double mean_value = 0.0;       // over queried slides
  double mean_checkpoints = 0.0;
  std::size_t max_checkpoints = 0;
  double mean_chain_length = 0.0;
  SeedResult last;
};

/// Output sinks; any may be null.
struct RunSinks {
  std::ostream* results = nullptr;
  std::ostream* metrics = nullptr;
  std::ostream* checkpoints = nullptr;
};

inline constexpr const char* kResultsHeader = "seq,engine,k,value,seeds,checkpoints,update_micros";
inline constexpr const char* kMetricsHeader = "slide,seq,actions,update_nanos,throughput,checkpoints,value";
inline constexpr const char* kCheckpointsHeader = "slide,seq,x,start,value";

/// Runs cfg.engine over actions pulled from `source` until it returns nullopt.
/// Input paths and output paths in cfg are ignored here.
RunSummary run_stream(const RunConfig& cfg, const std::function<std::optional<Action>()>& source,
                      const RunSinks& sinks);

/// Opens the configured input (or generator) and output files, then calls
/// run_stream and writes the manifest.
RunSummary run(const RunConfig& cfg);

void write_run_manifest(std::ostream& out, const RunConfig& cfg, const RunSummary& summary);

}  // namespace swim
