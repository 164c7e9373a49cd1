#include "swim/harness/harness.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>

#include "json.hpp"
#include "swim/engine/ic_engine.hpp"
#include "swim/engine/sic_engine.hpp"
#include "swim/stream/action_io.hpp"
#include "swim/stream/propagation_index.hpp"
#include "swim/stream/user_table.hpp"

namespace swim {

FilterVerdict filter(const Action& a, const FilterSpec& spec) {
  if (!spec.tags.empty()) {
    const bool hit = std::any_of(a.tags.begin(), a.tags.end(), [&](const std::string& t) {
      return std::find(spec.tags.begin(), spec.tags.end(), t) != spec.tags.end();
    });
    if (!hit) return FilterVerdict::Drop;
  }
  if (spec.box) {
    if (!a.pos) return FilterVerdict::MissingPos;
    const auto& b = *spec.box;
    const auto& p = *a.pos;
    if (p[0] < b[0] || p[1] < b[1] || p[0] > b[2] || p[1] > b[3]) return FilterVerdict::Drop;
  }
  return FilterVerdict::Keep;
}

FunctionKind parse_function_kind(std::string_view name) {
  if (name == "cardinality") return FunctionKind::Cardinality;
  if (name == "weighted") return FunctionKind::Weighted;
  throw ConfigError("unknown function '" + std::string(name) + "' (expected cardinality or weighted)");
}

void RunConfig::validate() const {
  window.validate();
  if (query_every == 0) throw ConfigError("query cadence must be at least 1");
  if (exact_budget == 0) throw ConfigError("exact budget must be positive");
  if (!weights_path.empty() && function != FunctionKind::Weighted) {
    throw ConfigError("a weight table needs the weighted function");
  }
  if (filter.box) {
    const auto& b = *filter.box;
    if (b[0] > b[2] || b[1] > b[3]) throw ConfigError("filter box needs xmin <= xmax and ymin <= ymax");
  }
  if (gen) gen->validate();
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join_seeds(const std::vector<UserId>& seeds, const UserTable& users) {
  std::string out;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (i) out += ';';
    out += users.name(seeds[i]);
  }
  return out;
}

void dump_checkpoints(std::ostream& out, const Engine& engine, const WindowConfig& cfg, Position last,
                      std::size_t slide, Seq seq) {
  std::vector<CheckpointState> states;
  if (const auto* sic = dynamic_cast<const SicEngine*>(&engine)) {
    states = sic->snapshot();
  } else if (const auto* ic = dynamic_cast<const IcEngine*>(&engine)) {
    const auto lo = static_cast<std::int64_t>(window_bounds(last, cfg).first);
    for (const auto& cp : ic->checkpoints()) {
      states.push_back({static_cast<std::int64_t>(cp.start()) - lo + 1, cp.start(), cp.value()});
    }
  }
  for (const auto& s : states) out << fmt::format("{},{},{},{},{}\n", slide, seq, s.x, s.start, s.value);
}

}  // namespace

RunSummary run_stream(const RunConfig& cfg, const std::function<std::optional<Action>()>& source,
                      const RunSinks& sinks) {
  cfg.validate();
  UserTable users;
  if (!cfg.weights_path.empty()) users.load_weights_csv(cfg.weights_path);
  const InfluenceFunction f =
      cfg.function == FunctionKind::Weighted ? InfluenceFunction::weighted(users) : InfluenceFunction::cardinality();
  PropagationIndex index;
  EngineOptions opts;
  opts.exact_budget = cfg.exact_budget;
  opts.sic_prune = cfg.sic_prune;
  const auto engine = make_engine(cfg.engine, index, cfg.window, f, opts);

  if (sinks.results) *sinks.results << kResultsHeader << '\n';
  if (sinks.metrics) *sinks.metrics << kMetricsHeader << '\n';
  if (sinks.checkpoints) *sinks.checkpoints << kCheckpointsHeader << '\n';

  RunSummary sum;
  std::vector<Position> batch;
  batch.reserve(cfg.window.slide);
  Seq batch_seq = 0;
  double total_nanos = 0.0, value_sum = 0.0, cp_sum = 0.0;

  auto do_slide = [&] {
    ++sum.slides;
    const bool query = sum.slides % cfg.query_every == 0;
    const auto t0 = std::chrono::steady_clock::now();
    engine->slide(batch);
    std::optional<SeedResult> r;
    if (query) r = engine->query();
    const auto t1 = std::chrono::steady_clock::now();

    const auto nanos = std::max<std::int64_t>(1, std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    const double throughput = static_cast<double>(batch.size()) * 1e9 / static_cast<double>(nanos);
    const std::size_t cps = engine->checkpoint_count();
    total_nanos += static_cast<double>(nanos);
    cp_sum += static_cast<double>(cps);
    sum.max_checkpoints = std::max(sum.max_checkpoints, cps);

    if (sinks.metrics) {
      *sinks.metrics << fmt::format("{},{},{},{},{:.1f},{},{}\n", sum.slides, batch_seq, batch.size(), nanos,
                                    throughput, cps, r ? fmt::format("{}", r->value) : std::string());
    }
    if (r) {
      ++sum.queries;
      value_sum += r->value;
      if (sinks.results) {
        const std::string micros = cfg.results_timing ? fmt::format("{:.3f}", static_cast<double>(nanos) / 1e3) : "";
        *sinks.results << fmt::format("{},{},{},{},{},{},{}\n", batch_seq, engine->name(), cfg.window.k, r->value,
                                      csv_field(join_seeds(r->seeds, users)), cps, micros);
      }
      sum.last = std::move(*r);
    }
    if (sinks.checkpoints) dump_checkpoints(*sinks.checkpoints, *engine, cfg.window, batch.back(), sum.slides, batch_seq);
    if (cfg.grace) {
      const Position lo = window_bounds(batch.back(), cfg.window).first;
      if (lo > *cfg.grace + 1) index.evict_before(lo - *cfg.grace);
    }
    batch.clear();
  };

  while (auto a = source()) {
    ++sum.records;
    if (cfg.filter.active()) {
      const FilterVerdict v = filter(*a, cfg.filter);
      if (v == FilterVerdict::Drop) {
        ++sum.filtered;
        continue;
      }
      if (v == FilterVerdict::MissingPos) {
        ++sum.missing_pos;
        continue;
      }
    }
    const UserId uid = users.intern(a->user);
    batch.push_back(index.ingest(a->seq, uid, a->parent).pos);
    batch_seq = a->seq;
    ++sum.actions;
    if (batch.size() == cfg.window.slide) do_slide();
  }
  if (!batch.empty()) do_slide();

  sum.orphans = index.orphan_count();
  sum.mean_chain_length = index.mean_chain_length();
  if (total_nanos > 0) sum.mean_throughput = static_cast<double>(sum.actions) * 1e9 / total_nanos;
  if (sum.queries > 0) sum.mean_value = value_sum / static_cast<double>(sum.queries);
  if (sum.slides > 0) sum.mean_checkpoints = cp_sum / static_cast<double>(sum.slides);
  return sum;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  return out;
}

}  // namespace

RunSummary run(const RunConfig& cfg) {
  cfg.validate();
  std::ofstream results, metrics, checkpoints;
  RunSinks sinks;
  if (cfg.results_path == "-") {
    sinks.results = &std::cout;
  } else if (!cfg.results_path.empty()) {
    sinks.results = &(results = open_out(cfg.results_path));
  }
  if (!cfg.metrics_path.empty()) sinks.metrics = &(metrics = open_out(cfg.metrics_path));
  if (!cfg.checkpoints_path.empty()) sinks.checkpoints = &(checkpoints = open_out(cfg.checkpoints_path));

  RunSummary sum;
  if (cfg.gen) {
    GeneratedStream gs = generate(*cfg.gen);
    std::size_t i = 0;
    sum = run_stream(
        cfg, [&]() -> std::optional<Action> {
          if (i == gs.actions.size()) return std::nullopt;
          return std::move(gs.actions[i++]);
        },
        sinks);
  } else {
    if (cfg.input_path.empty()) throw ConfigError("no input given");
    std::ifstream file;
    std::istream* in = &std::cin;
    if (cfg.input_path != "-") {
      file.open(cfg.input_path);
      if (!file) throw ConfigError("cannot read " + cfg.input_path);
      in = &file;
    }
    ActionReader reader(*in, format_for_path(cfg.input_path), cfg.strict);
    sum = run_stream(cfg, [&] { return reader.next(); }, sinks);
    sum.skipped = reader.skipped();
  }

  if (!cfg.manifest_path.empty()) {
    std::ofstream out = open_out(cfg.manifest_path);
    write_run_manifest(out, cfg, sum);
  }
  return sum;
}

void write_run_manifest(std::ostream& out, const RunConfig& cfg, const RunSummary& s) {
  nlohmann::ordered_json j;
  j["engine"] = std::string(engine_name(cfg.engine));
  j["window"] = {{"n", cfg.window.window}, {"l", cfg.window.slide}, {"k", cfg.window.k}, {"beta", cfg.window.beta}};
  j["function"] = cfg.function == FunctionKind::Weighted ? "weighted" : "cardinality";
  if (!cfg.weights_path.empty()) j["weights"] = cfg.weights_path;
  if (cfg.gen) {
    const GenConfig& g = *cfg.gen;
    j["gen"] = {{"num_users", g.num_users}, {"num_actions", g.num_actions}, {"follow_fraction", g.follow_fraction},
                {"lambda", g.lambda},       {"edges", g.edge_count()},       {"seed", g.seed}};
  } else {
    j["input"] = cfg.input_path;
  }
  j["filter"] = {{"tags", cfg.filter.tags}};
  if (cfg.filter.box) j["filter"]["box"] = *cfg.filter.box;
  j["strict"] = cfg.strict;
  j["query_every"] = cfg.query_every;
  j["exact_budget"] = cfg.exact_budget;
  j["sic_prune"] = cfg.sic_prune;
  j["grace"] = cfg.grace ? nlohmann::ordered_json(*cfg.grace) : nlohmann::ordered_json();
  j["summary"] = {{"records", s.records},
                  {"skipped", s.skipped},
                  {"filtered", s.filtered},
                  {"missing_pos", s.missing_pos},
                  {"actions", s.actions},
                  {"orphans", s.orphans},
                  {"slides", s.slides},
                  {"queries", s.queries},
                  {"mean_throughput", s.mean_throughput},
                  {"mean_value", s.mean_value},
                  {"mean_checkpoints", s.mean_checkpoints},
                  {"max_checkpoints", s.max_checkpoints},
                  {"mean_chain_length", s.mean_chain_length}};
  out << j.dump(2) << '\n';
}

}  // namespace swim
