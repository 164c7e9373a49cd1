// swim: run sliding-window influence maximization engines over action streams,
// or generate synthetic streams.

#include <fmt/format.h>

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "swim/harness/harness.hpp"

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kParse = 3, kStream = 4 };

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = std::min(s.find(',', start), s.size());
    if (end > start) out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

swim::GenConfig preset(const std::string& name) {
  if (name == "syn-o") return swim::syn_o(1 << 15, 100'000, 1);
  if (name == "syn-n") return swim::syn_n(1 << 15, 100'000, 1);
  throw swim::ConfigError("unknown generator preset '" + name + "' (expected syn-o or syn-n)");
}

struct GenFlags {
  std::string preset = "syn-n";
  std::optional<std::size_t> users, actions, edges;
  std::optional<double> follow, lambda;
  std::uint64_t seed = 1;

  void add(CLI::App& app) {
    app.add_option("--users", users, "Number of users (|U|)");
    app.add_option("--actions", actions, "Number of actions to emit");
    app.add_option("--follow", follow, "Fraction of follow actions, in [0,1]");
    app.add_option("--lambda", lambda, "Rate of the exponential response distance");
    app.add_option("--edges", edges, "R-MAT edge count (0 = uniform user weights)");
  }

  swim::GenConfig resolve() const {
    swim::GenConfig g = preset_config();
    if (users) g.num_users = *users;
    if (actions) g.num_actions = *actions;
    if (follow) g.follow_fraction = *follow;
    if (lambda) g.lambda = *lambda;
    if (edges) g.edges = *edges;
    g.seed = seed;
    return g;
  }

  swim::GenConfig preset_config() const { return ::preset(preset); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sliding-window stream influence maximization"};
  app.require_subcommand(1);

  // run
  CLI::App* run_cmd = app.add_subcommand("run", "Run an engine over an action stream");
  swim::RunConfig rc;
  std::string engine = "sic", function = "cardinality", filter_tags, filter_box;
  std::string gen_preset;
  GenFlags gen;
  std::optional<std::size_t> grace;
  bool no_prune = false;
  run_cmd->add_option("--engine", engine, "ic, sic, greedy or exact")->capture_default_str();
  auto* input_opt = run_cmd->add_option("--input", rc.input_path, "NDJSON or CSV stream ('-' for stdin)");
  run_cmd->add_option("--gen", gen_preset, "Generate the input instead: syn-o or syn-n")->excludes(input_opt);
  gen.add(*run_cmd);
  run_cmd->add_option("--n", rc.window.window, "Window size N in actions")->required();
  run_cmd->add_option("--l", rc.window.slide, "Actions per slide L")->capture_default_str();
  run_cmd->add_option("--k", rc.window.k, "Seed set size")->required();
  run_cmd->add_option("--beta", rc.window.beta, "Lattice/pruning parameter in (0,1)")->capture_default_str();
  run_cmd->add_option("--function", function, "cardinality or weighted")->capture_default_str();
  run_cmd->add_option("--weights", rc.weights_path, "user,weight CSV for --function weighted");
  run_cmd->add_option("--filter-tags", filter_tags, "Comma-separated tags; keep actions sharing one");
  run_cmd->add_option("--filter-box", filter_box, "xmin,ymin,xmax,ymax; keep actions inside");
  run_cmd->add_option("--query-every", rc.query_every, "Query every n-th slide")->capture_default_str();
  run_cmd->add_option("--out-results", rc.results_path, "Results CSV ('-' for stdout)")->capture_default_str();
  run_cmd->add_option("--out-metrics", rc.metrics_path, "Per-slide metrics CSV");
  run_cmd->add_option("--out-checkpoints", rc.checkpoints_path, "Per-slide checkpoint dump (ic, sic)");
  run_cmd->add_option("--out-manifest", rc.manifest_path, "JSON echo of the config and summary");
  run_cmd->add_flag("--strict", rc.strict, "Fail on the first malformed record");
  run_cmd->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
  run_cmd->add_option("--exact-budget", rc.exact_budget, "Max subsets for --engine exact")->capture_default_str();
  run_cmd->add_flag("--no-prune", no_prune, "Disable SIC pruning");
  run_cmd->add_option("--grace", grace, "Keep index entries this many positions before the window");
  run_cmd->add_flag("--results-timing", rc.results_timing, "Fill update_micros in the results CSV");
  rc.results_path = "-";

  // generate
  CLI::App* gen_cmd = app.add_subcommand("generate", "Emit a synthetic NDJSON stream");
  GenFlags g2;
  std::string gen_out = "-", gen_manifest;
  gen_cmd->add_option("--preset", g2.preset, "syn-o or syn-n")->capture_default_str();
  g2.add(*gen_cmd);
  gen_cmd->add_option("--seed", g2.seed, "RNG seed")->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "Output NDJSON ('-' for stdout)")->capture_default_str();
  gen_cmd->add_option("--manifest", gen_manifest, "Sidecar JSON with config and stats");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run_cmd) {
      rc.engine = swim::parse_engine_kind(engine);
      rc.function = swim::parse_function_kind(function);
      rc.sic_prune = !no_prune;
      rc.grace = grace;
      if (!filter_tags.empty()) rc.filter.tags = split_list(filter_tags);
      if (!filter_box.empty()) {
        const auto parts = split_list(filter_box);
        if (parts.size() != 4) throw swim::ConfigError("--filter-box needs four numbers");
        std::array<double, 4> box{};
        for (std::size_t i = 0; i < 4; ++i) {
          const char* end = parts[i].data() + parts[i].size();
          const auto [ptr, ec] = std::from_chars(parts[i].data(), end, box[i]);
          if (ec != std::errc{} || ptr != end || !std::isfinite(box[i])) {
            throw swim::ConfigError("--filter-box: not a number: '" + std::string(parts[i]) + "'");
          }
        }
        rc.filter.box = box;
      }
      if (!gen_preset.empty()) {
        gen.preset = gen_preset;
        rc.gen = gen.resolve();
      } else if (rc.input_path.empty()) {
        throw swim::ConfigError("one of --input or --gen is required");
      }
      const swim::RunSummary s = swim::run(rc);
      std::cerr << fmt::format("{} slides, {} actions, mean value {:.4g}, mean checkpoints {:.2f}, {:.0f} actions/s",
                               s.slides, s.actions, s.mean_value, s.mean_checkpoints, s.mean_throughput);
      if (s.skipped) std::cerr << fmt::format(", {} skipped", s.skipped);
      if (s.filtered + s.missing_pos) std::cerr << fmt::format(", {} filtered", s.filtered + s.missing_pos);
      std::cerr << '\n';
    } else {
      const swim::GenConfig g = g2.resolve();
      const swim::GeneratedStream gs = swim::generate(g);
      if (gen_out == "-") {
        swim::write_ndjson(std::cout, gs.actions);
      } else {
        std::ofstream out(gen_out);
        if (!out) throw swim::ConfigError("cannot write " + gen_out);
        swim::write_ndjson(out, gs.actions);
      }
      if (!gen_manifest.empty()) {
        std::ofstream m(gen_manifest);
        if (!m) throw swim::ConfigError("cannot write " + gen_manifest);
        swim::write_gen_manifest(m, g, gs.stats);
      }
    }
  } catch (const swim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsage;
  } catch (const swim::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const swim::StreamError& e) {
    std::cerr << "stream error: " << e.what() << '\n';
    return kStream;
  } catch (const swim::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kStream;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
