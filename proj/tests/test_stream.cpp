#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "swim/stream/action_io.hpp"

using namespace swim;
using namespace swim::testing;

TEST_CASE("window bounds") {
  WindowConfig cfg;
  cfg.window = 8;
  CHECK(window_bounds(8, cfg) == std::pair<Position, Position>{1, 8});
  CHECK(window_bounds(10, cfg) == std::pair<Position, Position>{3, 10});
  CHECK(window_bounds(1, cfg) == std::pair<Position, Position>{1, 1});
  CHECK(window_bounds(5, cfg, 4) == std::pair<Position, Position>{4, 5});
}

TEST_CASE("window config validation") {
  WindowConfig cfg;
  cfg.window = 8;
  cfg.slide = 2;
  cfg.k = 2;
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.checkpoints_per_window() == 4);
  cfg.slide = 3;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.slide = 9;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.slide = 1;
  cfg.k = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.k = 1;
  cfg.beta = 1.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.beta = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("ancestor chains on the example stream") {
  Loaded l;
  load(worked_stream(), l);
  const auto c = [&](Position p) { return as_ints(l.index.chain(p)); };
  CHECK(c(1) == std::vector<int>{0});
  CHECK(c(4) == std::vector<int>{2, 0});      // a4 = <u3, a1>
  CHECK(c(10) == std::vector<int>{4, 2});     // u5 replies to u5's reply to u3: deduplicated
  CHECK(c(9) == std::vector<int>{5, 1});
  CHECK(l.index.orphan_count() == 0);
}

TEST_CASE("chain deduplicates a repeated ancestor user") {
  PropagationIndex idx;
  idx.ingest(1, 0, std::nullopt);
  idx.ingest(2, 1, 1);
  auto r = idx.ingest(3, 0, 2);
  CHECK(as_ints(r.chain) == std::vector<int>{0, 1});
}

TEST_CASE("ingest rejects duplicates, reordering and forward parents") {
  PropagationIndex idx;
  idx.ingest(5, 0, std::nullopt);
  CHECK_THROWS_AS(idx.ingest(5, 1, std::nullopt), StreamError);
  CHECK_THROWS_AS(idx.ingest(4, 1, std::nullopt), StreamError);
  CHECK_THROWS_AS(idx.ingest(7, 1, 7), StreamError);
  CHECK_THROWS_AS(idx.ingest(8, 1, 9), StreamError);
  CHECK(idx.ingested() == 1);
}

TEST_CASE("unknown parent degrades to a root and is counted") {
  PropagationIndex idx;
  idx.ingest(10, 3, std::nullopt);
  auto r = idx.ingest(11, 4, 2);
  CHECK(r.orphaned);
  CHECK(as_ints(r.chain) == std::vector<int>{4});
  CHECK(idx.orphan_count() == 1);
  CHECK(idx.find(10) == Position{1});
  CHECK_FALSE(idx.find(2).has_value());
}

TEST_CASE("property: chain equals user followed by the parent's chain, deduplicated") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const RawStream s = random_stream(rng, 1 + trial % 9, 30, 0.8);
    Loaded l;
    load(s, l);
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::vector<int> expect;
      for (int a = static_cast<int>(i); a >= 0; a = s.parent[a]) {
        if (std::find(expect.begin(), expect.end(), s.user[a]) == expect.end()) expect.push_back(s.user[a]);
      }
      REQUIRE(as_ints(l.index.chain(i + 1)) == expect);
    }
  }
}

TEST_CASE("property: mean chain length matches an independent walk") {
  std::mt19937_64 rng(11);
  const RawStream s = random_stream(rng, 50, 2000, 0.7);
  Loaded l;
  load(s, l);
  double total = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::set<int> seen;
    for (int a = static_cast<int>(i); a >= 0; a = s.parent[a]) seen.insert(s.user[a]);
    total += static_cast<double>(seen.size());
  }
  CHECK(l.index.mean_chain_length() == doctest::Approx(total / static_cast<double>(s.size())));
}

TEST_CASE("property: eviction keeps chains of live actions") {
  // Replies reach at most 10 actions back and eviction lags 40 behind, so no
  // retained action ever needs an evicted parent.
  std::mt19937_64 rng(3);
  RawStream s;
  s.num_users = 10;
  for (int i = 0; i < 300; ++i) {
    s.user.push_back(static_cast<int>(rng() % 10));
    s.parent.push_back(i > 0 && rng() % 4 ? i - 1 - static_cast<int>(rng() % std::min(i, 10)) : -1);
  }
  Loaded full;
  load(s, full);
  PropagationIndex evicting;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::optional<Seq> parent;
    if (s.parent[i] >= 0) parent = s.parent[i] + 1;
    evicting.ingest(static_cast<Seq>(i + 1), static_cast<UserId>(s.user[i]), parent);
    if (i % 17 == 16) {
      evicting.evict_before(i + 2 > 40 ? i + 2 - 40 : 1);
      for (Position p = evicting.first(); p <= evicting.last(); ++p) {
        REQUIRE(as_ints(evicting.chain(p)) == as_ints(full.index.chain(p)));
      }
    }
  }
  CHECK(evicting.orphan_count() == 0);
  CHECK(evicting.first() > 1);
}

TEST_CASE("ndjson round trip and errors") {
  Action a = parse_ndjson_action(R"({"seq": 4, "user": "u3", "parent": 1, "tags": ["news"], "pos": [0.5, 1]})", 1);
  CHECK(a.seq == 4);
  CHECK(a.user == "u3");
  CHECK(a.parent == Seq{1});
  CHECK(a.tags == std::vector<std::string>{"news"});
  REQUIRE(a.pos.has_value());
  CHECK((*a.pos)[1] == 1.0);
  Action b = parse_ndjson_action(to_ndjson(a), 1);
  CHECK(b.seq == a.seq);
  CHECK(b.parent == a.parent);
  CHECK(b.tags == a.tags);
  CHECK(to_ndjson(parse_ndjson_action(R"({"seq":1,"user":"x","parent":null})", 1)) ==
        R"({"seq":1,"user":"x","parent":null})");

  CHECK_THROWS_AS(parse_ndjson_action("{not json", 3), ParseError);
  CHECK_THROWS_AS(parse_ndjson_action(R"({"user":"x"})", 3), ParseError);
  CHECK_THROWS_AS(parse_ndjson_action(R"({"seq":"1","user":"x"})", 3), ParseError);
  try {
    parse_ndjson_action("[]", 42);
  } catch (const ParseError& e) {
    CHECK(e.line() == 42);
  }
}

TEST_CASE("csv records") {
  Action a = parse_csv_action("7,alice,", 2);
  CHECK(a.seq == 7);
  CHECK_FALSE(a.parent.has_value());
  Action b = parse_csv_action("8,\"bob, jr\",7", 2);
  CHECK(b.user == "bob, jr");
  CHECK(b.parent == Seq{7});
  CHECK_THROWS_AS(parse_csv_action("x,alice,", 2), ParseError);
  CHECK_THROWS_AS(parse_csv_action("1,alice", 2), ParseError);
  CHECK(format_for_path("a/b.csv") == StreamFormat::Csv);
  CHECK(format_for_path("a/b.ndjson") == StreamFormat::Ndjson);
}

TEST_CASE("reader: strict throws, lenient skips and counts") {
  const std::string text = "{\"seq\":1,\"user\":\"a\",\"parent\":null}\n\ngarbage\n{\"seq\":2,\"user\":\"b\",\"parent\":1}\n";
  {
    std::istringstream in(text);
    ActionReader r(in, StreamFormat::Ndjson, true);
    CHECK(r.next().has_value());
    CHECK_THROWS_AS(r.next(), ParseError);
  }
  {
    std::istringstream in(text);
    ActionReader r(in, StreamFormat::Ndjson, false);
    int n = 0;
    while (r.next()) ++n;
    CHECK(n == 2);
    CHECK(r.skipped() == 1);
  }
  {
    std::istringstream in("seq,user,parent\n1,a,\n2,b,1\n");
    ActionReader r(in, StreamFormat::Csv, true);
    auto a = r.next();
    REQUIRE(a);
    CHECK(a->user == "a");
    CHECK(r.next()->parent == Seq{1});
    CHECK_FALSE(r.next());
  }
}

TEST_CASE("user table weights") {
  UserTable t;
  const UserId a = t.intern("a");
  CHECK(t.intern("a") == a);
  CHECK(t.weight(a) == 1.0);
  t.set_weight("a", 2.5);
  t.set_weight("b", 4.0);
  CHECK(t.weight(a) == 2.5);
  const UserId b = t.intern("b");
  CHECK(t.weight(b) == 4.0);
  CHECK(t.find("b") == b);
  CHECK_THROWS_AS(t.find("zz"), ConfigError);
  CHECK_THROWS_AS(t.set_weight("c", -1.0), ConfigError);
}
