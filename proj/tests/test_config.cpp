#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "millionaire/config.hpp"
#include "millionaire/errors.hpp"

using namespace millionaire;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path kData = MILLIONAIRE_DATA_DIR;

json minimal() { return json{{"bank", "bank.jsonl"}, {"corpus", "corpus.jsonl"}}; }

}  // namespace

TEST_CASE("bundled default config loads") {
  const auto c = load_config(fs::path(MILLIONAIRE_CONFIG_DIR) / "default.json");
  CHECK(fs::exists(c.bank));
  CHECK(c.engines.size() == 1);
  CHECK(c.pipeline.proximity.radius == 20);
  CHECK(c.risk.k == 250000.0);
  CHECK(c.levels.p[0] == 0.86);
  CHECK(c.oracle == OracleKind::Synthetic);
  CHECK(c.simulation().n_games == c.n_games);
}

TEST_CASE("relative paths resolve against the config directory") {
  const auto c = parse_config(minimal(), kData, "mem");
  CHECK(c.bank == (kData / "bank.jsonl").lexically_normal());
  CHECK(c.corpus == (kData / "corpus.jsonl").lexically_normal());
  const auto engines = build_engines(c);
  REQUIRE(engines.size() == 1);
  CHECK(engines[0]->engine_id() == "local");
}

TEST_CASE("unknown keys are rejected with their path") {
  auto doc = minimal();
  doc["risk"] = {{"k", 1000}, {"gamma", 2}};
  try {
    parse_config(doc, kData, "mem");
    FAIL("expected a data error");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("risk.gamma") != std::string::npos);
  }
  doc = minimal();
  doc["colour"] = "blue";
  CHECK_THROWS_AS(parse_config(doc, kData, "mem"), DataError);
}

TEST_CASE("risk neutral and value ranges") {
  auto doc = minimal();
  doc["risk"] = {{"k", "risk_neutral"}};
  CHECK_FALSE(parse_config(doc, kData, "mem").risk.k.has_value());
  for (const json bad : {json{{"risk", {{"k", -5}}}}, json{{"risk", {{"alpha", 0}}}},
                         json{{"proximity", {{"radius", 0}}}},
                         json{{"simulation", {{"handicap", 16}}}},
                         json{{"simulation", {{"n_games", 0}}}},
                         json{{"levels", {0.5, 0.5}}},
                         json{{"simulation", {{"synthetic", {{"mean_correct", 1.0}}}}}}}) {
    auto d = minimal();
    d.update(bad);
    CHECK_THROWS_AS(parse_config(d, kData, "mem"), DataError);
  }
}

TEST_CASE("missing inputs and duplicate engines") {
  auto doc = minimal();
  doc["bank"] = "nope.jsonl";
  CHECK_THROWS_AS(parse_config(doc, kData, "mem"), DataError);

  doc = minimal();
  doc["engines"] = json::array({{{"id", "a"}, {"type", "local"}, {"corpus", "corpus.jsonl"}},
                                {{"id", "a"}, {"type", "local"}, {"corpus", "corpus.jsonl"}}});
  CHECK_THROWS_AS(parse_config(doc, kData, "mem"), DataError);

  doc["engines"] = json::array({{{"id", "a"}, {"type", "local"}}});
  CHECK_THROWS_AS(parse_config(doc, kData, "mem"), DataError);

  doc = minimal();
  doc["output"] = {{"report", "no/such/dir/report.json"}};
  CHECK_THROWS_AS(parse_config(doc, kData, "mem"), DataError);

  CHECK_THROWS_AS(load_config(kData / "missing.json"), DataError);
}

TEST_CASE("live engines parse their endpoint") {
  auto doc = minimal();
  doc["engines"] = json::array({{{"id", "web"},
                                 {"type", "live"},
                                 {"base_url", "http://127.0.0.1:9"},
                                 {"syntax", "altavista"},
                                 {"min_interval_ms", 5}}});
  const auto c = parse_config(doc, kData, "mem");
  REQUIRE(c.engines.size() == 1);
  CHECK(c.engines[0].type == EngineType::Live);
  CHECK(c.engines[0].live.base_url == "http://127.0.0.1:9");
  CHECK(c.engines[0].live.min_interval == std::chrono::milliseconds(5));
  CHECK(c.engines[0].live.syntax.exclusion_prefix == "NOT url:.");
}
