#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "millionaire/cli.hpp"

using namespace millionaire;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kConfig = MILLIONAIRE_CONFIG_DIR "/default.json";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "millionaire_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("usage errors exit 1") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"bogus"}).code == kExitUsage);
  CHECK(cli({"--config", kConfig, "answer"}).code == kExitUsage);
  CHECK(cli({"--config", kConfig, "sweep", "--dimension", "k"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("data errors exit 2") {
  const auto bad = scratch() / "bad_bank.jsonl";
  std::ofstream(bad) << "{\"id\": \"x\"}\n";
  const auto r = cli({"--config", kConfig, "--bank", bad.string(), "simulate", "--games", "5"});
  CHECK(r.code == kExitData);
  CHECK_FALSE(r.err.empty());
  CHECK(cli({"--config", kConfig, "answer", "--question-id", "no-such-id"}).code == kExitData);
}

TEST_CASE("eval is deterministic and leaves the data untouched") {
  const auto bank_before = slurp(MILLIONAIRE_DATA_DIR "/bank.jsonl");
  const auto corpus_before = slurp(MILLIONAIRE_DATA_DIR "/corpus.jsonl");
  const auto a = cli({"--config", kConfig, "eval"});
  const auto b = cli({"--config", kConfig, "eval"});
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  const auto report = json::parse(a.out);
  CHECK(report["total"] == 45);
  CHECK(report["levels"].size() == 7);
  CHECK(a.err.rfind("accuracy ", 0) == 0);
  CHECK(slurp(MILLIONAIRE_DATA_DIR "/bank.jsonl") == bank_before);
  CHECK(slurp(MILLIONAIRE_DATA_DIR "/corpus.jsonl") == corpus_before);

  const auto csv = cli({"--config", kConfig, "eval", "--sweep-radius", "5,20"});
  REQUIRE(csv.code == kExitOk);
  CHECK(csv.out.rfind("value,combined_accuracy,proximity_accuracy,naive_accuracy\n", 0) == 0);
}

TEST_CASE("simulate output is byte-identical across runs") {
  const std::vector<std::string> args = {"--config", kConfig, "simulate", "--games", "500"};
  const auto a = cli(args);
  const auto b = cli(args);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  const auto report = json::parse(a.out);
  CHECK(report["n_games"] == 500);
  CHECK(report["rows"].size() == 16);
  const auto other = cli({"--config", kConfig, "--seed", "99", "simulate", "--games", "500"});
  CHECK(other.out != a.out);
}

TEST_CASE("sweep prints one CSV row per value") {
  const auto r = cli({"--config", kConfig, "sweep", "--games", "200", "--dimension", "k", "--values",
                      "5000,inf"});
  REQUIRE(r.code == kExitOk);
  std::istringstream in(r.out);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "value,avg_winnings,std_winnings,avg_right,pct_zero");
  CHECK(lines[2].rfind("inf,", 0) == 0);
  CHECK(cli({"--config", kConfig, "sweep", "--dimension", "beta", "--values", "1"}).code == kExitUsage);
}

TEST_CASE("index writes a loadable file") {
  const auto path = scratch() / "corpus.idx";
  const auto r = cli({"--config", kConfig, "--out", path.string(), "index"});
  REQUIRE(r.code == kExitOk);
  CHECK(fs::file_size(path) > 0);
  const auto again = scratch() / "corpus2.idx";
  cli({"--config", kConfig, "--out", again.string(), "index"});
  CHECK(slurp(path) == slurp(again));
}

TEST_CASE("answer prints the per-expert breakdown") {
  const auto r = cli({"--config", kConfig, "answer", "--question-id", "q001"});
  REQUIRE(r.code == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["experts"].size() == 3);
  CHECK(j["combined"].size() == 4);
  CHECK(j["chosen_index"].get<int>() >= 0);
  double total = 0;
  for (const auto& e : j["experts"]) total += e["weight"].get<double>();
  CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("play prints a parseable trace ending in one end event") {
  const auto r = cli({"--config", kConfig, "play", "--game", "3"});
  REQUIRE(r.code == kExitOk);
  std::istringstream in(r.out);
  std::vector<json> events;
  for (std::string line; std::getline(in, line);) events.push_back(json::parse(line));
  REQUIRE_FALSE(events.empty());
  CHECK(events.back()["event"] == "end");
  for (std::size_t i = 0; i + 1 < events.size(); ++i) CHECK(events[i]["event"] != "end");
  CHECK(cli({"--config", kConfig, "play", "--game", "3"}).out == r.out);
}
