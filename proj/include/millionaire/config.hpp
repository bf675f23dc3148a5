#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "millionaire/decision.hpp"
#include "millionaire/ensemble.hpp"
#include "millionaire/live_backend.hpp"
#include "millionaire/retrieval.hpp"
#include "millionaire/simulator.hpp"

namespace millionaire {

enum class EngineType { Local, Live };

struct EngineConfig {
  std::string id = "local";
  EngineType type = EngineType::Local;
  std::filesystem::path corpus;  // local: build the index from this corpus
  std::filesystem::path index;   // local: or load a saved index
  LiveEndpoint live;
};

enum class OracleKind { Synthetic, Pipeline };

std::string_view to_string(OracleKind k);

struct OutputPaths {
  std::filesystem::path index;
  std::filesystem::path report;
  std::filesystem::path sweep;
  std::filesystem::path eval;
  std::filesystem::path calibration;
  std::filesystem::path trace;
};

struct Config {
  std::filesystem::path bank;
  std::filesystem::path corpus;
  std::vector<EngineConfig> engines;  // empty: one local engine over `corpus`
  PipelineOptions pipeline;
  RiskParams risk;
  LevelAccuracy levels;
  LifelineModel lifelines = LifelineModel::defaults();
  SyntheticModel synthetic;  // accuracy is taken from `levels`
  OracleKind oracle = OracleKind::Synthetic;
  std::size_t n_games = 10000;
  int handicap = 0;
  bool forced_answer = false;
  std::uint64_t seed = 7;
  unsigned threads = 0;
  OutputPaths output;

  SimulationParams simulation() const;
  SyntheticModel synthetic_model() const;
};

// Parses a config document. Relative paths resolve against base_dir. Unknown
// keys, bad values and missing input files raise DataError naming `source`.
Config parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir,
                    const std::string& source);
Config load_config(const std::filesystem::path& path);

// Checks value ranges and that every input path exists; throws DataError.
void validate_config(const Config& config, const std::string& source);

std::vector<std::unique_ptr<SearchBackend>> build_engines(const Config& config);

}  // namespace millionaire
