#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "millionaire/decision.hpp"
#include "millionaire/ensemble.hpp"
#include "millionaire/question_bank.hpp"
#include "millionaire/random.hpp"

namespace millionaire {

// Anything that can answer a question with a scored decision.
class QAOracle {
 public:
  virtual ~QAOracle() = default;
  // Must be safe to call concurrently.
  virtual CombinedScores answer(const Question& question, Rng& rng) const = 0;
};

// The search-based answerer. Deterministic; answers are memoized by id.
class PipelineOracle final : public QAOracle {
 public:
  PipelineOracle(std::vector<const SearchBackend*> engines, PipelineOptions options,
                 const StopwordList& stopwords = StopwordList::english());

  CombinedScores answer(const Question& question, Rng& rng) const override;
  AnswerBreakdown breakdown(const Question& question) const;

 private:
  std::vector<const SearchBackend*> engines_;
  PipelineOptions options_;
  const StopwordList& stopwords_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::string, CombinedScores> cache_;
};

// Synthetic answerer: correct with the level's probability; the confidence
// ratio is Beta-distributed with mean mean_correct or mean_incorrect.
struct SyntheticModel {
  LevelAccuracy accuracy;
  double mean_correct = 0.34;
  double mean_incorrect = 0.58;
  double concentration = 5.0;  // alpha + beta of the Beta distribution
};

struct SyntheticDraw {
  bool correct = false;
  double ratio = 1.0;
};

SyntheticDraw synthetic_answer(int level, const SyntheticModel& model, Rng& rng);

// Scores consistent with a draw: the chosen choice scores 1, a random other
// choice scores the ratio, the remaining two score below it.
CombinedScores synthetic_scores(const Question& question, const SyntheticDraw& draw, Rng& rng);

class SyntheticOracle final : public QAOracle {
 public:
  explicit SyntheticOracle(SyntheticModel model) : model_(model) {}
  CombinedScores answer(const Question& question, Rng& rng) const override;
  const SyntheticModel& model() const { return model_; }

 private:
  SyntheticModel model_;
};

struct SimulationParams {
  std::size_t n_games = 10000;
  RiskParams risk;
  int handicap = 0;  // first N questions assumed answered, lifelines intact
  std::uint64_t seed = 7;
  LevelAccuracy levels;
  LifelineModel lifelines = LifelineModel::defaults();
  GameRules rules = GameRules::millionaire();
  bool forced_answer = false;  // never walk, never use a lifeline
  unsigned threads = 0;        // 0: hardware concurrency
};

enum class EndReason { Won, Wrong, Walked };
enum class StageOutcome { Right, Wrong, Walked };

std::string_view to_string(EndReason r);
std::string_view to_string(StageOutcome o);

struct DecisionStep {
  int pending = 0;  // choice the player would give now
  double p = 0.0;
  ActionChoice choice;
};

struct StageLog {
  int stage = 0;
  std::string question_id;
  StageOutcome outcome = StageOutcome::Right;
  int llused = 0;
  int llgood = 0;  // a lifeline moved the pending answer from wrong to right
  int llbad = 0;   // ... from right to wrong
  std::vector<DecisionStep> steps;  // filled only when tracing
};

struct GameRecord {
  Dollars final_prize = 0;
  int questions_right = 0;  // excludes the handicap
  int handicap = 0;
  int end_stage = 0;  // last question faced (or the top stage when won)
  EndReason end_reason = EndReason::Won;
  int lifelines_used = 0;
  int lifelines_good = 0;
  int lifelines_bad = 0;
  std::vector<StageLog> stages;
};

// One row per prize level held when the question was asked: 0, 100, ...,
// 1,000,000. Winners count as "stop" on the top row.
struct ReportRow {
  Dollars prize = 0;
  std::int64_t ending = 0;  // games ending with this prize
  std::int64_t wrong = 0;
  std::int64_t right = 0;
  std::int64_t stop = 0;
  std::int64_t llused = 0;
  std::int64_t llgood = 0;
  std::int64_t llbad = 0;
};

struct SimulationReport {
  std::size_t n_games = 0;
  std::vector<ReportRow> rows;
  double avg_right = 0.0;
  double avg_winnings = 0.0;
  double std_winnings = 0.0;  // population standard deviation
  double pct_zero = 0.0;      // percent of games ending with nothing
};

GameRecord play_game(const SimulationParams& params, Rng& rng, const QuestionBank& bank,
                     const QAOracle& oracle);
GameRecord play_game(const SimulationParams& params, Rng& rng, const QuestionBank& bank,
                     const QAOracle& oracle, const DecisionModel& model, bool trace);

// Game i uses derive_stream(seed, i); the result does not depend on the
// number of threads.
std::vector<GameRecord> simulate_records(const SimulationParams& params,
                                         const QuestionBank& bank, const QAOracle& oracle);
SimulationReport aggregate(std::span<const GameRecord> records, const GameRules& rules);
SimulationReport simulate(const SimulationParams& params, const QuestionBank& bank,
                          const QAOracle& oracle);

nlohmann::json to_json(const SimulationReport& report);
nlohmann::json to_json(const GameRecord& record);

enum class SweepDimension { K, Alpha, Handicap, Radius };

std::string_view to_string(SweepDimension d);
std::optional<SweepDimension> parse_sweep_dimension(std::string_view name);

struct SweepRow {
  double value = 0.0;
  double avg_winnings = 0.0;
  double std_winnings = 0.0;
  double avg_right = 0.0;
  double pct_zero = 0.0;
};

// One simulate() per value, all with the same seed. For K an infinite value
// means risk neutral. Radius is not a game parameter: use radius_sweep.
std::vector<SweepRow> sweep(const SimulationParams& params, SweepDimension dimension,
                            std::span<const double> values, const QuestionBank& bank,
                            const QAOracle& oracle);

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

struct LevelTally {
  int correct = 0;
  int total = 0;
};

struct AccuracyReport {
  std::array<LevelTally, kMaxLevel> levels{};
  int correct = 0;
  int total = 0;

  double overall() const { return total == 0 ? 0.0 : double(correct) / total; }
};

AccuracyReport evaluate_accuracy(const QuestionBank& bank, const QAOracle& oracle, Rng& rng);
nlohmann::json to_json(const AccuracyReport& report);

// Fraction of each level's questions the oracle answers correctly. Throws
// DataError when a level has no questions.
LevelAccuracy calibrate(const QuestionBank& bank, const QAOracle& oracle, Rng& rng);

struct RadiusRow {
  int radius = 0;
  double combined_accuracy = 0.0;
  double proximity_accuracy = 0.0;
  double naive_accuracy = 0.0;
};

// QA accuracy versus proximity radius, against the naive baseline.
std::vector<RadiusRow> radius_sweep(const QuestionBank& bank,
                                    std::vector<const SearchBackend*> engines,
                                    const PipelineOptions& options, std::span<const int> radii,
                                    const StopwordList& stopwords = StopwordList::english());

void write_radius_csv(std::ostream& out, std::span<const RadiusRow> rows);

}  // namespace millionaire
