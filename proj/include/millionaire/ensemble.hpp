#pragma once

#include <array>
#include <span>
#include <string_view>
#include <optional>
#include <vector>

#include "millionaire/question_bank.hpp"
#include "millionaire/retrieval.hpp"
#include "millionaire/scoring.hpp"

namespace millionaire {

struct ExpertOpinion {
  ScoreVector vector;
  double confidence_ratio = 1.0;  // 0 = decisive, 1 = tie or no signal
};

enum class WeightMode { HandTuned, Confidence };

std::string_view to_string(WeightMode m);
std::optional<WeightMode> parse_weight_mode(std::string_view name);

// One weight per expert, each in [0,1], summing to 1.
struct WeightVector {
  std::vector<double> weights;
  WeightMode mode = WeightMode::Confidence;
};

struct CombinedScores {
  std::array<double, kChoiceCount> c{};
  // Choices still in play; 50/50 removes two.
  std::array<bool, kChoiceCount> available{true, true, true, true};
  int chosen_index = 0;
  double overall_ratio = 1.0;
  bool inverted = false;
};

// Per-strategy weights for hand-tuned mode.
struct HandWeights {
  double naive = 0.40;
  double proximity = 0.15;
  double noun_phrase = 0.45;

  double of(Strategy s) const;
};

// Standard: second-highest / highest. Inverted: lowest / second-lowest.
// A zero denominator (or fewer than two scores) gives 1.
double confidence_ratio(std::span<const double> scores, bool inverted);

// w_s = (1 - x_s^4) / sum(1 - x^4); uniform when every ratio is 1.
WeightVector confidence_weights(std::span<const double> ratios);

// Hand-tuned weights for experts listed strategy-major; each strategy's
// weight is split equally across its engines. Renormalized only when the
// selected strategies' weights do not already sum to 1.
WeightVector hand_tuned_weights(std::span<const Strategy> expert_strategies,
                                const HandWeights& hand);

// Combined scores closer than this are tied.
inline constexpr double kTieTolerance = 1e-12;

// Arg-max (arg-min when inverted) over available entries; ties go to the
// lowest index.
int select_answer(const CombinedScores& combined, bool inverted);

// c_i = sum_s w_s * S_i / max(S); an all-zero vector contributes zeros.
CombinedScores combine(std::span<const ExpertOpinion> opinions,
                       const WeightVector& weights, bool inverted);

// Recomputes chosen_index and overall_ratio from c and the available mask.
void refresh_decision(CombinedScores& combined);

struct PipelineOptions {
  std::vector<Strategy> strategies{kAllStrategies.begin(), kAllStrategies.end()};
  WeightMode weight_mode = WeightMode::Confidence;
  HandWeights hand;
  ProximityParams proximity;
};

struct AnswerBreakdown {
  QuestionFlags flags;
  std::vector<ExpertOpinion> experts;  // strategy-major, engine-minor
  WeightVector weights;
  CombinedScores combined;
};

// Runs every (strategy, engine) expert and combines them.
AnswerBreakdown answer_question(const Question& question,
                                std::span<const SearchBackend* const> engines,
                                const PipelineOptions& options,
                                const StopwordList& stopwords);

}  // namespace millionaire
