#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "millionaire/ensemble.hpp"
#include "millionaire/question_bank.hpp"
#include "millionaire/random.hpp"

namespace millionaire {

using Dollars = std::int64_t;

// Declaration order is the tie-break order among lifelines.
enum class Lifeline : std::uint8_t { FiftyFifty = 0, PollAudience = 1, PhoneAFriend = 2 };

inline constexpr std::array<Lifeline, 3> kAllLifelines = {
    Lifeline::FiftyFifty, Lifeline::PollAudience, Lifeline::PhoneAFriend};

std::string_view to_string(Lifeline l);

class LifelineSet {
 public:
  constexpr LifelineSet() = default;
  static constexpr LifelineSet all() { return LifelineSet(0b111); }
  static constexpr LifelineSet from_mask(std::uint8_t mask) { return LifelineSet(mask & 0b111); }

  constexpr bool contains(Lifeline l) const { return bits_ & bit(l); }
  constexpr LifelineSet without(Lifeline l) const { return LifelineSet(bits_ & ~bit(l)); }
  constexpr LifelineSet with(Lifeline l) const { return LifelineSet(bits_ | bit(l)); }
  constexpr std::uint8_t mask() const { return bits_; }
  constexpr int size() const { return (bits_ & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool operator==(const LifelineSet&) const = default;

 private:
  constexpr explicit LifelineSet(std::uint8_t bits) : bits_(bits) {}
  static constexpr std::uint8_t bit(Lifeline l) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(l));
  }
  std::uint8_t bits_ = 0;
};

// Prize ladder. Stages are 1-based: answering stage s correctly banks
// ladder[s - 1].
struct GameRules {
  std::vector<Dollars> ladder;
  std::vector<int> milestone_stages;  // ascending
  std::vector<int> stage_levels;      // difficulty level of each stage

  // The 15-rung ladder with milestones after stages 5 and 10.
  static GameRules millionaire();

  int stages() const { return static_cast<int>(ladder.size()); }
  // Prize held after `completed` correct answers (0 for none).
  Dollars prize_at(int completed) const;
  int level_of(int stage) const { return stage_levels.at(stage - 1); }
  Dollars top_prize() const { return ladder.back(); }
};

// Exponential utility scale. No k means risk neutral (utility = dollars).
struct RiskParams {
  std::optional<double> k = 250000.0;
  double alpha = 4.0;

  bool risk_neutral() const { return !k.has_value(); }
  static RiskParams neutral(double alpha = 4.0) { return RiskParams{std::nullopt, alpha}; }
};

// Historical accuracy per difficulty level (index 0 = level 1).
struct LevelAccuracy {
  std::array<double, kMaxLevel> p{0.86, 0.75, 0.70, 0.65, 0.60, 0.55, 0.50};

  double at(int level) const { return p.at(level - kMinLevel); }
};

struct LifelineParams {
  double historical_boost = 0.0;
  std::array<double, kMaxLevel> vote_accuracy{};
  double expert_weight = 1.0;
};

struct LifelineModel {
  std::array<LifelineParams, 3> params;

  static LifelineModel defaults();
  const LifelineParams& operator[](Lifeline l) const {
    return params[static_cast<std::size_t>(l)];
  }
  LifelineParams& operator[](Lifeline l) { return params[static_cast<std::size_t>(l)]; }
};

struct GameState {
  int next_stage = 1;
  LifelineSet lifelines = LifelineSet::all();
  Dollars banked = 0;
};

// Declaration order is the tie-break order.
enum class Action : std::uint8_t { Answer, FiftyFifty, PollAudience, PhoneAFriend, WalkAway };

std::string_view to_string(Action a);
std::optional<Lifeline> lifeline_of(Action a);
Action action_for(Lifeline l);

struct BranchValue {
  Action action;
  double utility;
};

struct ActionChoice {
  Action action = Action::Answer;
  double value = 0.0;
  std::vector<BranchValue> branches;  // every available action, tie-break order
};

double utility(double amount, const RiskParams& risk);
Dollars safe_amount(int completed_stage, const GameRules& rules);
// 1-3 -> 1, then two stages per level up to 14-15 -> 7.
int stage_to_level(int stage);
double question_probability(double x, double alpha);
double lifeline_boost(double p, double historical);

// Expected-utility tree over (stage, remaining lifelines). The continuation
// table is built once; best_action only evaluates the current node.
class DecisionModel {
 public:
  DecisionModel(GameRules rules, LevelAccuracy levels, RiskParams risk, LifelineModel lifelines);

  // Expected utility on reaching `stage` with `lifelines` left, before its
  // question is seen. stage == stages() + 1 means the top prize is won.
  double continuation(int stage, LifelineSet lifelines) const;
  ActionChoice best_action(const GameState& state, double p_current) const;

  const GameRules& rules() const { return rules_; }
  const RiskParams& risk() const { return risk_; }

 private:
  // Node value with success probability p and the given continuation.
  ActionChoice evaluate(int stage, LifelineSet lifelines, Dollars banked, double p) const;

  GameRules rules_;
  LevelAccuracy levels_;
  RiskParams risk_;
  LifelineModel lifelines_;
  std::vector<std::array<double, 8>> table_;  // [stage][lifeline mask]
};

ActionChoice best_action(const GameState& state, double p_current, const LevelAccuracy& levels,
                         const RiskParams& risk, const LifelineModel& lifelines,
                         const GameRules& rules);

// Keeps the correct choice and one random wrong one; the pending answer
// becomes the better remaining choice.
CombinedScores apply_fifty_fifty(const Question& question, const CombinedScores& combined,
                                 Rng& rng);
// 50/50 with the surviving wrong choice fixed.
CombinedScores fifty_fifty_keep(const CombinedScores& combined, int correct_index,
                                int kept_wrong_index);

// Adds a synthesized vote as an extra expert weighted by expert_weight. The
// vote names the correct choice with probability vote_accuracy(level).
CombinedScores apply_vote_lifeline(Lifeline kind, const Question& question,
                                   const CombinedScores& combined, const LifelineModel& model,
                                   int level, Rng& rng);

}  // namespace millionaire
