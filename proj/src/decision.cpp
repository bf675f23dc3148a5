#include "millionaire/decision.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace millionaire {

std::string_view to_string(Lifeline l) {
  switch (l) {
    case Lifeline::FiftyFifty:
      return "fifty_fifty";
    case Lifeline::PollAudience:
      return "poll_audience";
    case Lifeline::PhoneAFriend:
      return "phone_a_friend";
  }
  return "?";
}

std::string_view to_string(Action a) {
  switch (a) {
    case Action::Answer:
      return "answer";
    case Action::WalkAway:
      return "walk_away";
    default:
      return to_string(*lifeline_of(a));
  }
}

std::optional<Lifeline> lifeline_of(Action a) {
  switch (a) {
    case Action::FiftyFifty:
      return Lifeline::FiftyFifty;
    case Action::PollAudience:
      return Lifeline::PollAudience;
    case Action::PhoneAFriend:
      return Lifeline::PhoneAFriend;
    default:
      return std::nullopt;
  }
}

Action action_for(Lifeline l) {
  switch (l) {
    case Lifeline::FiftyFifty:
      return Action::FiftyFifty;
    case Lifeline::PollAudience:
      return Action::PollAudience;
    case Lifeline::PhoneAFriend:
      return Action::PhoneAFriend;
  }
  return Action::Answer;
}

GameRules GameRules::millionaire() {
  GameRules r;
  r.ladder = {100,   200,   300,   500,    1000,   2000,   4000,   8000,
              16000, 32000, 64000, 125000, 250000, 500000, 1000000};
  r.milestone_stages = {5, 10};
  for (int s = 1; s <= 15; ++s) r.stage_levels.push_back(stage_to_level(s));
  return r;
}

Dollars GameRules::prize_at(int completed) const {
  return completed <= 0 ? 0 : ladder.at(static_cast<std::size_t>(completed - 1));
}

LifelineModel LifelineModel::defaults() {
  LifelineModel m;
  m[Lifeline::PollAudience].vote_accuracy = {0.95, 0.90, 0.80, 0.70, 0.60, 0.50, 0.40};
  m[Lifeline::PhoneAFriend].vote_accuracy = {0.90, 0.85, 0.75, 0.65, 0.55, 0.50, 0.45};
  return m;
}

double utility(double amount, const RiskParams& risk) {
  if (risk.risk_neutral()) return amount;
  return -std::expm1(-amount / *risk.k);
}

Dollars safe_amount(int completed_stage, const GameRules& rules) {
  Dollars safe = 0;
  for (int m : rules.milestone_stages) {
    if (completed_stage >= m) safe = rules.prize_at(m);
  }
  return safe;
}

int stage_to_level(int stage) {
  if (stage < 1 || stage > 15) {
    throw std::out_of_range("stage " + std::to_string(stage) + " outside [1,15]");
  }
  return stage <= 3 ? 1 : (stage - 4) / 2 + 2;
}

double question_probability(double x, double alpha) {
  return 1.0 - std::pow(std::clamp(x, 0.0, 1.0), alpha);
}

double lifeline_boost(double p, double historical) {
  return std::max(-p * p + 2.0 * p, historical);
}

DecisionModel::DecisionModel(GameRules rules, LevelAccuracy levels, RiskParams risk,
                             LifelineModel lifelines)
    : rules_(std::move(rules)),
      levels_(levels),
      risk_(risk),
      lifelines_(lifelines),
      table_(static_cast<std::size_t>(rules_.stages()) + 2) {
  const int n = rules_.stages();
  if (n < 1 || rules_.stage_levels.size() != rules_.ladder.size()) {
    throw std::invalid_argument("GameRules: ladder and stage levels must be non-empty and aligned");
  }
  table_[n + 1].fill(utility(static_cast<double>(rules_.top_prize()), risk_));
  for (int s = n; s >= 1; --s) {
    const double p = levels_.at(rules_.level_of(s));
    for (std::uint8_t mask = 0; mask < 8; ++mask) {
      table_[s][mask] = evaluate(s, LifelineSet::from_mask(mask), rules_.prize_at(s - 1), p).value;
    }
  }
}

double DecisionModel::continuation(int stage, LifelineSet lifelines) const {
  if (stage < 1 || stage > rules_.stages() + 1) {
    throw std::out_of_range("stage " + std::to_string(stage) + " outside the ladder");
  }
  return table_[stage][lifelines.mask()];
}

ActionChoice DecisionModel::evaluate(int stage, LifelineSet lifelines, Dollars banked,
                                     double p) const {
  const double fail = utility(static_cast<double>(safe_amount(stage - 1, rules_)), risk_);
  const auto answer_value = [&](double prob, LifelineSet left) {
    return prob * table_[stage + 1][left.mask()] + (1.0 - prob) * fail;
  };

  ActionChoice choice;
  choice.branches.push_back({Action::Answer, answer_value(p, lifelines)});
  for (auto l : kAllLifelines) {
    if (!lifelines.contains(l)) continue;
    const double boosted = lifeline_boost(p, lifelines_[l].historical_boost);
    choice.branches.push_back({action_for(l), answer_value(boosted, lifelines.without(l))});
  }
  choice.branches.push_back({Action::WalkAway, utility(static_cast<double>(banked), risk_)});

  const BranchValue* best = &choice.branches.front();
  for (const auto& b : choice.branches) {
    if (b.utility > best->utility) best = &b;
  }
  choice.action = best->action;
  choice.value = best->utility;
  return choice;
}

ActionChoice DecisionModel::best_action(const GameState& state, double p_current) const {
  if (state.next_stage < 1 || state.next_stage > rules_.stages()) {
    throw std::out_of_range("best_action: terminal or invalid stage " +
                            std::to_string(state.next_stage));
  }
  return evaluate(state.next_stage, state.lifelines, state.banked, p_current);
}

ActionChoice best_action(const GameState& state, double p_current, const LevelAccuracy& levels,
                         const RiskParams& risk, const LifelineModel& lifelines,
                         const GameRules& rules) {
  return DecisionModel(rules, levels, risk, lifelines).best_action(state, p_current);
}

}  // namespace millionaire
