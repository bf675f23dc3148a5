#include "millionaire/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace millionaire {

std::string_view to_string(WeightMode m) {
  return m == WeightMode::HandTuned ? "hand_tuned" : "confidence";
}

std::optional<WeightMode> parse_weight_mode(std::string_view name) {
  if (name == "hand_tuned") return WeightMode::HandTuned;
  if (name == "confidence") return WeightMode::Confidence;
  return std::nullopt;
}

double HandWeights::of(Strategy s) const {
  switch (s) {
    case Strategy::NaiveCount:
      return naive;
    case Strategy::WordProximity:
      return proximity;
    case Strategy::NounPhraseProximity:
      return noun_phrase;
  }
  return 0.0;
}

double confidence_ratio(std::span<const double> scores, bool inverted) {
  if (scores.size() < 2) return 1.0;
  std::vector<double> sorted(scores.begin(), scores.end());
  std::sort(sorted.begin(), sorted.end());
  const double num = inverted ? sorted[0] : sorted[sorted.size() - 2];
  const double den = inverted ? sorted[1] : sorted[sorted.size() - 1];
  if (den <= 0.0) return 1.0;
  return std::clamp(num / den, 0.0, 1.0);
}

WeightVector confidence_weights(std::span<const double> ratios) {
  WeightVector w;
  w.mode = WeightMode::Confidence;
  w.weights.reserve(ratios.size());
  double total = 0.0;
  for (double x : ratios) {
    const double x2 = x * x;
    w.weights.push_back(1.0 - x2 * x2);
    total += w.weights.back();
  }
  if (total <= 0.0) {
    std::fill(w.weights.begin(), w.weights.end(), 1.0 / static_cast<double>(ratios.size()));
    return w;
  }
  for (auto& v : w.weights) v /= total;
  return w;
}

WeightVector hand_tuned_weights(std::span<const Strategy> expert_strategies,
                                const HandWeights& hand) {
  WeightVector w;
  w.mode = WeightMode::HandTuned;
  for (auto s : expert_strategies) {
    const auto engines = std::count(expert_strategies.begin(), expert_strategies.end(), s);
    w.weights.push_back(hand.of(s) / static_cast<double>(engines));
  }
  // Strategy-level sum, so an exact 0.40 + 0.15 + 0.45 stays untouched.
  double total = 0.0;
  for (auto s : kAllStrategies) {
    if (std::find(expert_strategies.begin(), expert_strategies.end(), s) !=
        expert_strategies.end()) {
      total += hand.of(s);
    }
  }
  if (total <= 0.0) {
    std::fill(w.weights.begin(), w.weights.end(),
              1.0 / static_cast<double>(w.weights.size()));
  } else if (std::abs(total - 1.0) > 1e-12) {
    for (auto& v : w.weights) v /= total;
  }
  return w;
}

int select_answer(const CombinedScores& combined, bool inverted) {
  int best = -1;
  for (int i = 0; i < kChoiceCount; ++i) {
    if (!combined.available[i]) continue;
    if (best < 0 || (inverted ? combined.c[i] < combined.c[best] - kTieTolerance
                              : combined.c[i] > combined.c[best] + kTieTolerance)) {
      best = i;
    }
  }
  return best < 0 ? 0 : best;
}

void refresh_decision(CombinedScores& combined) {
  std::vector<double> live;
  for (int i = 0; i < kChoiceCount; ++i) {
    if (combined.available[i]) live.push_back(combined.c[i]);
  }
  combined.chosen_index = select_answer(combined, combined.inverted);
  combined.overall_ratio = confidence_ratio(live, combined.inverted);
}

CombinedScores combine(std::span<const ExpertOpinion> opinions, const WeightVector& weights,
                       bool inverted) {
  if (opinions.size() != weights.weights.size() || opinions.empty()) {
    throw std::invalid_argument("combine: need one weight per expert and at least one expert");
  }
  CombinedScores out;
  out.inverted = inverted;
  for (std::size_t e = 0; e < opinions.size(); ++e) {
    const auto& s = opinions[e].vector.scores;
    const double top = *std::max_element(s.begin(), s.end());
    if (top <= 0.0) continue;
    for (int i = 0; i < kChoiceCount; ++i) {
      out.c[i] += weights.weights[e] * (s[i] / top);
    }
  }
  refresh_decision(out);
  return out;
}

AnswerBreakdown answer_question(const Question& question,
                                std::span<const SearchBackend* const> engines,
                                const PipelineOptions& options,
                                const StopwordList& stopwords) {
  if (options.strategies.empty() || engines.empty()) {
    throw std::invalid_argument("answer_question: need at least one strategy and one engine");
  }
  AnswerBreakdown out;
  out.flags = classify(question);
  std::vector<Strategy> per_expert;
  std::vector<double> ratios;
  for (auto strategy : options.strategies) {
    for (const SearchBackend* engine : engines) {
      ExpertOpinion op;
      op.vector = run_strategy(strategy, question, out.flags, *engine, options.proximity,
                               stopwords);
      op.confidence_ratio = confidence_ratio(op.vector.scores, out.flags.inverted);
      ratios.push_back(op.confidence_ratio);
      per_expert.push_back(strategy);
      out.experts.push_back(std::move(op));
    }
  }
  out.weights = options.weight_mode == WeightMode::HandTuned
                    ? hand_tuned_weights(per_expert, options.hand)
                    : confidence_weights(ratios);
  out.combined = combine(out.experts, out.weights, out.flags.inverted);
  return out;
}

}  // namespace millionaire
