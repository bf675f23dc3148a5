#include <stdexcept>

#include "millionaire/decision.hpp"

namespace millionaire {
namespace {

std::vector<int> wrong_choices(const CombinedScores& combined, int correct) {
  std::vector<int> out;
  for (int i = 0; i < kChoiceCount; ++i) {
    if (i != correct && combined.available[i]) out.push_back(i);
  }
  return out;
}

int pick(const std::vector<int>& options, Rng& rng) {
  std::uniform_int_distribution<std::size_t> dist(0, options.size() - 1);
  return options[dist(rng)];
}

}  // namespace

CombinedScores fifty_fifty_keep(const CombinedScores& combined, int correct_index,
                                int kept_wrong_index) {
  if (kept_wrong_index == correct_index || !combined.available[kept_wrong_index]) {
    throw std::invalid_argument("50/50 must keep an available wrong choice");
  }
  CombinedScores out = combined;
  for (int i = 0; i < kChoiceCount; ++i) {
    out.available[i] = i == correct_index || i == kept_wrong_index;
  }
  refresh_decision(out);
  return out;
}

CombinedScores apply_fifty_fifty(const Question& question, const CombinedScores& combined,
                                 Rng& rng) {
  const auto wrong = wrong_choices(combined, question.correct_index);
  if (wrong.empty()) return combined;
  return fifty_fifty_keep(combined, question.correct_index, pick(wrong, rng));
}

CombinedScores apply_vote_lifeline(Lifeline kind, const Question& question,
                                   const CombinedScores& combined, const LifelineModel& model,
                                   int level, Rng& rng) {
  if (kind == Lifeline::FiftyFifty) {
    throw std::invalid_argument("apply_vote_lifeline: 50/50 is not a vote");
  }
  const auto& params = model[kind];
  std::bernoulli_distribution right(params.vote_accuracy.at(level - kMinLevel));
  const auto wrong = wrong_choices(combined, question.correct_index);
  const int voted = right(rng) || wrong.empty() ? question.correct_index : pick(wrong, rng);
  if (params.expert_weight == 0.0) return combined;

  // The vote enters as a max-normalized expert. For "not" questions the
  // named choice is the odd one out, so the vote marks every other choice.
  CombinedScores out = combined;
  for (int i = 0; i < kChoiceCount; ++i) {
    if (!out.available[i]) continue;
    const bool marked = out.inverted ? i != voted : i == voted;
    if (marked) out.c[i] += params.expert_weight;
  }
  refresh_decision(out);
  return out;
}

}  // namespace millionaire
