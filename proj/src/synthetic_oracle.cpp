#include <algorithm>

#include "millionaire/simulator.hpp"

namespace millionaire {
namespace {

double beta_sample(double mean, double concentration, Rng& rng) {
  std::gamma_distribution<double> ga(mean * concentration, 1.0);
  std::gamma_distribution<double> gb((1.0 - mean) * concentration, 1.0);
  const double x = ga(rng);
  const double y = gb(rng);
  return x + y > 0.0 ? x / (x + y) : mean;
}

}  // namespace

PipelineOracle::PipelineOracle(std::vector<const SearchBackend*> engines,
                               PipelineOptions options, const StopwordList& stopwords)
    : engines_(std::move(engines)), options_(std::move(options)), stopwords_(stopwords) {}

AnswerBreakdown PipelineOracle::breakdown(const Question& question) const {
  return answer_question(question, engines_, options_, stopwords_);
}

CombinedScores PipelineOracle::answer(const Question& question, Rng&) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(question.id); it != cache_.end()) return it->second;
  }
  auto combined = breakdown(question).combined;
  std::lock_guard lock(mutex_);
  cache_.emplace(question.id, combined);
  return combined;
}

SyntheticDraw synthetic_answer(int level, const SyntheticModel& model, Rng& rng) {
  SyntheticDraw d;
  d.correct = std::bernoulli_distribution(std::clamp(model.accuracy.at(level), 0.0, 1.0))(rng);
  d.ratio = beta_sample(d.correct ? model.mean_correct : model.mean_incorrect,
                        model.concentration, rng);
  return d;
}

CombinedScores synthetic_scores(const Question& question, const SyntheticDraw& draw, Rng& rng) {
  std::vector<int> wrong;
  for (int i = 0; i < kChoiceCount; ++i) {
    if (i != question.correct_index) wrong.push_back(i);
  }
  const auto pick = [&rng](const std::vector<int>& from) {
    return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
  };
  const int chosen = draw.correct ? question.correct_index : pick(wrong);
  std::vector<int> others;
  for (int i = 0; i < kChoiceCount; ++i) {
    if (i != chosen) others.push_back(i);
  }
  const int runner_up = pick(others);

  CombinedScores out;
  std::uniform_real_distribution<double> below(0.0, draw.ratio);
  for (int i : others) out.c[i] = i == runner_up ? draw.ratio : below(rng);
  out.c[chosen] = 1.0;
  // Set directly: at ratio 1 the arg-max tie-break would move the choice.
  out.chosen_index = chosen;
  out.overall_ratio = draw.ratio;
  return out;
}

CombinedScores SyntheticOracle::answer(const Question& question, Rng& rng) const {
  const auto draw = synthetic_answer(question.level, model_, rng);
  return synthetic_scores(question, draw, rng);
}

}  // namespace millionaire
