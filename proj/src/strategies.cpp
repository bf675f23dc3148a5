#include <algorithm>

#include "millionaire/scoring.hpp"

namespace millionaire {
namespace {

using Plans = std::array<QueryPlan, kChoiceCount>;

struct StageHits {
  std::size_t stage = 0;
  std::array<std::size_t, kChoiceCount> counts{};
  bool signal = false;
};

// Advances all four plans in lockstep until some choice gets a hit.
StageHits first_signal_stage(const Plans& plans, const SearchBackend& backend) {
  std::size_t stages = 0;
  for (const auto& p : plans) stages = std::max(stages, p.stages.size());
  for (std::size_t s = 0; s < stages; ++s) {
    StageHits hits{s, {}, false};
    for (int i = 0; i < kChoiceCount; ++i) {
      hits.counts[i] = count_results(backend, plans[i].stage_or_last(s));
      hits.signal = hits.signal || hits.counts[i] > 0;
    }
    if (hits.signal) return hits;
  }
  return StageHits{stages == 0 ? 0 : stages - 1, {}, false};
}

// Fetched documents in doc-id order, so summation order is fixed.
std::vector<Document> fetch_sorted(const SearchBackend& backend, const Query& query,
                                   std::size_t k) {
  auto docs = top_documents(backend, query, k);
  std::sort(docs.begin(), docs.end(),
            [](const Document& a, const Document& b) { return a.id < b.id; });
  return docs;
}

TokenSet as_set(const std::vector<std::string>& tokens) {
  return TokenSet(tokens.begin(), tokens.end());
}

ScoreVector make_vector(Strategy s, const SearchBackend& backend) {
  ScoreVector v;
  v.strategy = s;
  v.engine_id = backend.engine_id();
  return v;
}

}  // namespace

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::NaiveCount:
      return "naive";
    case Strategy::WordProximity:
      return "proximity";
    case Strategy::NounPhraseProximity:
      return "noun_phrase";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (auto s : kAllStrategies) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

ScoreVector naive_counts(const Question& question, const QuestionFlags& flags,
                         const SearchBackend& backend, const StopwordList& stopwords) {
  Plans plans;
  for (int i = 0; i < kChoiceCount; ++i) {
    plans[i] = build_query_plan(question, flags, question.choices[i], stopwords);
  }
  const auto hits = first_signal_stage(plans, backend);
  auto v = make_vector(Strategy::NaiveCount, backend);
  for (int i = 0; i < kChoiceCount; ++i) v.scores[i] = static_cast<double>(hits.counts[i]);
  v.no_signal = !hits.signal;
  return v;
}

ScoreVector proximity_strategy(const Question& question, const QuestionFlags& flags,
                               const SearchBackend& backend, const ProximityParams& params,
                               const StopwordList& stopwords) {
  Plans plans;
  for (int i = 0; i < kChoiceCount; ++i) {
    plans[i] = build_query_plan(question, flags, question.choices[i], stopwords);
  }
  const auto hits = first_signal_stage(plans, backend);
  auto v = make_vector(Strategy::WordProximity, backend);
  v.no_signal = !hits.signal;
  if (!hits.signal) return v;

  const auto q_words = as_set(tokenize_and_filter(question.text, stopwords, true));
  for (int i = 0; i < kChoiceCount; ++i) {
    if (hits.counts[i] == 0) continue;
    const auto a_words = as_set(tokenize(question.choices[i]));
    for (const auto& doc :
         fetch_sorted(backend, plans[i].stage_or_last(hits.stage), params.docs_per_query)) {
      v.scores[i] += distance_score(doc.tokens, q_words, a_words, params.radius);
    }
  }
  return v;
}

ScoreVector noun_phrase_strategy(const Question& question, const QuestionFlags&,
                                 const SearchBackend& backend, const ProximityParams& params,
                                 const StopwordList& stopwords) {
  auto v = make_vector(Strategy::NounPhraseProximity, backend);
  v.no_signal = true;
  std::array<TokenSet, kChoiceCount> a_words;
  for (int i = 0; i < kChoiceCount; ++i) a_words[i] = as_set(tokenize(question.choices[i]));

  for (const auto& phrase : extract_noun_phrases(question.text, stopwords)) {
    Plans plans;
    for (int i = 0; i < kChoiceCount; ++i) {
      plans[i] = build_phrase_pair_plan(phrase, question.choices[i]);
    }
    const auto hits = first_signal_stage(plans, backend);
    if (!hits.signal) continue;
    v.no_signal = false;
    const auto q_words = as_set(phrase);
    for (int i = 0; i < kChoiceCount; ++i) {
      if (hits.counts[i] == 0) continue;
      for (const auto& doc : fetch_sorted(backend, plans[i].stage_or_last(hits.stage),
                                          params.docs_per_query)) {
        v.scores[i] += distance_score(doc.tokens, q_words, a_words[i], params.radius);
      }
    }
  }
  return v;
}

ScoreVector run_strategy(Strategy strategy, const Question& question,
                         const QuestionFlags& flags, const SearchBackend& backend,
                         const ProximityParams& params, const StopwordList& stopwords) {
  switch (strategy) {
    case Strategy::NaiveCount:
      return naive_counts(question, flags, backend, stopwords);
    case Strategy::WordProximity:
      return proximity_strategy(question, flags, backend, params, stopwords);
    case Strategy::NounPhraseProximity:
      return noun_phrase_strategy(question, flags, backend, params, stopwords);
  }
  return {};
}

}  // namespace millionaire
