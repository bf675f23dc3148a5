#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "millionaire/question_bank.hpp"
#include "millionaire/retrieval.hpp"

namespace millionaire {

enum class Strategy { NaiveCount, WordProximity, NounPhraseProximity };

inline constexpr std::array<Strategy, 3> kAllStrategies = {
    Strategy::NaiveCount, Strategy::WordProximity, Strategy::NounPhraseProximity};

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

// One expert's raw scores for the four choices. Entries are finite and >= 0.
struct ScoreVector {
  std::array<double, kChoiceCount> scores{};
  Strategy strategy = Strategy::NaiveCount;
  std::string engine_id;
  bool no_signal = false;  // no query at any relaxation stage produced a hit
};

struct ProximityParams {
  int radius = 20;
  std::size_t docs_per_query = kDefaultDocsPerQuery;
};

using TokenSet = std::unordered_set<std::string>;
using NounPhrase = std::vector<std::string>;

// Proximity of question words to answer words in one document. Every
// question-word occurrence within `radius` positions of an answer-word
// occurrence adds (radius - distance) / radius; the total is averaged over
// answer-word occurrences. A position never scores against itself, so a
// token in both sets can still contribute to other answer occurrences.
double distance_score(std::span<const std::string> words, const TokenSet& q_words,
                      const TokenSet& a_words, int radius);

// Result counts for the four choices. All four query plans advance together
// until some choice gets a hit.
ScoreVector naive_counts(const Question& question, const QuestionFlags& flags,
                         const SearchBackend& backend, const StopwordList& stopwords);

// Sum over each choice's top documents of distance_score against the
// filtered question words.
ScoreVector proximity_strategy(const Question& question, const QuestionFlags& flags,
                               const SearchBackend& backend,
                               const ProximityParams& params,
                               const StopwordList& stopwords);

// Rule-based chunker: capitalized runs away from sentence starts, and
// determiner/possessive-led word groups. Falls back to the filtered tokens
// as one pseudo-phrase when nothing is found.
std::vector<NounPhrase> extract_noun_phrases(std::string_view text,
                                             const StopwordList& stopwords);

// Sum over (noun phrase, document) of distance_score with the phrase tokens
// as question words.
ScoreVector noun_phrase_strategy(const Question& question, const QuestionFlags& flags,
                                 const SearchBackend& backend,
                                 const ProximityParams& params,
                                 const StopwordList& stopwords);

ScoreVector run_strategy(Strategy strategy, const Question& question,
                         const QuestionFlags& flags, const SearchBackend& backend,
                         const ProximityParams& params, const StopwordList& stopwords);

}  // namespace millionaire
