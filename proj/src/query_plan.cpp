#include <algorithm>
#include <regex>
#include <set>

#include "millionaire/retrieval.hpp"

namespace millionaire {
namespace {

const std::vector<std::string> kExcluded = {"pdf"};

struct PlanParts {
  std::vector<std::string> answer;
  std::vector<std::string> context;
  bool context_is_phrase = false;
  std::optional<Phrase> saying;
};

std::vector<std::string> distinct(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  std::set<std::string, std::less<>> seen;
  for (const auto& t : tokens) {
    if (seen.insert(t).second) out.push_back(t);
  }
  return out;
}

// Longest prefix of `tokens` with at most `budget` distinct tokens.
std::vector<std::string> clip_distinct(const std::vector<std::string>& tokens,
                                       std::size_t budget) {
  std::set<std::string, std::less<>> seen;
  std::vector<std::string> out;
  for (const auto& t : tokens) {
    if (!seen.contains(t) && seen.size() == budget) break;
    seen.insert(t);
    out.push_back(t);
  }
  return out;
}

Query make_query(std::vector<Phrase> phrases, std::vector<std::string> terms) {
  Query q;
  q.required_phrases = std::move(phrases);
  q.terms = std::move(terms);
  q.exclude_extensions = kExcluded;
  return q;
}

QueryPlan assemble(PlanParts parts) {
  const std::size_t budget = kDefaultTermBudget;
  const auto answer = clip_distinct(parts.answer, budget);
  const auto answer_set = std::set<std::string, std::less<>>(answer.begin(), answer.end());
  const std::size_t room = budget - answer_set.size();

  // Context tokens that add a new distinct term, in order, within the budget.
  std::vector<std::string> extra;
  for (const auto& t : distinct(parts.context)) {
    if (extra.size() == room) break;
    if (!answer_set.contains(t)) extra.push_back(t);
  }
  Phrase context_phrase;
  if (parts.context_is_phrase) {
    // Keep the phrase contiguous: cut it at the first token that would
    // exceed the budget.
    std::set<std::string, std::less<>> used = answer_set;
    for (const auto& t : parts.context) {
      if (!used.contains(t) && used.size() == budget) break;
      used.insert(t);
      context_phrase.push_back(t);
    }
    extra.clear();
    for (const auto& t : distinct(context_phrase)) {
      if (!answer_set.contains(t)) extra.push_back(t);
    }
  }

  QueryPlan plan;
  if (parts.saying && distinct(*parts.saying).size() <= budget &&
      !parts.saying->empty()) {
    plan.stages.push_back(make_query({*parts.saying}, {}));
  }

  // Stage 1: phrases kept verbatim.
  std::vector<Phrase> phrases;
  std::vector<std::string> terms;
  if (answer.size() > 1) {
    phrases.push_back(answer);
  } else {
    terms = answer;
  }
  if (parts.context_is_phrase && context_phrase.size() > 1) {
    phrases.push_back(context_phrase);
  } else {
    terms.insert(terms.end(), extra.begin(), extra.end());
  }
  const bool had_phrases = !phrases.empty();
  plan.stages.push_back(make_query(std::move(phrases), std::move(terms)));

  // Demotion, then one context term dropped per stage.
  auto loose_answer = distinct(answer);
  const auto loose = [&](std::size_t keep) {
    std::vector<std::string> t = loose_answer;
    t.insert(t.end(), extra.begin(), extra.begin() + static_cast<std::ptrdiff_t>(keep));
    return make_query({}, std::move(t));
  };
  if (had_phrases) plan.stages.push_back(loose(extra.size()));
  for (std::size_t keep = extra.size(); keep-- > 0;) {
    plan.stages.push_back(loose(keep));
  }
  return plan;
}

struct SayingTemplate {
  std::string prefix;
  std::string suffix;
};

std::string strip_edges(std::string s) {
  const auto is_edge = [](char c) {
    return c == ' ' || c == '\t' || c == '?' || c == '.' || c == '!' ||
           c == ',' || c == ';' || c == ':';
  };
  while (!s.empty() && is_edge(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && is_edge(s[i])) ++i;
  return s.substr(i);
}

std::optional<SayingTemplate> split_on_placeholder(const std::string& tpl) {
  static const std::regex blank(R"(_{2,}|\.\.\.|\xE2\x80\xA6)");
  static const std::regex wh(R"(\b(what|where|who|whom|which)\b)", std::regex::icase);
  std::smatch m;
  if (std::regex_search(tpl, m, blank)) {
    return SayingTemplate{m.prefix().str(), m.suffix().str()};
  }
  // Last wh-word: sayings put the blank at the end far more often.
  std::optional<SayingTemplate> found;
  for (auto it = std::sregex_iterator(tpl.begin(), tpl.end(), wh);
       it != std::sregex_iterator(); ++it) {
    const auto pos = static_cast<std::size_t>(it->position());
    found = SayingTemplate{tpl.substr(0, pos), tpl.substr(pos + it->length())};
  }
  return found;
}

std::optional<std::string> quoted_span(std::string_view text) {
  static const std::regex straight(R"re("([^"]+)")re");
  static const std::regex curly("\xE2\x80\x9C([^\xE2]+)\xE2\x80\x9D");
  std::match_results<std::string_view::const_iterator> m;
  if (std::regex_search(text.begin(), text.end(), m, straight) ||
      std::regex_search(text.begin(), text.end(), m, curly)) {
    return m[1].str();
  }
  return std::nullopt;
}

std::optional<SayingTemplate> saying_template(std::string_view text) {
  if (auto quoted = quoted_span(text)) {
    if (auto t = split_on_placeholder(*quoted)) return t;
  }
  const auto cut = text.find_last_of(",:");
  if (cut == std::string_view::npos) return std::nullopt;
  return split_on_placeholder(strip_edges(std::string(text.substr(cut + 1))));
}

}  // namespace

std::vector<std::string> Query::distinct_terms() const {
  std::vector<std::string> all;
  for (const auto& p : required_phrases) all.insert(all.end(), p.begin(), p.end());
  all.insert(all.end(), terms.begin(), terms.end());
  return distinct(all);
}

bool Query::valid() const {
  return term_count() <= term_budget &&
         std::none_of(required_phrases.begin(), required_phrases.end(),
                      [](const Phrase& p) { return p.empty(); });
}

const Query& QueryPlan::stage_or_last(std::size_t s) const {
  return stages[std::min(s, stages.size() - 1)];
}

std::optional<std::string> construct_saying(std::string_view question_text,
                                            std::string_view choice) {
  auto tpl = saying_template(question_text);
  if (!tpl) return std::nullopt;
  return tpl->prefix + std::string(choice) + tpl->suffix;
}

QueryPlan build_query_plan(const Question& question, const QuestionFlags& flags,
                           std::string_view choice, const StopwordList& stopwords) {
  PlanParts parts;
  parts.answer = tokenize(choice);
  if (flags.saying) {
    if (auto tpl = saying_template(question.text)) {
      parts.saying = tokenize(tpl->prefix + std::string(choice) + tpl->suffix);
      parts.context = tokenize_and_filter(tpl->prefix + " " + tpl->suffix, stopwords, true);
      return assemble(std::move(parts));
    }
  }
  parts.context = tokenize_and_filter(question.text, stopwords, true);
  return assemble(std::move(parts));
}

QueryPlan build_phrase_pair_plan(const Phrase& phrase, std::string_view choice) {
  PlanParts parts;
  parts.answer = tokenize(choice);
  parts.context = phrase;
  parts.context_is_phrase = true;
  return assemble(std::move(parts));
}

}  // namespace millionaire
