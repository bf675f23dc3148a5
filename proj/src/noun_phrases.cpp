#include <algorithm>
#include <array>
#include <set>

#include "millionaire/scoring.hpp"

namespace millionaire {
namespace {

constexpr std::array<std::string_view, 20> kDeterminers = {
    "a",    "an",    "the",  "this",  "that", "these", "those",
    "its",  "his",   "her",  "their", "our",  "my",    "your",
    "some", "each",  "every", "another", "any", "no"};

constexpr std::size_t kMaxPhraseWords = 4;

struct Word {
  std::vector<std::string> tokens;
  bool capitalized = false;
  bool possessive = false;
  bool boundary_before = false;  // opening punctuation
  bool boundary_after = false;   // closing or clause punctuation
  bool sentence_end = false;
};

bool is_determiner(const Word& w) {
  return w.tokens.size() == 1 &&
         std::find(kDeterminers.begin(), kDeterminers.end(), w.tokens[0]) !=
             kDeterminers.end();
}

bool is_word_char(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         c >= 0x80;
}

// Strips a UTF-8 curly quote (U+2018..U+201D) at either end.
bool strip_curly_front(std::string_view& s) {
  if (s.size() >= 3 && static_cast<unsigned char>(s[0]) == 0xE2 &&
      static_cast<unsigned char>(s[1]) == 0x80) {
    const auto c = static_cast<unsigned char>(s[2]);
    if (c >= 0x98 && c <= 0x9D) {
      s.remove_prefix(3);
      return true;
    }
  }
  return false;
}

bool strip_curly_back(std::string_view& s) {
  if (s.size() >= 3 && static_cast<unsigned char>(s[s.size() - 3]) == 0xE2 &&
      static_cast<unsigned char>(s[s.size() - 2]) == 0x80) {
    const auto c = static_cast<unsigned char>(s.back());
    if (c >= 0x98 && c <= 0x9D) {
      s.remove_suffix(3);
      return true;
    }
  }
  return false;
}

std::vector<Word> split_words(std::string_view text) {
  std::vector<Word> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
                               text[i] == '\r')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\n' &&
           text[i] != '\r') {
      ++i;
    }
    if (start == i) break;
    std::string_view raw = text.substr(start, i - start);

    Word w;
    for (;;) {
      if (!raw.empty() && !is_word_char(static_cast<unsigned char>(raw.front()))) {
        raw.remove_prefix(1);
        w.boundary_before = true;
      } else if (strip_curly_front(raw)) {
        w.boundary_before = true;
      } else {
        break;
      }
    }
    for (;;) {
      if (!raw.empty() && !is_word_char(static_cast<unsigned char>(raw.back()))) {
        const char c = raw.back();
        if (c == '.' || c == '?' || c == '!') w.sentence_end = true;
        raw.remove_suffix(1);
        w.boundary_after = true;
      } else if (strip_curly_back(raw)) {
        w.boundary_after = true;
      } else {
        break;
      }
    }
    // Possessive 's (ASCII or right single quote); the tokenizer drops it.
    if (raw.size() > 2 && (raw.back() == 's' || raw.back() == 'S')) {
      const auto body = raw.substr(0, raw.size() - 1);
      if (body.back() == '\'' ||
          (body.size() >= 3 && body.substr(body.size() - 3) == "\xE2\x80\x99")) {
        w.possessive = true;
      }
    }
    w.capitalized = !raw.empty() && raw.front() >= 'A' && raw.front() <= 'Z';
    w.tokens = tokenize(raw);
    words.push_back(std::move(w));
  }
  return words;
}

struct Candidate {
  std::size_t start;
  NounPhrase tokens;
};

void drop_leading_determiners(NounPhrase& p) {
  while (!p.empty() && std::find(kDeterminers.begin(), kDeterminers.end(), p.front()) !=
                           kDeterminers.end()) {
    p.erase(p.begin());
  }
}

}  // namespace

std::vector<NounPhrase> extract_noun_phrases(std::string_view text,
                                             const StopwordList& stopwords) {
  const auto words = split_words(text);
  const auto n = words.size();
  std::vector<Candidate> found;

  // Capitalized runs, skipping the sentence-initial word.
  for (std::size_t i = 0; i < n;) {
    const bool initial = i == 0 || words[i - 1].sentence_end;
    if (!words[i].capitalized || initial || words[i].tokens.empty()) {
      ++i;
      continue;
    }
    Candidate c{i, {}};
    std::size_t j = i;
    for (;;) {
      const auto& w = words[j];
      c.tokens.insert(c.tokens.end(), w.tokens.begin(), w.tokens.end());
      ++j;
      if (w.possessive || w.boundary_after || j == n || !words[j].capitalized ||
          words[j].boundary_before || words[j].tokens.empty()) {
        break;
      }
    }
    drop_leading_determiners(c.tokens);
    found.push_back(std::move(c));
    i = j;
  }

  // Determiner- or possessive-led groups.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(is_determiner(words[i]) || words[i].possessive) || words[i].boundary_after) {
      continue;
    }
    Candidate c{i + 1, {}};
    for (std::size_t j = i + 1, taken = 0; j < n && taken < kMaxPhraseWords; ++j, ++taken) {
      const auto& w = words[j];
      if (w.tokens.empty() || is_determiner(w) || (w.boundary_before && taken > 0)) break;
      if (w.tokens.size() == 1 && stopwords.contains(w.tokens[0])) break;
      // A word directly followed by a determiner takes an object: a verb.
      if (taken > 0 && j + 1 < n && !w.boundary_after && is_determiner(words[j + 1])) break;
      c.tokens.insert(c.tokens.end(), w.tokens.begin(), w.tokens.end());
      if (w.possessive || w.boundary_after) break;
    }
    found.push_back(std::move(c));
  }

  std::stable_sort(found.begin(), found.end(),
                   [](const Candidate& a, const Candidate& b) { return a.start < b.start; });
  std::vector<NounPhrase> phrases;
  std::set<NounPhrase> seen;
  for (auto& c : found) {
    const bool content = std::any_of(c.tokens.begin(), c.tokens.end(), [&](const auto& t) {
      return !stopwords.contains(t);
    });
    if (content && seen.insert(c.tokens).second) phrases.push_back(std::move(c.tokens));
  }
  if (phrases.empty()) {
    auto filtered = tokenize_and_filter(text, stopwords, true);
    if (!filtered.empty()) phrases.push_back(std::move(filtered));
  }
  return phrases;
}

}  // namespace millionaire
