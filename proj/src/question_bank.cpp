#include "millionaire/question_bank.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <stdexcept>

#include <json.hpp>

#include "millionaire/errors.hpp"

namespace millionaire {
namespace {

using nlohmann::json;

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  });
}

// Width of a UTF-8 separator sequence starting at i, or 0 for a word byte.
std::size_t separator_width(std::string_view s, std::size_t i) {
  const auto c = static_cast<unsigned char>(s[i]);
  if (c < 0x80) {
    const bool alnum = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
                       (c >= 'A' && c <= 'Z');
    return alnum ? 0 : 1;
  }
  // U+0080..U+00BF: Latin-1 controls and punctuation (nbsp, guillemets, ...).
  if (c == 0xC2 && i + 1 < s.size()) return 2;
  // U+2000..U+206F: general punctuation (curly quotes, dashes, ellipsis).
  if (c == 0xE2 && i + 2 < s.size()) {
    const auto c1 = static_cast<unsigned char>(s[i + 1]);
    if (c1 == 0x80 || c1 == 0x81) return 3;
  }
  return 0;
}

// Apostrophe width at i (ASCII ' or U+2019), else 0.
std::size_t apostrophe_width(std::string_view s, std::size_t i) {
  if (s[i] == '\'') return 1;
  if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
      static_cast<unsigned char>(s[i + 1]) == 0x80 &&
      static_cast<unsigned char>(s[i + 2]) == 0x99) {
    return 3;
  }
  return 0;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) {
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  }
  return out;
}

std::string trimmed(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

StopwordList::StopwordList(std::span<const std::string_view> words) {
  for (auto w : words) words_.emplace(ascii_lower(w));
}

bool StopwordList::contains(std::string_view token) const {
  return words_.find(token) != words_.end();
}

QuestionBank::QuestionBank(std::vector<Question> questions)
    : questions_(std::move(questions)) {
  for (std::size_t i = 0; i < questions_.size(); ++i) {
    const Question& q = questions_[i];
    validate_question(q);
    if (!by_id_.emplace(q.id, i).second) {
      throw std::invalid_argument("duplicate question id '" + q.id + "'");
    }
    by_level_[q.level - kMinLevel].push_back(i);
  }
}

const std::vector<std::size_t>& QuestionBank::level_indices(int level) const {
  if (level < kMinLevel || level > kMaxLevel) {
    throw std::out_of_range("level " + std::to_string(level) +
                            " outside [1,7]");
  }
  return by_level_[level - kMinLevel];
}

std::vector<std::string> QuestionBank::level_ids(int level) const {
  std::vector<std::string> ids;
  for (auto i : level_indices(level)) ids.push_back(questions_[i].id);
  return ids;
}

const Question* QuestionBank::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &questions_[it->second];
}

void validate_question(const Question& q) {
  if (q.id.empty()) throw std::invalid_argument("empty question id");
  for (const auto& c : q.choices) {
    if (trimmed(c).empty()) {
      throw std::invalid_argument("question '" + q.id + "' has an empty choice");
    }
  }
  if (q.correct_index < 0 || q.correct_index >= kChoiceCount) {
    throw std::invalid_argument("question '" + q.id + "': answer index " +
                                std::to_string(q.correct_index) +
                                " outside [0,3]");
  }
  if (q.level < kMinLevel || q.level > kMaxLevel) {
    throw std::invalid_argument("question '" + q.id + "': level " +
                                std::to_string(q.level) + " outside [1,7]");
  }
}

QuestionBank parse_bank(std::istream& in, const std::string& source_name) {
  std::vector<Question> questions;
  std::unordered_map<std::string, std::size_t> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    const auto fail = [&](const std::string& msg) {
      return DataError(source_name, lineno, msg);
    };
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::parse_error& e) {
      throw fail(std::string("malformed JSON: ") + e.what());
    }
    if (!rec.is_object()) throw fail("record is not a JSON object");

    Question q;
    try {
      q.id = rec.at("id").get<std::string>();
      q.text = rec.at("question").get<std::string>();
      q.level = rec.at("level").get<int>();
      q.correct_index = rec.at("answer").get<int>();
      const auto& choices = rec.at("choices");
      if (!choices.is_array() || choices.size() != kChoiceCount) {
        throw fail("expected exactly 4 choices, got " +
                   std::to_string(choices.is_array() ? choices.size() : 0));
      }
      for (int i = 0; i < kChoiceCount; ++i) {
        q.choices[i] = choices[i].get<std::string>();
      }
    } catch (const json::exception& e) {
      throw fail(std::string("bad field: ") + e.what());
    }

    try {
      validate_question(q);
    } catch (const std::invalid_argument& e) {
      throw fail(e.what());
    }
    if (auto [it, fresh] = seen.emplace(q.id, lineno); !fresh) {
      throw fail("duplicate id '" + q.id + "' (first seen on line " +
                 std::to_string(it->second) + ")");
    }
    questions.push_back(std::move(q));
  }
  return QuestionBank(std::move(questions));
}

QuestionBank load_bank(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string(), 0, "cannot open question bank");
  return parse_bank(in, path.string());
}

QuestionFlags classify(std::string_view text) {
  QuestionFlags flags;
  const auto tokens = tokenize(text);
  flags.inverted = std::find(tokens.begin(), tokens.end(), "not") != tokens.end();
  const std::string lower = ascii_lower(text);
  flags.saying = text.find("According") != std::string_view::npos ||
                 lower.find("said to") != std::string::npos ||
                 lower.find("asked to") != std::string::npos;
  return flags;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  const auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  std::size_t i = 0;
  while (i < text.size()) {
    if (const auto w = apostrophe_width(text, i); w > 0) {
      const std::size_t j = i + w;
      const bool possessive =
          !cur.empty() && j < text.size() && (text[j] == 's' || text[j] == 'S') &&
          (j + 1 == text.size() || separator_width(text, j + 1) > 0 ||
           apostrophe_width(text, j + 1) > 0);
      flush();
      i = possessive ? j + 1 : j;
      continue;
    }
    if (const auto w = separator_width(text, i); w > 0) {
      flush();
      i += w;
      continue;
    }
    const char ch = text[i];
    cur.push_back(ch >= 'A' && ch <= 'Z' ? static_cast<char>(ch - 'A' + 'a') : ch);
    ++i;
  }
  flush();
  return out;
}

std::vector<std::string> tokenize_and_filter(std::string_view text,
                                             const StopwordList& stopwords,
                                             bool filter) {
  auto tokens = tokenize(text);
  if (filter) {
    std::erase_if(tokens, [&](const std::string& t) { return stopwords.contains(t); });
  }
  return tokens;
}

}  // namespace millionaire
