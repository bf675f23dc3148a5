#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace millionaire {

inline constexpr int kChoiceCount = 4;
inline constexpr int kMinLevel = 1;
inline constexpr int kMaxLevel = 7;

struct Question {
  std::string id;
  std::string text;
  std::array<std::string, kChoiceCount> choices;
  int correct_index = 0;
  int level = kMinLevel;
};

// Question-shape flags. Independent of each other.
struct QuestionFlags {
  bool inverted = false;  // "not" question: the answer is the odd one out
  bool saying = false;    // complete-the-saying question

  bool operator==(const QuestionFlags&) const = default;
};

// Fixed stopword list. The shipped English list is versioned; changing its
// contents means bumping kEnglishVersion.
class StopwordList {
 public:
  static constexpr std::string_view kEnglishVersion = "en-2002.1";

  explicit StopwordList(std::span<const std::string_view> words);

  static const StopwordList& english();

  bool contains(std::string_view token) const;
  std::size_t size() const { return words_.size(); }
  const std::set<std::string, std::less<>>& words() const { return words_; }

 private:
  std::set<std::string, std::less<>> words_;
};

class QuestionBank {
 public:
  QuestionBank() = default;
  // Throws std::invalid_argument on an invalid question or duplicate id.
  explicit QuestionBank(std::vector<Question> questions);

  const std::vector<Question>& questions() const { return questions_; }
  std::size_t size() const { return questions_.size(); }
  bool empty() const { return questions_.empty(); }

  // Indices into questions(), in file order.
  const std::vector<std::size_t>& level_indices(int level) const;
  std::vector<std::string> level_ids(int level) const;

  const Question* find(std::string_view id) const;

 private:
  std::vector<Question> questions_;
  std::array<std::vector<std::size_t>, kMaxLevel> by_level_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

// Throws std::invalid_argument describing the first violated invariant.
void validate_question(const Question& q);

// JSON Lines: {"id", "level", "question", "choices": [4], "answer"}.
// Blank lines are skipped. Errors are DataError with the line number.
QuestionBank parse_bank(std::istream& in, const std::string& source_name);
QuestionBank load_bank(const std::filesystem::path& path);

QuestionFlags classify(std::string_view text);
inline QuestionFlags classify(const Question& q) { return classify(q.text); }

// Lowercase ASCII, split on runs of non-alphanumeric characters, strip
// possessive 's. Bytes of non-ASCII letters are kept inside tokens; UTF-8
// punctuation (U+0080..U+00BF, U+2000..U+206F) separates.
std::vector<std::string> tokenize(std::string_view text);

// Question text is filtered; answer text must be passed with filter = false.
std::vector<std::string> tokenize_and_filter(std::string_view text,
                                             const StopwordList& stopwords,
                                             bool filter);

}  // namespace millionaire
