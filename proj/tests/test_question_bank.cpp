#include <doctest.h>

#include <random>
#include <sstream>

#include "millionaire/errors.hpp"
#include "millionaire/question_bank.hpp"

using namespace millionaire;

namespace {

std::string record(const std::string& id, int level, const std::string& choices = R"(["a","b","c","d"])",
                   int answer = 0) {
  return R"({"id":")" + id + R"(","level":)" + std::to_string(level) +
         R"(,"question":"Q?","choices":)" + choices + R"(,"answer":)" + std::to_string(answer) + "}";
}

std::size_t error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_bank(in, "bank.jsonl");
  } catch (const DataError& e) {
    CHECK(e.source() == "bank.jsonl");
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse_bank buckets questions by level") {
  std::istringstream in(record("q1", 1) + "\n" + record("q2", 7) + "\n");
  const auto bank = parse_bank(in, "mem");
  CHECK(bank.size() == 2);
  CHECK(bank.level_ids(1) == std::vector<std::string>{"q1"});
  CHECK(bank.level_ids(7) == std::vector<std::string>{"q2"});
  for (int l = 2; l <= 6; ++l) CHECK(bank.level_indices(l).empty());
  REQUIRE(bank.find("q2") != nullptr);
  CHECK(bank.find("q2")->level == 7);
  CHECK(bank.find("nope") == nullptr);
}

TEST_CASE("empty input gives an empty bank") {
  std::istringstream in("");
  const auto bank = parse_bank(in, "mem");
  CHECK(bank.empty());
  for (int l = kMinLevel; l <= kMaxLevel; ++l) CHECK(bank.level_indices(l).empty());
}

TEST_CASE("blank lines are skipped but still counted") {
  CHECK(error_line(record("q1", 1) + "\n\n   \n" + record("q2", 1, R"(["a","b","c"])")) == 4);
}

TEST_CASE("parse errors name the offending line") {
  CHECK(error_line(record("q1", 1) + "\n" + record("q2", 2, R"(["a","b","c"])")) == 2);
  CHECK(error_line("{not json\n") == 1);
  CHECK(error_line(record("q1", 1) + "\n" + record("q2", 8)) == 2);
  CHECK(error_line(record("q1", 0)) == 1);
  CHECK(error_line(record("q1", 1, R"(["a","b","c","d"])", 4)) == 1);
  CHECK(error_line(record("q1", 1) + "\n" + record("q1", 2)) == 2);
  CHECK(error_line(R"({"id":"q1","level":1,"question":"Q?","choices":["a","b","c","d"]})") == 1);
  CHECK(error_line(R"({"id":"q1","level":"one","question":"Q?","choices":["a","b","c","d"],"answer":0})") == 1);
}

TEST_CASE("QuestionBank constructor rejects bad input") {
  Question q{"x", "Q?", {"a", "b", "c", "d"}, 0, 1};
  CHECK_NOTHROW(QuestionBank({q}));
  CHECK_THROWS_AS(QuestionBank({q, q}), std::invalid_argument);
  q.level = 9;
  CHECK_THROWS_AS(validate_question(q), std::invalid_argument);
  q.level = 1;
  q.choices[2] = "";
  CHECK_THROWS_AS(validate_question(q), std::invalid_argument);
}

TEST_CASE("load_bank reports a missing file as a data error") {
  CHECK_THROWS_AS(load_bank("/nonexistent/bank.jsonl"), DataError);
}

TEST_CASE("classify") {
  CHECK(classify("Which of these is not a mammal?") == QuestionFlags{true, false});
  CHECK(classify("According to the proverb, all roads lead to where?") == QuestionFlags{false, true});
  CHECK(classify("What is the capital of France?") == QuestionFlags{false, false});
  CHECK_FALSE(classify("Which note is highest?").inverted);
  CHECK(classify("Which is NOT a fish?").inverted);
  CHECK_FALSE(classify("according to legend, who?").saying);
  CHECK(classify("Who is SAID TO have fiddled?").saying);
  CHECK(classify("What were soldiers Asked To do?").saying);
}

TEST_CASE("tokenize") {
  CHECK(tokenize("The Eiffel Tower") == std::vector<std::string>{"the", "eiffel", "tower"});
  CHECK(tokenize("").empty());
  CHECK(tokenize("Flash Gordon's archenemy") ==
        std::vector<std::string>{"flash", "gordon", "archenemy"});
  CHECK(tokenize("Gordon\xE2\x80\x99s ship") == std::vector<std::string>{"gordon", "ship"});
  CHECK(tokenize("\xE2\x80\x9Cquoted\xE2\x80\x9D words") ==
        std::vector<std::string>{"quoted", "words"});
  CHECK(tokenize("Caf\xC3\xA9 au lait") == std::vector<std::string>{"caf\xC3\xA9", "au", "lait"});
  CHECK(tokenize("88 keys, 52 white") == std::vector<std::string>{"88", "keys", "52", "white"});
}

TEST_CASE("tokenize_and_filter") {
  const auto& sw = StopwordList::english();
  CHECK(tokenize_and_filter("What is the capital of France?", sw, true) ==
        std::vector<std::string>{"capital", "france"});
  CHECK(tokenize_and_filter("The Eiffel Tower", sw, false) ==
        std::vector<std::string>{"the", "eiffel", "tower"});
  const std::string_view words[] = {"what", "is", "the", "of"};
  const StopwordList tiny(words);
  CHECK(tokenize_and_filter("What is the capital of France?", tiny, true) ==
        std::vector<std::string>{"capital", "france"});
}

TEST_CASE("english stopword list") {
  const auto& sw = StopwordList::english();
  CHECK(StopwordList::kEnglishVersion == "en-2002.1");
  CHECK(sw.size() > 250);
  for (auto w : {"the", "of", "which", "what", "is", "not", "these"}) CHECK(sw.contains(w));
  for (auto w : {"capital", "france", "won", "moon"}) CHECK_FALSE(sw.contains(w));
  for (const auto& w : sw.words()) CHECK(tokenize(w) == std::vector<std::string>{w});
}

TEST_CASE("property: tokens are lowercase, non-empty and stable under re-tokenizing") {
  std::mt19937_64 rng(11);
  const std::string alphabet = "abcXYZ019 ,.'?!-_\"";
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    const int len = std::uniform_int_distribution<int>(0, 40)(rng);
    for (int i = 0; i < len; ++i) {
      text += alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
    }
    const auto tokens = tokenize(text);
    std::string joined;
    for (const auto& t : tokens) {
      CHECK_FALSE(t.empty());
      for (char c : t) CHECK_FALSE((c >= 'A' && c <= 'Z'));
      joined += t + " ";
    }
    CHECK(tokenize(joined) == tokens);
  }
}

TEST_CASE("bundled bank supports full games") {
  const auto bank = load_bank(MILLIONAIRE_DATA_DIR "/bank.jsonl");
  CHECK(bank.size() >= 40);
  CHECK(bank.level_indices(1).size() >= 3);
  for (int l = 2; l <= kMaxLevel; ++l) CHECK(bank.level_indices(l).size() >= 2);
  int inverted = 0;
  int saying = 0;
  for (const auto& q : bank.questions()) {
    inverted += classify(q).inverted;
    saying += classify(q).saying;
  }
  CHECK(inverted >= 3);
  CHECK(saying >= 3);
}
