#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "millionaire/errors.hpp"
#include "millionaire/retrieval.hpp"

using namespace millionaire;
namespace fs = std::filesystem;

namespace {

Document doc(std::string id, std::string text, std::string source = "") {
  return Document{std::move(id), std::move(source), tokenize(text)};
}

LocalCorpusIndex mini_corpus() {
  return index_corpus({doc("d1", "paris is the capital of france and its largest city"),
                       doc("d2", "berlin is the capital of germany"),
                       doc("d3", "rome and madrid are old cities")});
}

Query terms(std::vector<std::string> t) {
  Query q;
  q.terms = std::move(t);
  return q;
}

Question question(std::string text, std::array<std::string, 4> choices) {
  return Question{"q", std::move(text), std::move(choices), 0, 1};
}

}  // namespace

TEST_CASE("count on the mini corpus") {
  const auto index = mini_corpus();
  CHECK(count_results(index, terms({"capital", "france", "paris"})) == 1);
  CHECK(count_results(index, terms({"capital"})) == 2);
  CHECK(count_results(index, terms({"capital", "rome"})) == 0);
  CHECK(count_results(index, terms({"nowhere"})) == 0);
}

TEST_CASE("empty corpus counts nothing") {
  const auto index = index_corpus(std::vector<Document>{});
  CHECK(count_results(index, terms({"anything"})) == 0);
  CHECK(top_documents(index, terms({"anything"})).empty());
}

TEST_CASE("phrases need consecutive positions") {
  const auto index = index_corpus({doc("d1", "the tower eiffel stands"), doc("d2", "eiffel tower")});
  Query q;
  q.required_phrases = {{"eiffel", "tower"}};
  const auto hits = top_documents(index, q);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].id == "d2");
  q.required_phrases = {{"tower", "eiffel", "stands"}};
  CHECK(count_results(index, q) == 1);
}

TEST_CASE("postings are 1-based positions") {
  const auto index = index_corpus({doc("d", "a b a")});
  REQUIRE(index.postings("a") != nullptr);
  CHECK(index.postings("a")->at(0).positions == std::vector<std::uint32_t>{1, 3});
  CHECK(index.postings("b")->at(0).positions == std::vector<std::uint32_t>{2});
  CHECK(index.postings("c") == nullptr);
}

TEST_CASE("pdf sources are excluded only when asked") {
  const auto index = index_corpus({doc("d1", "paris capital", "http://x.org/a.PDF"),
                                   doc("d2", "paris capital", "http://x.org/a.html")});
  Query q = terms({"paris"});
  CHECK(count_results(index, q) == 2);
  q.exclude_extensions = {"pdf"};
  CHECK(count_results(index, q) == 1);
  CHECK(top_documents(index, q).at(0).id == "d2");
  CHECK(has_extension("a/b.pdf", "pdf"));
  CHECK_FALSE(has_extension("a/bpdf", "pdf"));
  CHECK_FALSE(has_extension("", "pdf"));
}

TEST_CASE("top orders by term frequency then id") {
  const auto index = index_corpus({doc("b", "paris paris capital"), doc("a", "paris capital"),
                                   doc("c", "paris capital"), doc("d", "capital only")});
  const auto hits = top_documents(index, terms({"paris", "capital"}), 10);
  REQUIRE(hits.size() == 3);
  CHECK(hits[0].id == "b");
  CHECK(hits[1].id == "a");
  CHECK(hits[2].id == "c");
  CHECK(top_documents(index, terms({"paris", "capital"}), 2).size() == 2);
}

TEST_CASE("duplicate document ids are rejected") {
  CHECK_THROWS_AS(index_corpus({doc("d", "x"), doc("d", "y")}), DataError);
}

TEST_CASE("index files round-trip and are bit-stable") {
  const auto a = mini_corpus();
  std::ostringstream first;
  a.save(first);
  std::istringstream in(first.str());
  const auto b = LocalCorpusIndex::load(in, "mem");
  CHECK(a == b);
  std::ostringstream second;
  mini_corpus().save(second);
  CHECK(first.str() == second.str());
  std::istringstream bad("{\"format\":\"other\"}");
  CHECK_THROWS_AS(LocalCorpusIndex::load(bad, "mem"), DataError);
}

TEST_CASE("read_corpus from JSON Lines and from a directory") {
  const fs::path dir = fs::temp_directory_path() / "millionaire_corpus_test";
  fs::remove_all(dir);
  fs::create_directories(dir / "texts");
  {
    std::ofstream(dir / "c.jsonl") << R"({"id":"x1","url":"http://e.org/a.pdf","text":"Hello World"})"
                                   << "\n\n"
                                   << R"({"id":"x2","text":"second"})" << "\n";
    std::ofstream(dir / "texts" / "b.txt") << "Beta text";
    std::ofstream(dir / "texts" / "a.txt") << "Alpha text";
    std::ofstream(dir / "bad.jsonl") << R"({"id":"x1","text":"ok"})" << "\n" << R"({"id":"x2"})" << "\n";
  }
  const auto docs = read_corpus(dir / "c.jsonl");
  REQUIRE(docs.size() == 2);
  CHECK(docs[0].source_name == "http://e.org/a.pdf");
  CHECK(docs[0].tokens == std::vector<std::string>{"hello", "world"});

  const auto files = read_corpus(dir / "texts");
  REQUIRE(files.size() == 2);
  CHECK(files[0].id == "a.txt");
  CHECK(files[1].tokens == std::vector<std::string>{"beta", "text"});

  try {
    read_corpus(dir / "bad.jsonl");
    FAIL("expected a data error");
  } catch (const DataError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(read_corpus(dir / "missing.jsonl"), DataError);
  fs::remove_all(dir);
}

TEST_CASE("plan for a multi-word answer") {
  const auto q = question("Who is Flash Gordon's archenemy?",
                          {"Ming the Merciless", "Lex Luthor", "The Joker", "Doctor Doom"});
  const auto plan = build_query_plan(q, classify(q), q.choices[0], StopwordList::english());
  REQUIRE(plan.stages.size() == 5);
  const Phrase ming{"ming", "the", "merciless"};
  CHECK(plan.stages[0].required_phrases == std::vector<Phrase>{ming});
  CHECK(plan.stages[0].terms == std::vector<std::string>{"flash", "gordon", "archenemy"});
  CHECK(plan.stages[1].required_phrases.empty());
  CHECK(plan.stages[1].terms ==
        std::vector<std::string>{"ming", "the", "merciless", "flash", "gordon", "archenemy"});
  CHECK(plan.stages[2].terms == std::vector<std::string>{"ming", "the", "merciless", "flash", "gordon"});
  CHECK(plan.stages.back().terms == ming);
  for (const auto& s : plan.stages) CHECK(s.exclude_extensions == std::vector<std::string>{"pdf"});
}

TEST_CASE("term budget keeps the earliest question terms") {
  const auto q = question("alpha bravo charlie delta echo foxtrot golf hotel india juliet kilo lima",
                          {"new york", "b", "c", "d"});
  const auto plan = build_query_plan(q, classify(q), "New York", StopwordList::english());
  CHECK(plan.stages[0].terms == std::vector<std::string>{"alpha", "bravo", "charlie", "delta", "echo",
                                                          "foxtrot", "golf", "hotel"});
  CHECK(plan.stages[0].term_count() == 10);
  CHECK(plan.stages.back().terms == std::vector<std::string>{"new", "york"});
}

TEST_CASE("single-word answer with no question terms gives one stage") {
  const auto q = question("What is it?", {"Paris", "b", "c", "d"});
  const auto plan = build_query_plan(q, classify(q), "Paris", StopwordList::english());
  REQUIRE(plan.stages.size() == 1);
  CHECK(plan.stages[0].terms == std::vector<std::string>{"paris"});
  CHECK(plan.stage_or_last(7) == plan.stages[0]);
}

TEST_CASE("saying construction") {
  CHECK(construct_saying("According to the proverb, all roads lead to where?", "Rome") ==
        "all roads lead to Rome");
  CHECK(construct_saying("Complete the saying: \"a stitch in time saves ___\"", "nine") ==
        "a stitch in time saves nine");
  CHECK(construct_saying("According to the saying, what goes around ... comes around?", "x") ==
        "what goes around x comes around");
  CHECK(construct_saying("Who is said to have fiddled while Rome burned?", "Nero") == std::nullopt);

  const auto q = question("According to the proverb, all roads lead to where?",
                          {"Rome", "Paris", "London", "Athens"});
  const auto plan = build_query_plan(q, classify(q), "Rome", StopwordList::english());
  REQUIRE(plan.stages.size() >= 2);
  CHECK(plan.stages[0].required_phrases ==
        std::vector<Phrase>{{"all", "roads", "lead", "to", "rome"}});
  CHECK(plan.stages[0].terms.empty());
  CHECK(plan.stages[1].terms == std::vector<std::string>{"rome", "roads", "lead"});
  CHECK(plan.stages.back().terms == std::vector<std::string>{"rome"});
}

TEST_CASE("phrase pair plan keeps the noun phrase contiguous") {
  const auto plan = build_phrase_pair_plan({"computer", "screen"}, "Window");
  REQUIRE(plan.stages.size() == 4);
  CHECK(plan.stages[0].required_phrases == std::vector<Phrase>{{"computer", "screen"}});
  CHECK(plan.stages[0].terms == std::vector<std::string>{"window"});
  CHECK(plan.stages[1].terms == std::vector<std::string>{"window", "computer", "screen"});
  CHECK(plan.stages[2].terms == std::vector<std::string>{"window", "computer"});
  CHECK(plan.stages[3].terms == std::vector<std::string>{"window"});
}

TEST_CASE("property: plans weaken stage by stage on random corpora") {
  std::mt19937_64 rng(2024);
  const std::vector<std::string> vocab = {"red", "blue", "green", "sun", "moon", "star", "sea",
                                          "the", "of", "a", "what", "river", "king", "gold"};
  const auto pick = [&](int lo, int hi) {
    std::string s;
    const int n = std::uniform_int_distribution<int>(lo, hi)(rng);
    for (int i = 0; i < n; ++i) {
      if (i) s += ' ';
      s += vocab[std::uniform_int_distribution<std::size_t>(0, vocab.size() - 1)(rng)];
    }
    return s;
  };
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Document> docs;
    const int n_docs = std::uniform_int_distribution<int>(0, 25)(rng);
    for (int d = 0; d < n_docs; ++d) {
      docs.push_back(doc("d" + std::to_string(d), pick(1, 30),
                         d % 5 == 0 ? "f" + std::to_string(d) + ".pdf" : ""));
    }
    const auto index = index_corpus(std::move(docs));
    const bool saying = trial % 3 == 0;
    std::string text = saying ? "According to legend, " + pick(2, 6) + " what " + pick(0, 4) + "?"
                              : pick(0, 16) + "?";
    const auto q = question(text, {pick(1, 3), "x", "y", "z"});
    const auto flags = classify(q);
    const auto plan = build_query_plan(q, flags, q.choices[0], StopwordList::english());
    REQUIRE_FALSE(plan.stages.empty());
    CHECK(plan.stages.back().required_phrases.empty());
    auto answer = tokenize(q.choices[0]);
    CHECK(plan.stages.back().distinct_terms() == Query{{}, answer, {}}.distinct_terms());
    std::set<std::string> previous;
    for (const auto& stage : plan.stages) {
      CHECK(stage.valid());
      CHECK(stage.exclude_extensions == std::vector<std::string>{"pdf"});
      const auto hits = top_documents(index, stage, 1000);
      CHECK(count_results(index, stage) == hits.size());
      std::set<std::string> ids;
      for (const auto& h : hits) ids.insert(h.id);
      CHECK(std::includes(ids.begin(), ids.end(), previous.begin(), previous.end()));
      previous = std::move(ids);
    }
  }
}
