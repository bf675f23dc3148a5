#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "millionaire/question_bank.hpp"

namespace millionaire {

inline constexpr std::size_t kDefaultTermBudget = 10;
inline constexpr std::size_t kDefaultDocsPerQuery = 10;

using Phrase = std::vector<std::string>;

// A conjunctive search: every phrase must occur as consecutive tokens and
// every loose term must occur somewhere in the document.
struct Query {
  std::vector<Phrase> required_phrases;
  std::vector<std::string> terms;
  std::vector<std::string> exclude_extensions;
  std::size_t term_budget = kDefaultTermBudget;

  // Phrase tokens then loose terms, first occurrence order, no repeats.
  std::vector<std::string> distinct_terms() const;
  std::size_t term_count() const { return distinct_terms().size(); }
  bool empty() const { return required_phrases.empty() && terms.empty(); }
  // Budget respected and no empty phrase.
  bool valid() const;

  bool operator==(const Query&) const = default;
};

// Strictly weakening sequence of queries. The last stage is the answer
// tokens alone.
struct QueryPlan {
  std::vector<Query> stages;

  // Stage s, or the last stage when this plan is shorter than s + 1.
  const Query& stage_or_last(std::size_t s) const;
};

struct Document {
  std::string id;
  std::string source_name;  // url or file name; may be empty
  std::vector<std::string> tokens;

  bool operator==(const Document&) const = default;
};

// A search engine. count(q) > 0 iff top(q, k) is non-empty for k >= 1.
class SearchBackend {
 public:
  virtual ~SearchBackend() = default;

  virtual const std::string& engine_id() const = 0;
  virtual std::size_t count(const Query& query) const = 0;
  virtual std::vector<Document> top(const Query& query, std::size_t k) const = 0;
};

std::size_t count_results(const SearchBackend& backend, const Query& query);
std::vector<Document> top_documents(const SearchBackend& backend,
                                    const Query& query,
                                    std::size_t k = kDefaultDocsPerQuery);

// Builds the relaxation sequence for one (question, choice) pair. Stage 1 is
// the answer (quoted when multi-word) plus the stopword-filtered question
// terms, truncated to the term budget from the end; saying questions are
// preceded by a stage that requires the reconstructed saying verbatim.
// Later stages demote phrases to loose terms, then drop question terms from
// the end one per stage, ending with the answer tokens alone.
QueryPlan build_query_plan(const Question& question, const QuestionFlags& flags,
                           std::string_view choice, const StopwordList& stopwords);

// Plan for a {noun phrase, answer} pair: both required as phrases, then
// demoted, then phrase tokens dropped from the end.
QueryPlan build_phrase_pair_plan(const Phrase& phrase, std::string_view choice);

// Rebuilds the full saying for a "complete the saying" question by putting
// the choice in place of the blank ("___", "...") or the wh-word of the
// quoted span, or of the clause after the last comma or colon. Returns
// nullopt when no template is detectable.
std::optional<std::string> construct_saying(std::string_view question_text,
                                             std::string_view choice);

struct Posting {
  std::uint32_t doc = 0;                // index into documents()
  std::vector<std::uint32_t> positions;  // 1-based, ascending

  bool operator==(const Posting&) const = default;
};

// In-memory positional index over a fixed document set. Immutable after
// construction; safe for concurrent queries.
class LocalCorpusIndex final : public SearchBackend {
 public:
  // Throws DataError on a duplicate document id.
  explicit LocalCorpusIndex(std::vector<Document> documents,
                            std::string engine_id = "local");

  const std::string& engine_id() const override { return engine_id_; }
  std::size_t count(const Query& query) const override;
  // Ordered by descending sum of query-token frequencies, then doc id.
  std::vector<Document> top(const Query& query, std::size_t k) const override;

  const std::vector<Document>& documents() const { return docs_; }
  // nullptr when the token never occurs.
  const std::vector<Posting>* postings(std::string_view token) const;

  // Index file: JSON with the tokenized documents. Postings are rebuilt on
  // load, so saved bytes depend only on the corpus.
  void save(std::ostream& out) const;
  static LocalCorpusIndex load(std::istream& in, const std::string& source_name);

  bool operator==(const LocalCorpusIndex& other) const {
    return engine_id_ == other.engine_id_ && docs_ == other.docs_ &&
           postings_ == other.postings_;
  }

 private:
  std::vector<std::uint32_t> matching(const Query& query) const;
  bool phrase_at(std::uint32_t doc, const Phrase& phrase) const;
  std::size_t frequency(std::uint32_t doc, std::string_view token) const;

  std::string engine_id_;
  std::vector<Document> docs_;
  std::map<std::string, std::vector<Posting>, std::less<>> postings_;
};

// True when `source_name` ends in "." + ext (case-insensitive).
bool has_extension(std::string_view source_name, std::string_view ext);

// Corpus: JSON Lines {"id", "url"?, "text"}, or a directory of plain-text
// files (id = file name), read in file-name order.
std::vector<Document> read_corpus(const std::filesystem::path& path);
LocalCorpusIndex index_corpus(std::vector<Document> documents,
                              std::string engine_id = "local");
LocalCorpusIndex index_corpus(const std::filesystem::path& path,
                              std::string engine_id = "local");

}  // namespace millionaire
