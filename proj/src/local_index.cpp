#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "millionaire/errors.hpp"
#include "millionaire/retrieval.hpp"

namespace millionaire {
namespace {

using nlohmann::json;

constexpr std::string_view kIndexFormat = "millionaire-index";
constexpr int kIndexVersion = 1;

bool excluded(const Document& doc, const std::vector<std::string>& exts) {
  return std::any_of(exts.begin(), exts.end(), [&](const std::string& e) {
    return has_extension(doc.source_name, e);
  });
}

const Posting* find_posting(const std::vector<Posting>& list, std::uint32_t doc) {
  auto it = std::lower_bound(list.begin(), list.end(), doc,
                             [](const Posting& p, std::uint32_t d) { return p.doc < d; });
  return it != list.end() && it->doc == doc ? &*it : nullptr;
}

}  // namespace

std::size_t count_results(const SearchBackend& backend, const Query& query) {
  return backend.count(query);
}

std::vector<Document> top_documents(const SearchBackend& backend, const Query& query,
                                    std::size_t k) {
  return backend.top(query, k);
}

bool has_extension(std::string_view source_name, std::string_view ext) {
  if (ext.empty() || source_name.size() < ext.size() + 1) return false;
  const auto tail = source_name.substr(source_name.size() - ext.size());
  if (source_name[source_name.size() - ext.size() - 1] != '.') return false;
  return std::equal(tail.begin(), tail.end(), ext.begin(), ext.end(), [](char a, char b) {
    const auto lower = [](char c) { return c >= 'A' && c <= 'Z' ? char(c - 'A' + 'a') : c; };
    return lower(a) == lower(b);
  });
}

LocalCorpusIndex::LocalCorpusIndex(std::vector<Document> documents, std::string engine_id)
    : engine_id_(std::move(engine_id)), docs_(std::move(documents)) {
  std::unordered_set<std::string> ids;
  for (std::uint32_t d = 0; d < docs_.size(); ++d) {
    if (!ids.insert(docs_[d].id).second) {
      throw DataError("duplicate document id '" + docs_[d].id + "'");
    }
    const auto& tokens = docs_[d].tokens;
    for (std::uint32_t pos = 0; pos < tokens.size(); ++pos) {
      auto& list = postings_[tokens[pos]];
      if (list.empty() || list.back().doc != d) list.push_back(Posting{d, {}});
      list.back().positions.push_back(pos + 1);
    }
  }
}

const std::vector<Posting>* LocalCorpusIndex::postings(std::string_view token) const {
  auto it = postings_.find(token);
  return it == postings_.end() ? nullptr : &it->second;
}

bool LocalCorpusIndex::phrase_at(std::uint32_t doc, const Phrase& phrase) const {
  std::vector<const std::vector<std::uint32_t>*> lists;
  for (const auto& t : phrase) {
    const auto* list = postings(t);
    const Posting* p = list ? find_posting(*list, doc) : nullptr;
    if (!p) return false;
    lists.push_back(&p->positions);
  }
  for (auto start : *lists.front()) {
    bool ok = true;
    for (std::size_t i = 1; i < lists.size() && ok; ++i) {
      ok = std::binary_search(lists[i]->begin(), lists[i]->end(),
                              start + static_cast<std::uint32_t>(i));
    }
    if (ok) return true;
  }
  return false;
}

std::vector<std::uint32_t> LocalCorpusIndex::matching(const Query& query) const {
  const auto tokens = query.distinct_terms();
  if (tokens.empty()) return {};
  std::vector<const std::vector<Posting>*> lists;
  for (const auto& t : tokens) {
    const auto* list = postings(t);
    if (!list) return {};
    lists.push_back(list);
  }
  std::sort(lists.begin(), lists.end(),
            [](auto* a, auto* b) { return a->size() < b->size(); });

  std::vector<std::uint32_t> out;
  for (const auto& candidate : *lists.front()) {
    const auto d = candidate.doc;
    const bool all_terms = std::all_of(lists.begin() + 1, lists.end(), [&](auto* list) {
      return find_posting(*list, d) != nullptr;
    });
    if (!all_terms || excluded(docs_[d], query.exclude_extensions)) continue;
    const bool phrases_ok =
        std::all_of(query.required_phrases.begin(), query.required_phrases.end(),
                    [&](const Phrase& p) { return p.size() < 2 || phrase_at(d, p); });
    if (phrases_ok) out.push_back(d);
  }
  return out;
}

std::size_t LocalCorpusIndex::frequency(std::uint32_t doc, std::string_view token) const {
  const auto* list = postings(token);
  const Posting* p = list ? find_posting(*list, doc) : nullptr;
  return p ? p->positions.size() : 0;
}

std::size_t LocalCorpusIndex::count(const Query& query) const {
  return matching(query).size();
}

std::vector<Document> LocalCorpusIndex::top(const Query& query, std::size_t k) const {
  const auto tokens = query.distinct_terms();
  struct Ranked {
    std::size_t score;
    std::uint32_t doc;
  };
  std::vector<Ranked> ranked;
  for (auto d : matching(query)) {
    std::size_t score = 0;
    for (const auto& t : tokens) score += frequency(d, t);
    ranked.push_back({score, d});
  }
  std::sort(ranked.begin(), ranked.end(), [&](const Ranked& a, const Ranked& b) {
    if (a.score != b.score) return a.score > b.score;
    return docs_[a.doc].id < docs_[b.doc].id;
  });
  if (ranked.size() > k) ranked.resize(k);
  std::vector<Document> out;
  out.reserve(ranked.size());
  for (const auto& r : ranked) out.push_back(docs_[r.doc]);
  return out;
}

void LocalCorpusIndex::save(std::ostream& out) const {
  json docs = json::array();
  for (const auto& d : docs_) {
    docs.push_back({{"id", d.id}, {"source", d.source_name}, {"tokens", d.tokens}});
  }
  const json doc = {{"format", kIndexFormat},
                    {"version", kIndexVersion},
                    {"engine_id", engine_id_},
                    {"documents", std::move(docs)}};
  out << doc.dump() << '\n';
}

LocalCorpusIndex LocalCorpusIndex::load(std::istream& in, const std::string& source_name) {
  json doc;
  try {
    doc = json::parse(in);
    if (doc.at("format").get<std::string>() != kIndexFormat ||
        doc.at("version").get<int>() != kIndexVersion) {
      throw DataError(source_name, 0, "not a version-1 index file");
    }
    std::vector<Document> docs;
    for (const auto& d : doc.at("documents")) {
      docs.push_back(Document{d.at("id").get<std::string>(),
                              d.at("source").get<std::string>(),
                              d.at("tokens").get<std::vector<std::string>>()});
    }
    return LocalCorpusIndex(std::move(docs), doc.at("engine_id").get<std::string>());
  } catch (const json::exception& e) {
    throw DataError(source_name, 0, std::string("bad index file: ") + e.what());
  }
}

std::vector<Document> read_corpus(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  std::vector<Document> docs;
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      std::ifstream in(f, std::ios::binary);
      if (!in) throw DataError(f.string(), 0, "cannot read corpus file");
      std::ostringstream text;
      text << in.rdbuf();
      const auto name = f.filename().string();
      docs.push_back(Document{name, name, tokenize(text.str())});
    }
    return docs;
  }

  std::ifstream in(path);
  if (!in) throw DataError(path.string(), 0, "cannot open corpus");
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto rec = json::parse(line);
      Document d;
      d.id = rec.at("id").get<std::string>();
      if (auto it = rec.find("url"); it != rec.end() && !it->is_null()) {
        d.source_name = it->get<std::string>();
      }
      d.tokens = tokenize(rec.at("text").get<std::string>());
      docs.push_back(std::move(d));
    } catch (const json::exception& e) {
      throw DataError(path.string(), lineno, std::string("bad corpus record: ") + e.what());
    }
  }
  return docs;
}

LocalCorpusIndex index_corpus(std::vector<Document> documents, std::string engine_id) {
  return LocalCorpusIndex(std::move(documents), std::move(engine_id));
}

LocalCorpusIndex index_corpus(const std::filesystem::path& path, std::string engine_id) {
  try {
    return LocalCorpusIndex(read_corpus(path), std::move(engine_id));
  } catch (const DataError& e) {
    if (!e.source().empty()) throw;
    throw DataError(path.string(), 0, e.what());
  }
}

}  // namespace millionaire
