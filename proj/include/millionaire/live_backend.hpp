#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include "millionaire/retrieval.hpp"

namespace millionaire {

// Engine-specific rendering of a Query as a query string.
//   google:    "ming the merciless" flash gordon -filetype:pdf
//   altavista: "ming the merciless" flash gordon NOT url:.pdf
struct QuerySyntax {
  std::string exclusion_prefix;
  std::string exclusion_suffix;

  static QuerySyntax google() { return {"-filetype:", ""}; }
  static QuerySyntax altavista() { return {"NOT url:.", ""}; }
};

std::string render_query(const Query& query, const QuerySyntax& syntax);

class BackendUnavailable : public std::runtime_error {
 public:
  BackendUnavailable(const std::string& what, std::optional<int> retry_after_seconds)
      : std::runtime_error(what), retry_after_(retry_after_seconds) {}

  std::optional<int> retry_after_seconds() const { return retry_after_; }

 private:
  std::optional<int> retry_after_;
};

struct LiveResponse {
  int status = 200;
  std::string body;
  std::optional<int> retry_after_seconds;
};

// Sends one rendered query asking for up to k results.
using LiveTransport = std::function<LiveResponse(const std::string& rendered, std::size_t k)>;

struct LiveEndpoint {
  std::string engine_id = "live";
  std::string base_url;  // "http://host:port"
  std::string path = "/search";
  std::filesystem::path cache_dir;  // empty: no disk cache
  QuerySyntax syntax = QuerySyntax::google();
  std::chrono::milliseconds min_interval{1000};
};

// Adapter for a remote search service. Wire protocol: GET
// <path>?q=<rendered query>&n=<k>, answered with JSON
//   {"count": N, "results": [{"id": ..., "url": ..., "text": ...}, ...]}.
// Responses are cached on disk keyed by (rendered query, k). Requests are
// serialized and spaced by min_interval. HTTP 429/503 raise
// BackendUnavailable with the Retry-After hint.
class LiveSearchBackend final : public SearchBackend {
 public:
  explicit LiveSearchBackend(LiveEndpoint endpoint, LiveTransport transport = {});

  const std::string& engine_id() const override { return endpoint_.engine_id; }
  std::size_t count(const Query& query) const override;
  std::vector<Document> top(const Query& query, std::size_t k) const override;

  std::size_t requests_sent() const;

 private:
  std::string fetch(const Query& query, std::size_t k) const;

  LiveEndpoint endpoint_;
  LiveTransport transport_;
  mutable std::mutex mutex_;
  mutable std::chrono::steady_clock::time_point last_request_{};
  mutable std::size_t requests_ = 0;
};

}  // namespace millionaire
