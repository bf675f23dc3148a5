#include "millionaire/live_backend.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "millionaire/errors.hpp"

namespace millionaire {
namespace {

using nlohmann::json;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string cache_key(const std::string& rendered, std::size_t k) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(rendered + '\n' + std::to_string(k))));
  return buf;
}

LiveTransport http_transport(const LiveEndpoint& ep) {
  return [base = ep.base_url, path = ep.path](const std::string& rendered, std::size_t k) {
    httplib::Client client(base);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    httplib::Params params{{"q", rendered}, {"n", std::to_string(k)}};
    auto res = client.Get(path, params, httplib::Headers{});
    if (!res) {
      throw BackendUnavailable("request to " + base + " failed: " +
                                   httplib::to_string(res.error()),
                               std::nullopt);
    }
    LiveResponse out{res->status, res->body, std::nullopt};
    if (res->has_header("Retry-After")) {
      try {
        out.retry_after_seconds = std::stoi(res->get_header_value("Retry-After"));
      } catch (const std::exception&) {
      }
    }
    return out;
  };
}

json parse_body(const std::string& body, const std::string& engine) {
  try {
    return json::parse(body);
  } catch (const json::exception& e) {
    throw DataError(engine, 0, std::string("malformed search response: ") + e.what());
  }
}

}  // namespace

std::string render_query(const Query& query, const QuerySyntax& syntax) {
  std::string out;
  const auto append = [&](const std::string& s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  for (const auto& phrase : query.required_phrases) {
    std::string joined;
    for (const auto& t : phrase) joined += (joined.empty() ? "" : " ") + t;
    append(phrase.size() > 1 ? '"' + joined + '"' : joined);
  }
  for (const auto& t : query.terms) append(t);
  for (const auto& ext : query.exclude_extensions) {
    append(syntax.exclusion_prefix + ext + syntax.exclusion_suffix);
  }
  return out;
}

LiveSearchBackend::LiveSearchBackend(LiveEndpoint endpoint, LiveTransport transport)
    : endpoint_(std::move(endpoint)),
      transport_(transport ? std::move(transport) : http_transport(endpoint_)) {}

std::size_t LiveSearchBackend::requests_sent() const {
  std::lock_guard lock(mutex_);
  return requests_;
}

std::string LiveSearchBackend::fetch(const Query& query, std::size_t k) const {
  const std::string rendered = render_query(query, endpoint_.syntax);
  std::filesystem::path cached;
  if (!endpoint_.cache_dir.empty()) {
    cached = endpoint_.cache_dir / (cache_key(rendered, k) + ".json");
    std::ifstream in(cached, std::ios::binary);
    if (in) {
      std::ostringstream s;
      s << in.rdbuf();
      return s.str();
    }
  }

  std::lock_guard lock(mutex_);
  const auto now = std::chrono::steady_clock::now();
  if (requests_ > 0 && now - last_request_ < endpoint_.min_interval) {
    std::this_thread::sleep_for(endpoint_.min_interval - (now - last_request_));
  }
  last_request_ = std::chrono::steady_clock::now();
  ++requests_;
  LiveResponse res = transport_(rendered, k);
  if (res.status == 429 || res.status == 503) {
    throw BackendUnavailable(endpoint_.engine_id + " returned HTTP " +
                                 std::to_string(res.status),
                             res.retry_after_seconds);
  }
  if (res.status != 200) {
    throw BackendUnavailable(endpoint_.engine_id + " returned HTTP " +
                                 std::to_string(res.status),
                             std::nullopt);
  }
  parse_body(res.body, endpoint_.engine_id);
  if (!cached.empty()) {
    std::filesystem::create_directories(endpoint_.cache_dir);
    std::ofstream(cached, std::ios::binary) << res.body;
  }
  return res.body;
}

std::size_t LiveSearchBackend::count(const Query& query) const {
  const auto body = parse_body(fetch(query, kDefaultDocsPerQuery), endpoint_.engine_id);
  return body.value("count", std::size_t{0});
}

std::vector<Document> LiveSearchBackend::top(const Query& query, std::size_t k) const {
  const auto body = parse_body(fetch(query, k), endpoint_.engine_id);
  std::vector<Document> docs;
  for (const auto& r : body.value("results", json::array())) {
    if (docs.size() == k) break;
    docs.push_back(Document{r.value("id", std::string{}), r.value("url", std::string{}),
                            tokenize(r.value("text", std::string{}))});
  }
  return docs;
}

}  // namespace millionaire
