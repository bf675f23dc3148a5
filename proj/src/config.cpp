#include "millionaire/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "millionaire/errors.hpp"

namespace millionaire {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

class Reader {
 public:
  Reader(const std::string& source, const fs::path& base) : source_(source), base_(base) {}

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw DataError(source_, 0, key + ": " + what);
  }

  void only(const json& obj, const std::string& where, std::initializer_list<const char*> keys) const {
    if (!obj.is_object()) fail(where, "expected an object");
    const std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [k, v] : obj.items()) {
      if (!allowed.contains(k)) fail(where.empty() ? k : where + "." + k, "unknown key");
    }
  }

  template <class T>
  T get(const json& v, const std::string& key) const {
    try {
      return v.get<T>();
    } catch (const json::exception&) {
      fail(key, "wrong type");
    }
  }

  double number(const json& v, const std::string& key) const {
    if (!v.is_number()) fail(key, "expected a number");
    return v.get<double>();
  }

  double probability(const json& v, const std::string& key) const {
    const double p = number(v, key);
    if (!(p >= 0.0 && p <= 1.0)) fail(key, "must lie in [0, 1]");
    return p;
  }

  std::array<double, kMaxLevel> levels(const json& v, const std::string& key) const {
    if (!v.is_array() || v.size() != kMaxLevel) {
      fail(key, "expected an array of " + std::to_string(kMaxLevel) + " probabilities");
    }
    std::array<double, kMaxLevel> out{};
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = probability(v[i], key);
    return out;
  }

  fs::path path(const json& v, const std::string& key) const {
    if (!v.is_string()) fail(key, "expected a path string");
    fs::path p = v.get<std::string>();
    return p.is_relative() ? (base_ / p).lexically_normal() : p;
  }

 private:
  std::string source_;
  fs::path base_;
};

void read_lifeline(const Reader& r, const json& obj, const std::string& key, LifelineParams& out) {
  r.only(obj, key, {"historical_boost", "vote_accuracy", "expert_weight"});
  if (obj.contains("historical_boost")) {
    out.historical_boost = r.probability(obj["historical_boost"], key + ".historical_boost");
  }
  if (obj.contains("vote_accuracy")) {
    out.vote_accuracy = r.levels(obj["vote_accuracy"], key + ".vote_accuracy");
  }
  if (obj.contains("expert_weight")) {
    out.expert_weight = r.number(obj["expert_weight"], key + ".expert_weight");
    if (out.expert_weight < 0) r.fail(key + ".expert_weight", "must be non-negative");
  }
}

EngineConfig read_engine(const Reader& r, const json& obj, const std::string& key) {
  r.only(obj, key,
         {"id", "type", "corpus", "index", "base_url", "path", "cache_dir", "syntax",
          "min_interval_ms"});
  EngineConfig e;
  if (obj.contains("id")) e.id = r.get<std::string>(obj["id"], key + ".id");
  const std::string type = obj.contains("type") ? r.get<std::string>(obj["type"], key + ".type")
                                                : "local";
  if (type == "local") {
    e.type = EngineType::Local;
    if (obj.contains("corpus")) e.corpus = r.path(obj["corpus"], key + ".corpus");
    if (obj.contains("index")) e.index = r.path(obj["index"], key + ".index");
  } else if (type == "live") {
    e.type = EngineType::Live;
    e.live.engine_id = e.id;
    if (!obj.contains("base_url")) r.fail(key + ".base_url", "required for a live engine");
    e.live.base_url = r.get<std::string>(obj["base_url"], key + ".base_url");
    if (obj.contains("path")) e.live.path = r.get<std::string>(obj["path"], key + ".path");
    if (obj.contains("cache_dir")) e.live.cache_dir = r.path(obj["cache_dir"], key + ".cache_dir");
    if (obj.contains("syntax")) {
      const auto s = r.get<std::string>(obj["syntax"], key + ".syntax");
      if (s == "google") {
        e.live.syntax = QuerySyntax::google();
      } else if (s == "altavista") {
        e.live.syntax = QuerySyntax::altavista();
      } else {
        r.fail(key + ".syntax", "expected google or altavista");
      }
    }
    if (obj.contains("min_interval_ms")) {
      e.live.min_interval =
          std::chrono::milliseconds(r.get<std::int64_t>(obj["min_interval_ms"], key + ".min_interval_ms"));
    }
  } else {
    r.fail(key + ".type", "expected local or live");
  }
  return e;
}

void read_simulation(const Reader& r, const json& obj, Config& c) {
  r.only(obj, "simulation", {"n_games", "handicap", "oracle", "forced_answer", "synthetic"});
  if (obj.contains("n_games")) c.n_games = r.get<std::size_t>(obj["n_games"], "simulation.n_games");
  if (obj.contains("handicap")) c.handicap = r.get<int>(obj["handicap"], "simulation.handicap");
  if (obj.contains("forced_answer")) {
    c.forced_answer = r.get<bool>(obj["forced_answer"], "simulation.forced_answer");
  }
  if (obj.contains("oracle")) {
    const auto o = r.get<std::string>(obj["oracle"], "simulation.oracle");
    if (o == "synthetic") {
      c.oracle = OracleKind::Synthetic;
    } else if (o == "pipeline") {
      c.oracle = OracleKind::Pipeline;
    } else {
      r.fail("simulation.oracle", "expected synthetic or pipeline");
    }
  }
  if (obj.contains("synthetic")) {
    const auto& s = obj["synthetic"];
    r.only(s, "simulation.synthetic", {"mean_correct", "mean_incorrect", "concentration"});
    if (s.contains("mean_correct")) {
      c.synthetic.mean_correct = r.probability(s["mean_correct"], "simulation.synthetic.mean_correct");
    }
    if (s.contains("mean_incorrect")) {
      c.synthetic.mean_incorrect =
          r.probability(s["mean_incorrect"], "simulation.synthetic.mean_incorrect");
    }
    if (s.contains("concentration")) {
      c.synthetic.concentration =
          r.number(s["concentration"], "simulation.synthetic.concentration");
    }
  }
}

void must_exist(const fs::path& p, const std::string& key, const std::string& source) {
  if (!fs::exists(p)) throw DataError(source, 0, key + ": " + p.string() + " does not exist");
}

void parent_must_exist(const fs::path& p, const std::string& key, const std::string& source) {
  if (p.empty()) return;
  const auto parent = p.parent_path();
  if (!parent.empty() && !fs::is_directory(parent)) {
    throw DataError(source, 0, key + ": directory " + parent.string() + " does not exist");
  }
}

}  // namespace

std::string_view to_string(OracleKind k) {
  return k == OracleKind::Synthetic ? "synthetic" : "pipeline";
}

SyntheticModel Config::synthetic_model() const {
  SyntheticModel m = synthetic;
  m.accuracy = levels;
  return m;
}

SimulationParams Config::simulation() const {
  SimulationParams p;
  p.n_games = n_games;
  p.risk = risk;
  p.handicap = handicap;
  p.seed = seed;
  p.levels = levels;
  p.lifelines = lifelines;
  p.forced_answer = forced_answer;
  p.threads = threads;
  return p;
}

Config parse_config(const json& doc, const fs::path& base_dir, const std::string& source) {
  const Reader r(source, base_dir);
  r.only(doc, "",
         {"bank", "corpus", "engines", "strategies", "weight_mode", "hand_weights", "proximity",
          "risk", "levels", "lifelines", "simulation", "seed", "threads", "output"});
  Config c;
  if (doc.contains("bank")) c.bank = r.path(doc["bank"], "bank");
  if (doc.contains("corpus")) c.corpus = r.path(doc["corpus"], "corpus");
  if (doc.contains("engines")) {
    const auto& list = doc["engines"];
    if (!list.is_array()) r.fail("engines", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      c.engines.push_back(read_engine(r, list[i], "engines[" + std::to_string(i) + "]"));
    }
  }
  if (doc.contains("strategies")) {
    const auto& list = doc["strategies"];
    if (!list.is_array() || list.empty()) r.fail("strategies", "expected a non-empty array");
    c.pipeline.strategies.clear();
    for (const auto& s : list) {
      const auto parsed = parse_strategy(r.get<std::string>(s, "strategies"));
      if (!parsed) r.fail("strategies", "unknown strategy " + s.dump());
      c.pipeline.strategies.push_back(*parsed);
    }
  }
  if (doc.contains("weight_mode")) {
    const auto m = parse_weight_mode(r.get<std::string>(doc["weight_mode"], "weight_mode"));
    if (!m) r.fail("weight_mode", "expected hand_tuned or confidence");
    c.pipeline.weight_mode = *m;
  }
  if (doc.contains("hand_weights")) {
    const auto& h = doc["hand_weights"];
    r.only(h, "hand_weights", {"naive", "proximity", "noun_phrase"});
    if (h.contains("naive")) c.pipeline.hand.naive = r.probability(h["naive"], "hand_weights.naive");
    if (h.contains("proximity")) {
      c.pipeline.hand.proximity = r.probability(h["proximity"], "hand_weights.proximity");
    }
    if (h.contains("noun_phrase")) {
      c.pipeline.hand.noun_phrase = r.probability(h["noun_phrase"], "hand_weights.noun_phrase");
    }
  }
  if (doc.contains("proximity")) {
    const auto& p = doc["proximity"];
    r.only(p, "proximity", {"radius", "docs_per_query"});
    if (p.contains("radius")) c.pipeline.proximity.radius = r.get<int>(p["radius"], "proximity.radius");
    if (p.contains("docs_per_query")) {
      c.pipeline.proximity.docs_per_query =
          r.get<std::size_t>(p["docs_per_query"], "proximity.docs_per_query");
    }
  }
  if (doc.contains("risk")) {
    const auto& k = doc["risk"];
    r.only(k, "risk", {"k", "alpha"});
    if (k.contains("k")) {
      if (k["k"].is_string() && k["k"] == "risk_neutral") {
        c.risk.k.reset();
      } else {
        c.risk.k = r.number(k["k"], "risk.k");
      }
    }
    if (k.contains("alpha")) c.risk.alpha = r.number(k["alpha"], "risk.alpha");
  }
  if (doc.contains("levels")) c.levels.p = r.levels(doc["levels"], "levels");
  if (doc.contains("lifelines")) {
    const auto& l = doc["lifelines"];
    r.only(l, "lifelines", {"fifty_fifty", "poll_audience", "phone_a_friend"});
    for (auto kind : kAllLifelines) {
      const std::string name(to_string(kind));
      if (l.contains(name)) read_lifeline(r, l[name], "lifelines." + name, c.lifelines[kind]);
    }
  }
  if (doc.contains("simulation")) read_simulation(r, doc["simulation"], c);
  if (doc.contains("seed")) c.seed = r.get<std::uint64_t>(doc["seed"], "seed");
  if (doc.contains("threads")) c.threads = r.get<unsigned>(doc["threads"], "threads");
  if (doc.contains("output")) {
    const auto& o = doc["output"];
    r.only(o, "output", {"index", "report", "sweep", "eval", "calibration", "trace"});
    const auto set = [&](const char* key, fs::path& dst) {
      if (o.contains(key)) dst = r.path(o[key], std::string("output.") + key);
    };
    set("index", c.output.index);
    set("report", c.output.report);
    set("sweep", c.output.sweep);
    set("eval", c.output.eval);
    set("calibration", c.output.calibration);
    set("trace", c.output.trace);
  }
  validate_config(c, source);
  return c;
}

Config load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string(), 0, "cannot open config file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError(path.string(), 0, std::string("malformed JSON: ") + e.what());
  }
  return parse_config(doc, path.parent_path(), path.string());
}

void validate_config(const Config& c, const std::string& source) {
  const auto fail = [&](const std::string& what) { throw DataError(source, 0, what); };
  if (!c.bank.empty()) must_exist(c.bank, "bank", source);
  if (!c.corpus.empty()) must_exist(c.corpus, "corpus", source);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < c.engines.size(); ++i) {
    const auto& e = c.engines[i];
    const std::string key = "engines[" + std::to_string(i) + "]";
    if (!ids.insert(e.id).second) fail(key + ".id: duplicate engine id " + e.id);
    if (e.type == EngineType::Local) {
      if (e.corpus.empty() == e.index.empty()) {
        fail(key + ": a local engine needs exactly one of corpus or index");
      }
      if (!e.corpus.empty()) must_exist(e.corpus, key + ".corpus", source);
      if (!e.index.empty()) must_exist(e.index, key + ".index", source);
    }
  }
  if (c.pipeline.proximity.radius < 1) fail("proximity.radius: must be at least 1");
  if (c.pipeline.proximity.docs_per_query < 1) fail("proximity.docs_per_query: must be at least 1");
  if (c.risk.k && !(*c.risk.k > 0.0 && std::isfinite(*c.risk.k))) {
    fail("risk.k: must be positive and finite, or \"risk_neutral\"");
  }
  if (!(c.risk.alpha > 0.0)) fail("risk.alpha: must be positive");
  if (c.n_games < 1) fail("simulation.n_games: must be at least 1");
  if (c.handicap < 0 || c.handicap > GameRules::millionaire().stages()) {
    fail("simulation.handicap: must lie in [0, 15]");
  }
  if (!(c.synthetic.concentration > 0.0)) fail("simulation.synthetic.concentration: must be positive");
  for (double m : {c.synthetic.mean_correct, c.synthetic.mean_incorrect}) {
    if (!(m > 0.0 && m < 1.0)) fail("simulation.synthetic: means must lie in (0, 1)");
  }
  parent_must_exist(c.output.index, "output.index", source);
  parent_must_exist(c.output.report, "output.report", source);
  parent_must_exist(c.output.sweep, "output.sweep", source);
  parent_must_exist(c.output.eval, "output.eval", source);
  parent_must_exist(c.output.calibration, "output.calibration", source);
  parent_must_exist(c.output.trace, "output.trace", source);
}

std::vector<std::unique_ptr<SearchBackend>> build_engines(const Config& c) {
  std::vector<std::unique_ptr<SearchBackend>> out;
  if (c.engines.empty()) {
    if (c.corpus.empty()) throw DataError("no engines configured and no corpus given");
    out.push_back(std::make_unique<LocalCorpusIndex>(index_corpus(c.corpus, "local")));
    return out;
  }
  for (const auto& e : c.engines) {
    if (e.type == EngineType::Live) {
      out.push_back(std::make_unique<LiveSearchBackend>(e.live));
    } else if (!e.index.empty()) {
      std::ifstream in(e.index);
      if (!in) throw DataError(e.index.string(), 0, "cannot open index file");
      auto index = LocalCorpusIndex::load(in, e.index.string());
      if (index.engine_id() != e.id) {
        std::vector<Document> docs = index.documents();
        out.push_back(std::make_unique<LocalCorpusIndex>(std::move(docs), e.id));
      } else {
        out.push_back(std::make_unique<LocalCorpusIndex>(std::move(index)));
      }
    } else {
      out.push_back(std::make_unique<LocalCorpusIndex>(index_corpus(e.corpus, e.id)));
    }
  }
  return out;
}

}  // namespace millionaire
