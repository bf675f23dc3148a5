#include "millionaire/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "millionaire/config.hpp"
#include "millionaire/errors.hpp"

namespace millionaire {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Overrides {
  std::string config;
  std::string bank;
  std::string corpus;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::string k;
  std::optional<double> alpha;
  std::string weight_mode;
  std::vector<std::string> strategies;
  std::optional<int> radius;
  std::optional<std::size_t> docs_per_query;
  std::optional<std::size_t> games;
  std::optional<int> handicap;
  std::string oracle;
  bool forced_answer = false;
  std::string out;
};

struct SubArgs {
  std::string engine_id = "local";
  std::string question_id;
  std::vector<int> sweep_radius;
  std::size_t game_index = 0;
  std::string dimension;
  std::vector<std::string> values;
};

double parse_k_value(const std::string& s) {
  if (s == "inf" || s == "risk_neutral") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw UsageError("not a number: " + s);
  return v;
}

Config resolve_config(const Overrides& o) {
  Config c;
  std::string source = "command line";
  if (!o.config.empty()) {
    c = load_config(o.config);
    source = o.config;
  }
  if (!o.bank.empty()) c.bank = o.bank;
  if (!o.corpus.empty()) {
    c.corpus = o.corpus;
    c.engines.clear();
  }
  if (o.seed) c.seed = *o.seed;
  if (o.threads) c.threads = *o.threads;
  if (!o.k.empty()) {
    const double k = parse_k_value(o.k);
    if (std::isinf(k)) {
      c.risk.k.reset();
    } else {
      c.risk.k = k;
    }
  }
  if (o.alpha) c.risk.alpha = *o.alpha;
  if (!o.weight_mode.empty()) {
    const auto m = parse_weight_mode(o.weight_mode);
    if (!m) throw UsageError("--weight-mode must be hand_tuned or confidence");
    c.pipeline.weight_mode = *m;
  }
  if (!o.strategies.empty()) {
    c.pipeline.strategies.clear();
    for (const auto& s : o.strategies) {
      const auto parsed = parse_strategy(s);
      if (!parsed) throw UsageError("unknown strategy: " + s);
      c.pipeline.strategies.push_back(*parsed);
    }
  }
  if (o.radius) c.pipeline.proximity.radius = *o.radius;
  if (o.docs_per_query) c.pipeline.proximity.docs_per_query = *o.docs_per_query;
  if (o.games) c.n_games = *o.games;
  if (o.handicap) c.handicap = *o.handicap;
  if (!o.oracle.empty()) {
    if (o.oracle == "synthetic") {
      c.oracle = OracleKind::Synthetic;
    } else if (o.oracle == "pipeline") {
      c.oracle = OracleKind::Pipeline;
    } else {
      throw UsageError("--oracle must be synthetic or pipeline");
    }
  }
  if (o.forced_answer) c.forced_answer = true;
  validate_config(c, source);
  return c;
}

QuestionBank require_bank(const Config& c) {
  if (c.bank.empty()) throw UsageError("no question bank: pass --bank or set \"bank\" in the config");
  return load_bank(c.bank);
}

std::vector<std::unique_ptr<SearchBackend>> require_engines(const Config& c) {
  if (c.engines.empty() && c.corpus.empty()) {
    throw UsageError("no corpus: pass --corpus or set \"corpus\" or \"engines\" in the config");
  }
  return build_engines(c);
}

std::vector<const SearchBackend*> views(const std::vector<std::unique_ptr<SearchBackend>>& engines) {
  std::vector<const SearchBackend*> out;
  for (const auto& e : engines) out.push_back(e.get());
  return out;
}

// Writes to `path` when set, else to `fallback`.
class Sink {
 public:
  Sink(const fs::path& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
      return;
    }
    file_.open(path, std::ios::binary);
    if (!file_) throw DataError(path.string(), 0, "cannot open output file");
    stream_ = &file_;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

fs::path pick_output(const std::string& flag, const fs::path& configured) {
  return flag.empty() ? configured : fs::path(flag);
}

json scores_json(std::span<const double> s) { return json(std::vector<double>(s.begin(), s.end())); }

json breakdown_json(const Question& q, const AnswerBreakdown& b) {
  json experts = json::array();
  for (std::size_t i = 0; i < b.experts.size(); ++i) {
    const auto& e = b.experts[i];
    experts.push_back({{"strategy", to_string(e.vector.strategy)},
                       {"engine", e.vector.engine_id},
                       {"scores", scores_json(e.vector.scores)},
                       {"no_signal", e.vector.no_signal},
                       {"confidence_ratio", e.confidence_ratio},
                       {"weight", b.weights.weights.at(i)}});
  }
  const auto& c = b.combined;
  return json{{"question_id", q.id},
              {"question", q.text},
              {"choices", q.choices},
              {"flags", {{"inverted", b.flags.inverted}, {"saying", b.flags.saying}}},
              {"weight_mode", to_string(b.weights.mode)},
              {"experts", std::move(experts)},
              {"combined", scores_json(c.c)},
              {"overall_ratio", c.overall_ratio},
              {"chosen_index", c.chosen_index},
              {"chosen", q.choices[c.chosen_index]},
              {"correct_index", q.correct_index},
              {"correct", c.chosen_index == q.correct_index}};
}

std::unique_ptr<QAOracle> make_oracle(const Config& c,
                                      const std::vector<std::unique_ptr<SearchBackend>>& engines) {
  if (c.oracle == OracleKind::Synthetic) return std::make_unique<SyntheticOracle>(c.synthetic_model());
  return std::make_unique<PipelineOracle>(views(engines), c.pipeline);
}

int cmd_index(const Config& c, const Overrides& o, const SubArgs& a, std::ostream& out,
              std::ostream& err) {
  if (c.corpus.empty()) throw UsageError("index needs a corpus: pass --corpus or set \"corpus\"");
  const auto index = index_corpus(c.corpus, a.engine_id);
  Sink sink(pick_output(o.out, c.output.index), out);
  index.save(*sink);
  err << "indexed " << index.documents().size() << " documents from " << c.corpus.string() << '\n';
  return kExitOk;
}

int cmd_answer(const Config& c, const Overrides& o, const SubArgs& a, std::ostream& out,
               std::ostream&) {
  const auto bank = require_bank(c);
  const Question* q = bank.find(a.question_id);
  if (!q) throw DataError(c.bank.string(), 0, "no question with id " + a.question_id);
  const auto engines = require_engines(c);
  const auto ptrs = views(engines);
  const auto b = answer_question(*q, ptrs, c.pipeline, StopwordList::english());
  Sink sink(pick_output(o.out, {}), out);
  *sink << breakdown_json(*q, b).dump(2) << '\n';
  return kExitOk;
}

int cmd_eval(const Config& c, const Overrides& o, const SubArgs& a, std::ostream& out,
             std::ostream& err) {
  const auto bank = require_bank(c);
  const auto engines = require_engines(c);
  if (!a.sweep_radius.empty()) {
    const auto rows = radius_sweep(bank, views(engines), c.pipeline, a.sweep_radius);
    Sink sink(pick_output(o.out, c.output.sweep), out);
    write_radius_csv(*sink, rows);
    return kExitOk;
  }
  const PipelineOracle oracle(views(engines), c.pipeline);
  Rng rng(c.seed);
  const auto report = evaluate_accuracy(bank, oracle, rng);
  Sink sink(pick_output(o.out, c.output.eval), out);
  *sink << to_json(report).dump(2) << '\n';
  err << "accuracy " << report.correct << "/" << report.total << '\n';
  return kExitOk;
}

int cmd_calibrate(const Config& c, const Overrides& o, const SubArgs&, std::ostream& out,
                  std::ostream&) {
  const auto bank = require_bank(c);
  const auto engines = require_engines(c);
  const PipelineOracle oracle(views(engines), c.pipeline);
  Rng rng(c.seed);
  const auto levels = calibrate(bank, oracle, rng);
  Sink sink(pick_output(o.out, c.output.calibration), out);
  *sink << json{{"levels", levels.p}}.dump(2) << '\n';
  return kExitOk;
}

int cmd_play(const Config& c, const Overrides& o, const SubArgs& a, std::ostream& out,
             std::ostream&) {
  const auto bank = require_bank(c);
  std::vector<std::unique_ptr<SearchBackend>> engines;
  if (c.oracle == OracleKind::Pipeline) engines = require_engines(c);
  const auto oracle = make_oracle(c, engines);
  const auto params = c.simulation();
  const DecisionModel model(params.rules, params.levels, params.risk, params.lifelines);
  Rng rng = derive_stream(params.seed, a.game_index);
  const auto record = play_game(params, rng, bank, *oracle, model, true);

  Sink sink(pick_output(o.out, c.output.trace), out);
  for (const auto& stage : record.stages) {
    for (std::size_t i = 0; i < stage.steps.size(); ++i) {
      const auto& step = stage.steps[i];
      json branches = json::object();
      for (const auto& b : step.choice.branches) branches[std::string(to_string(b.action))] = b.utility;
      *sink << json{{"event", "decision"},
                    {"stage", stage.stage},
                    {"question_id", stage.question_id},
                    {"step", i},
                    {"pending", step.pending},
                    {"p", step.p},
                    {"branches", std::move(branches)},
                    {"action", to_string(step.choice.action)},
                    {"value", step.choice.value}}
                   .dump()
            << '\n';
    }
    *sink << json{{"event", "outcome"},
                  {"stage", stage.stage},
                  {"question_id", stage.question_id},
                  {"outcome", to_string(stage.outcome)},
                  {"llused", stage.llused},
                  {"llgood", stage.llgood},
                  {"llbad", stage.llbad}}
                 .dump()
          << '\n';
  }
  json end = to_json(record);
  end["event"] = "end";
  *sink << end.dump() << '\n';
  return kExitOk;
}

int cmd_simulate(const Config& c, const Overrides& o, const SubArgs&, std::ostream& out,
                 std::ostream& err) {
  const auto bank = require_bank(c);
  std::vector<std::unique_ptr<SearchBackend>> engines;
  if (c.oracle == OracleKind::Pipeline) engines = require_engines(c);
  const auto oracle = make_oracle(c, engines);
  const auto report = simulate(c.simulation(), bank, *oracle);
  Sink sink(pick_output(o.out, c.output.report), out);
  *sink << to_json(report).dump(2) << '\n';
  err << report.n_games << " games, " << to_string(c.oracle) << " oracle, average winnings "
      << report.avg_winnings << '\n';
  return kExitOk;
}

int cmd_sweep(const Config& c, const Overrides& o, const SubArgs& a, std::ostream& out,
              std::ostream&) {
  const auto dim = parse_sweep_dimension(a.dimension);
  if (!dim) throw UsageError("--dimension must be one of k, alpha, handicap, radius");
  if (a.values.empty()) throw UsageError("--values needs at least one value");
  const auto bank = require_bank(c);
  Sink sink(pick_output(o.out, c.output.sweep), out);

  if (*dim == SweepDimension::Radius) {
    std::vector<int> radii;
    for (const auto& v : a.values) {
      const double r = parse_k_value(v);
      if (!(r >= 1 && r == std::floor(r) && r < 1e6)) throw UsageError("bad radius: " + v);
      radii.push_back(static_cast<int>(r));
    }
    const auto engines = require_engines(c);
    write_radius_csv(*sink, radius_sweep(bank, views(engines), c.pipeline, radii));
    return kExitOk;
  }

  std::vector<double> values;
  for (const auto& v : a.values) {
    const double x = parse_k_value(v);
    if (*dim == SweepDimension::K && !(x > 0)) throw UsageError("k must be positive: " + v);
    if (*dim == SweepDimension::Alpha && !(x > 0 && std::isfinite(x))) {
      throw UsageError("alpha must be positive: " + v);
    }
    if (*dim == SweepDimension::Handicap &&
        !(x >= 0 && x <= GameRules::millionaire().stages() && x == std::floor(x))) {
      throw UsageError("handicap must be an integer in [0, 15]: " + v);
    }
    values.push_back(x);
  }
  std::vector<std::unique_ptr<SearchBackend>> engines;
  if (c.oracle == OracleKind::Pipeline) engines = require_engines(c);
  const auto oracle = make_oracle(c, engines);
  write_sweep_csv(*sink, sweep(c.simulation(), *dim, values, bank, *oracle));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trivia question answering and prize-ladder game agent", "millionaire"};
  app.require_subcommand(1);
  app.fallthrough();

  Overrides o;
  app.add_option("--config", o.config, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--bank", o.bank, "question bank (JSON Lines)");
  app.add_option("--corpus", o.corpus, "corpus (JSON Lines file or directory of text files)");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--threads", o.threads, "worker threads (0: all cores)");
  app.add_option("--k", o.k, "risk coefficient in dollars, or risk_neutral");
  app.add_option("--alpha", o.alpha, "exponent mapping confidence ratio to probability");
  app.add_option("--weight-mode", o.weight_mode, "hand_tuned or confidence");
  app.add_option("--strategies", o.strategies, "naive,proximity,noun_phrase")->delimiter(',');
  app.add_option("--radius", o.radius, "proximity radius in tokens");
  app.add_option("--docs-per-query", o.docs_per_query, "documents fetched per proximity query");
  app.add_option("--out", o.out, "write output here instead of stdout");

  SubArgs a;
  auto* index = app.add_subcommand("index", "build a local index file from the corpus");
  index->add_option("--engine-id", a.engine_id, "engine id stored in the index");

  auto* answer = app.add_subcommand("answer", "print the per-expert breakdown for one question");
  answer->add_option("--question-id", a.question_id, "question id")->required();

  auto* eval = app.add_subcommand("eval", "QA accuracy over the bank, per level and overall");
  eval->add_option("--sweep-radius", a.sweep_radius, "comma-separated radii; prints CSV")
      ->delimiter(',');

  auto* cal = app.add_subcommand("calibrate", "per-level accuracy as a LevelAccuracy JSON");

  const auto game_options = [&o](CLI::App* sub) {
    sub->add_option("--games", o.games, "number of games");
    sub->add_option("--handicap", o.handicap, "questions assumed answered before play starts");
    sub->add_option("--oracle", o.oracle, "synthetic or pipeline");
    sub->add_flag("--forced-answer", o.forced_answer, "always answer, never use lifelines");
  };
  auto* play = app.add_subcommand("play", "play one game and print a JSON-lines trace");
  game_options(play);
  play->add_option("--game", a.game_index, "game index (selects the random stream)");

  auto* sim = app.add_subcommand("simulate", "Monte Carlo simulation report (JSON)");
  game_options(sim);

  auto* sw = app.add_subcommand("sweep", "simulate over a range of one parameter (CSV)");
  game_options(sw);
  sw->add_option("--dimension", a.dimension, "k, alpha, handicap or radius")->required();
  sw->add_option("--values", a.values, "comma-separated values")->required()->delimiter(',');

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    err << '\n' << app.help();
    return kExitUsage;
  }

  try {
    const Config c = resolve_config(o);
    if (index->parsed()) return cmd_index(c, o, a, out, err);
    if (answer->parsed()) return cmd_answer(c, o, a, out, err);
    if (eval->parsed()) return cmd_eval(c, o, a, out, err);
    if (cal->parsed()) return cmd_calibrate(c, o, a, out, err);
    if (play->parsed()) return cmd_play(c, o, a, out, err);
    if (sim->parsed()) return cmd_simulate(c, o, a, out, err);
    if (sw->parsed()) return cmd_sweep(c, o, a, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace millionaire
