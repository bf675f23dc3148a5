#include "millionaire/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <ostream>
#include <set>
#include <thread>

#include "millionaire/errors.hpp"

namespace millionaire {
namespace {

using nlohmann::json;

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

const Question& draw_question(const QuestionBank& bank, int level,
                              const std::set<std::string>& used, Rng& rng) {
  std::vector<std::size_t> fresh;
  for (auto i : bank.level_indices(level)) {
    if (!used.contains(bank.questions()[i].id)) fresh.push_back(i);
  }
  if (fresh.empty()) {
    throw DataError("question bank has no unused level-" + std::to_string(level) +
                    " question left for this game");
  }
  std::uniform_int_distribution<std::size_t> pick(0, fresh.size() - 1);
  return bank.questions()[fresh[pick(rng)]];
}

std::size_t row_of(Dollars prize, const GameRules& rules) {
  if (prize == 0) return 0;
  auto it = std::find(rules.ladder.begin(), rules.ladder.end(), prize);
  if (it == rules.ladder.end()) {
    throw std::logic_error("prize " + std::to_string(prize) + " is not on the ladder");
  }
  return static_cast<std::size_t>(it - rules.ladder.begin()) + 1;
}

}  // namespace

std::string_view to_string(EndReason r) {
  switch (r) {
    case EndReason::Won:
      return "won";
    case EndReason::Wrong:
      return "wrong";
    case EndReason::Walked:
      return "walked";
  }
  return "?";
}

std::string_view to_string(StageOutcome o) {
  switch (o) {
    case StageOutcome::Right:
      return "right";
    case StageOutcome::Wrong:
      return "wrong";
    case StageOutcome::Walked:
      return "walked";
  }
  return "?";
}

GameRecord play_game(const SimulationParams& params, Rng& rng, const QuestionBank& bank,
                     const QAOracle& oracle) {
  const DecisionModel model(params.rules, params.levels, params.risk, params.lifelines);
  return play_game(params, rng, bank, oracle, model, false);
}

GameRecord play_game(const SimulationParams& params, Rng& rng, const QuestionBank& bank,
                     const QAOracle& oracle, const DecisionModel& model, bool trace) {
  const GameRules& rules = params.rules;
  const int n = rules.stages();
  if (params.handicap < 0 || params.handicap > n) {
    throw std::invalid_argument("handicap " + std::to_string(params.handicap) +
                                " outside [0, " + std::to_string(n) + "]");
  }
  GameRecord rec;
  rec.handicap = params.handicap;
  Dollars banked = rules.prize_at(params.handicap);
  LifelineSet lifelines = LifelineSet::all();
  std::set<std::string> used;

  for (int stage = params.handicap + 1; stage <= n; ++stage) {
    const int level = rules.level_of(stage);
    const Question& q = draw_question(bank, level, used, rng);
    used.insert(q.id);
    CombinedScores combined = oracle.answer(q, rng);
    double p = question_probability(combined.overall_ratio, params.risk.alpha);

    StageLog log;
    log.stage = stage;
    log.question_id = q.id;
    rec.end_stage = stage;
    for (;;) {
      ActionChoice choice;
      if (params.forced_answer) {
        choice.action = Action::Answer;
      } else {
        choice = model.best_action(GameState{stage, lifelines, banked}, p);
      }
      if (trace) log.steps.push_back(DecisionStep{combined.chosen_index, p, choice});

      if (choice.action == Action::Answer) {
        if (combined.chosen_index == q.correct_index) {
          log.outcome = StageOutcome::Right;
          ++rec.questions_right;
          banked = rules.prize_at(stage);
        } else {
          log.outcome = StageOutcome::Wrong;
          rec.end_reason = EndReason::Wrong;
          rec.final_prize = safe_amount(stage - 1, rules);
        }
        break;
      }
      if (choice.action == Action::WalkAway) {
        log.outcome = StageOutcome::Walked;
        rec.end_reason = EndReason::Walked;
        rec.final_prize = banked;
        break;
      }

      const Lifeline l = *lifeline_of(choice.action);
      const bool was_right = combined.chosen_index == q.correct_index;
      combined = l == Lifeline::FiftyFifty
                     ? apply_fifty_fifty(q, combined, rng)
                     : apply_vote_lifeline(l, q, combined, params.lifelines, level, rng);
      lifelines = lifelines.without(l);
      p = question_probability(combined.overall_ratio, params.risk.alpha);
      const bool now_right = combined.chosen_index == q.correct_index;
      ++log.llused;
      if (!was_right && now_right) ++log.llgood;
      if (was_right && !now_right) ++log.llbad;
    }
    rec.lifelines_used += log.llused;
    rec.lifelines_good += log.llgood;
    rec.lifelines_bad += log.llbad;
    const bool finished = log.outcome != StageOutcome::Right;
    rec.stages.push_back(std::move(log));
    if (finished) return rec;
  }
  rec.end_reason = EndReason::Won;
  rec.final_prize = rules.top_prize();
  rec.end_stage = n;
  return rec;
}

std::vector<GameRecord> simulate_records(const SimulationParams& params,
                                         const QuestionBank& bank, const QAOracle& oracle) {
  if (params.n_games == 0) throw std::invalid_argument("n_games must be at least 1");
  const DecisionModel model(params.rules, params.levels, params.risk, params.lifelines);
  std::vector<GameRecord> records(params.n_games);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  const auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= records.size()) return;
      try {
        Rng rng = derive_stream(params.seed, i);
        records[i] = play_game(params, rng, bank, oracle, model, false);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = records.size();
        return;
      }
    }
  };
  const unsigned workers = worker_count(params.threads, records.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

SimulationReport aggregate(std::span<const GameRecord> records, const GameRules& rules) {
  SimulationReport report;
  report.n_games = records.size();
  report.rows.resize(static_cast<std::size_t>(rules.stages()) + 1);
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    report.rows[r].prize = rules.prize_at(static_cast<int>(r));
  }

  // Integer accumulators keep the result independent of game order.
  std::int64_t sum = 0;
  __int128 sum_sq = 0;
  std::int64_t right = 0;
  std::int64_t zero = 0;
  for (const auto& g : records) {
    for (const auto& s : g.stages) {
      auto& row = report.rows[static_cast<std::size_t>(s.stage - 1)];
      switch (s.outcome) {
        case StageOutcome::Right:
          ++row.right;
          break;
        case StageOutcome::Wrong:
          ++row.wrong;
          break;
        case StageOutcome::Walked:
          ++row.stop;
          break;
      }
      row.llused += s.llused;
      row.llgood += s.llgood;
      row.llbad += s.llbad;
    }
    if (g.end_reason == EndReason::Won) ++report.rows.back().stop;
    ++report.rows[row_of(g.final_prize, rules)].ending;
    sum += g.final_prize;
    sum_sq += static_cast<__int128>(g.final_prize) * g.final_prize;
    right += g.questions_right;
    zero += g.final_prize == 0;
  }
  if (records.empty()) return report;
  const auto n = static_cast<__int128>(records.size());
  const double nd = static_cast<double>(records.size());
  report.avg_winnings = static_cast<double>(sum) / nd;
  const __int128 spread = n * sum_sq - static_cast<__int128>(sum) * sum;
  report.std_winnings = std::sqrt(static_cast<double>(spread)) / nd;
  report.avg_right = static_cast<double>(right) / nd;
  report.pct_zero = 100.0 * static_cast<double>(zero) / nd;
  return report;
}

SimulationReport simulate(const SimulationParams& params, const QuestionBank& bank,
                          const QAOracle& oracle) {
  const auto records = simulate_records(params, bank, oracle);
  return aggregate(records, params.rules);
}

json to_json(const SimulationReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"prize", r.prize},
                    {"ending", r.ending},
                    {"wrong", r.wrong},
                    {"right", r.right},
                    {"stop", r.stop},
                    {"llused", r.llused},
                    {"llgood", r.llgood},
                    {"llbad", r.llbad}});
  }
  return json{{"n_games", report.n_games},
              {"rows", std::move(rows)},
              {"avg_right", report.avg_right},
              {"avg_winnings", report.avg_winnings},
              {"std_winnings", report.std_winnings},
              {"pct_zero", report.pct_zero}};
}

json to_json(const GameRecord& record) {
  return json{{"final_prize", record.final_prize},
              {"questions_right", record.questions_right},
              {"handicap", record.handicap},
              {"end_stage", record.end_stage},
              {"end_reason", to_string(record.end_reason)},
              {"lifelines_used", record.lifelines_used},
              {"lifelines_good", record.lifelines_good},
              {"lifelines_bad", record.lifelines_bad}};
}

std::string_view to_string(SweepDimension d) {
  switch (d) {
    case SweepDimension::K:
      return "k";
    case SweepDimension::Alpha:
      return "alpha";
    case SweepDimension::Handicap:
      return "handicap";
    case SweepDimension::Radius:
      return "radius";
  }
  return "?";
}

std::optional<SweepDimension> parse_sweep_dimension(std::string_view name) {
  for (auto d : {SweepDimension::K, SweepDimension::Alpha, SweepDimension::Handicap,
                 SweepDimension::Radius}) {
    if (to_string(d) == name) return d;
  }
  return std::nullopt;
}

std::vector<SweepRow> sweep(const SimulationParams& params, SweepDimension dimension,
                            std::span<const double> values, const QuestionBank& bank,
                            const QAOracle& oracle) {
  if (values.empty()) throw std::invalid_argument("sweep needs at least one value");
  if (dimension == SweepDimension::Radius) {
    throw std::invalid_argument("radius is swept with radius_sweep");
  }
  std::vector<SweepRow> rows;
  for (double v : values) {
    SimulationParams p = params;
    switch (dimension) {
      case SweepDimension::K:
        if (std::isinf(v)) {
          p.risk.k.reset();
        } else {
          p.risk.k = v;
        }
        break;
      case SweepDimension::Alpha:
        p.risk.alpha = v;
        break;
      case SweepDimension::Handicap:
        p.handicap = static_cast<int>(v);
        break;
      case SweepDimension::Radius:
        break;
    }
    const auto report = simulate(p, bank, oracle);
    rows.push_back({v, report.avg_winnings, report.std_winnings, report.avg_right,
                    report.pct_zero});
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "value,avg_winnings,std_winnings,avg_right,pct_zero\n";
  const auto num = [](double v) { return json(v).dump(); };
  for (const auto& r : rows) {
    out << (std::isinf(r.value) ? std::string("inf") : num(r.value)) << ','
        << num(r.avg_winnings) << ',' << num(r.std_winnings) << ',' << num(r.avg_right) << ','
        << num(r.pct_zero) << '\n';
  }
}

AccuracyReport evaluate_accuracy(const QuestionBank& bank, const QAOracle& oracle, Rng& rng) {
  AccuracyReport report;
  for (const auto& q : bank.questions()) {
    const bool ok = oracle.answer(q, rng).chosen_index == q.correct_index;
    auto& tally = report.levels[q.level - kMinLevel];
    ++tally.total;
    ++report.total;
    if (ok) {
      ++tally.correct;
      ++report.correct;
    }
  }
  return report;
}

json to_json(const AccuracyReport& report) {
  json levels = json::array();
  for (int l = kMinLevel; l <= kMaxLevel; ++l) {
    const auto& t = report.levels[l - kMinLevel];
    levels.push_back({{"level", l},
                      {"correct", t.correct},
                      {"total", t.total},
                      {"accuracy", t.total == 0 ? 0.0 : double(t.correct) / t.total}});
  }
  return json{{"correct", report.correct},
              {"total", report.total},
              {"accuracy", report.overall()},
              {"levels", std::move(levels)}};
}

LevelAccuracy calibrate(const QuestionBank& bank, const QAOracle& oracle, Rng& rng) {
  LevelAccuracy out;
  for (int l = kMinLevel; l <= kMaxLevel; ++l) {
    if (bank.level_indices(l).empty()) {
      throw DataError("cannot calibrate: no level-" + std::to_string(l) + " questions");
    }
  }
  const auto report = evaluate_accuracy(bank, oracle, rng);
  for (int l = kMinLevel; l <= kMaxLevel; ++l) {
    const auto& t = report.levels[l - kMinLevel];
    out.p[l - kMinLevel] = double(t.correct) / t.total;
  }
  return out;
}

std::vector<RadiusRow> radius_sweep(const QuestionBank& bank,
                                    std::vector<const SearchBackend*> engines,
                                    const PipelineOptions& options, std::span<const int> radii,
                                    const StopwordList& stopwords) {
  if (radii.empty()) throw std::invalid_argument("radius sweep needs at least one value");
  Rng unused(0);
  PipelineOptions naive = options;
  naive.strategies = {Strategy::NaiveCount};
  const double naive_acc =
      evaluate_accuracy(bank, PipelineOracle(engines, naive, stopwords), unused).overall();

  std::vector<RadiusRow> rows;
  for (int r : radii) {
    PipelineOptions combined = options;
    combined.proximity.radius = r;
    PipelineOptions proximity = combined;
    proximity.strategies = {Strategy::WordProximity};
    rows.push_back(
        {r,
         evaluate_accuracy(bank, PipelineOracle(engines, combined, stopwords), unused).overall(),
         evaluate_accuracy(bank, PipelineOracle(engines, proximity, stopwords), unused).overall(),
         naive_acc});
  }
  return rows;
}

void write_radius_csv(std::ostream& out, std::span<const RadiusRow> rows) {
  out << "value,combined_accuracy,proximity_accuracy,naive_accuracy\n";
  for (const auto& r : rows) {
    out << r.radius << ',' << json(r.combined_accuracy).dump() << ','
        << json(r.proximity_accuracy).dump() << ',' << json(r.naive_accuracy).dump() << '\n';
  }
}

}  // namespace millionaire
