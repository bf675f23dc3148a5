#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "millionaire/errors.hpp"
#include "millionaire/simulator.hpp"

using namespace millionaire;

namespace {

QuestionBank make_bank(int per_level) {
  std::vector<Question> qs;
  for (int l = kMinLevel; l <= kMaxLevel; ++l) {
    for (int i = 0; i < per_level; ++i) {
      qs.push_back({"l" + std::to_string(l) + "q" + std::to_string(i), "Q?", {"a", "b", "c", "d"},
                    (l + i) % 4, l});
    }
  }
  return QuestionBank(std::move(qs));
}

// Picks the correct answer (or a wrong one) with a fixed confidence ratio.
class FixedOracle final : public QAOracle {
 public:
  FixedOracle(bool right, double ratio) : right_(right), ratio_(ratio) {}
  CombinedScores answer(const Question& q, Rng&) const override {
    CombinedScores c;
    const int chosen = right_ ? q.correct_index : (q.correct_index + 1) % 4;
    c.c.fill(0.0);
    c.c[chosen] = 1.0;
    c.c[(chosen + 1) % 4] = ratio_;
    c.chosen_index = chosen;
    c.overall_ratio = ratio_;
    return c;
  }

 private:
  bool right_;
  double ratio_;
};

// Right on even-numbered questions of each level bucket.
class HalfOracle final : public QAOracle {
 public:
  CombinedScores answer(const Question& q, Rng& rng) const override {
    const bool even = (q.id.back() - '0') % 2 == 0;
    return FixedOracle(even, 0.2).answer(q, rng);
  }
};

SimulationParams params(std::size_t n) {
  SimulationParams p;
  p.n_games = n;
  p.threads = 1;
  return p;
}

SyntheticOracle synthetic() { return SyntheticOracle(SyntheticModel{}); }

}  // namespace

TEST_CASE("perfect oracle wins every game") {
  const auto bank = make_bank(3);
  const FixedOracle oracle(true, 0.0);
  for (int h : {0, 4, 14}) {
    auto p = params(1);
    p.handicap = h;
    Rng rng(1);
    const auto rec = play_game(p, rng, bank, oracle);
    CHECK(rec.final_prize == 1000000);
    CHECK(rec.questions_right == 15 - h);
    CHECK(rec.lifelines_used == 0);
    CHECK(rec.end_reason == EndReason::Won);
  }
  const auto report = simulate(params(100), bank, oracle);
  CHECK(report.avg_winnings == 1000000.0);
  CHECK(report.std_winnings == 0.0);
  CHECK(report.pct_zero == 0.0);
  CHECK(report.rows.back().stop == 100);
}

TEST_CASE("hopeless guess at stage 1 answers and loses") {
  const auto bank = make_bank(3);
  Rng rng(2);
  const auto rec = play_game(params(1), rng, bank, FixedOracle(false, 1.0));
  CHECK(rec.end_reason == EndReason::Wrong);
  CHECK(rec.final_prize == 0);
  CHECK(rec.end_stage == 1);
  REQUIRE(rec.stages.size() == 1);
  CHECK(rec.stages[0].llused == 0);
}

TEST_CASE("handicap 15 wins without asking") {
  auto p = params(10);
  p.handicap = 15;
  const auto bank = make_bank(3);
  Rng rng(3);
  const auto rec = play_game(p, rng, bank, synthetic());
  CHECK(rec.final_prize == 1000000);
  CHECK(rec.stages.empty());
  CHECK(rec.questions_right == 0);
  const std::vector<double> values{15.0};
  const auto rows = sweep(p, SweepDimension::Handicap, values, bank, synthetic());
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].avg_winnings == 1000000.0);
  CHECK(rows[0].std_winnings == 0.0);
  p.handicap = 16;
  CHECK_THROWS_AS(play_game(p, rng, bank, synthetic()), std::invalid_argument);
}

TEST_CASE("a game never repeats a question and a thin bucket is a data error") {
  const auto bank = make_bank(3);
  const auto records = simulate_records(params(300), bank, synthetic());
  for (const auto& r : records) {
    std::set<std::string> ids;
    for (const auto& s : r.stages) CHECK(ids.insert(s.question_id).second);
  }
  auto p = params(50);
  p.forced_answer = true;
  CHECK_THROWS_AS(simulate(p, make_bank(2), FixedOracle(true, 0.0)), DataError);
}

TEST_CASE("property: game accounting over random games") {
  const auto bank = make_bank(4);
  const auto rules = GameRules::millionaire();
  std::set<Dollars> prizes(rules.ladder.begin(), rules.ladder.end());
  prizes.insert(0);
  for (int h : {0, 3, 9}) {
    auto p = params(3000);
    p.handicap = h;
    p.seed = 100 + h;
    const auto records = simulate_records(p, bank, synthetic());
    for (const auto& r : records) {
      CHECK(prizes.contains(r.final_prize));
      CHECK(r.lifelines_used <= 3);
      CHECK(r.lifelines_good + r.lifelines_bad <= r.lifelines_used);
      CHECK(r.handicap == h);
      switch (r.end_reason) {
        case EndReason::Wrong:
          CHECK(r.final_prize == safe_amount(r.end_stage - 1, rules));
          break;
        case EndReason::Walked:
          CHECK(r.final_prize == rules.prize_at(r.end_stage - 1));
          break;
        case EndReason::Won:
          CHECK(r.final_prize == rules.top_prize());
          break;
      }
      CHECK(r.questions_right == int(std::count_if(r.stages.begin(), r.stages.end(), [](const auto& s) {
              return s.outcome == StageOutcome::Right;
            })));
    }
    const auto report = aggregate(records, rules);
    std::int64_t ending = 0;
    std::int64_t asked = static_cast<std::int64_t>(records.size());
    for (std::size_t row = 0; row < report.rows.size(); ++row) {
      const auto& r = report.rows[row];
      ending += r.ending;
      if (int(row) < h) {
        CHECK(r.right + r.wrong + r.stop == 0);
        continue;
      }
      if (int(row) == rules.stages()) {
        CHECK(r.stop == asked);
        break;
      }
      CHECK(r.right + r.wrong + r.stop == asked);
      CHECK(r.llgood + r.llbad <= r.llused);
      asked = r.right;
    }
    CHECK(ending == static_cast<std::int64_t>(records.size()));
  }
}

TEST_CASE("reports are reproducible and independent of thread count") {
  const auto bank = make_bank(4);
  auto p = params(2000);
  const auto a = to_json(simulate(p, bank, synthetic())).dump();
  const auto b = to_json(simulate(p, bank, synthetic())).dump();
  CHECK(a == b);
  p.threads = 4;
  CHECK(to_json(simulate(p, bank, synthetic())).dump() == a);
  p.seed = 8;
  CHECK(to_json(simulate(p, bank, synthetic())).dump() != a);
}

TEST_CASE("forced answers reach the first milestone at 0.95 to the fifth") {
  auto p = params(20000);
  p.forced_answer = true;
  p.levels.p = {0.95, 0.95, 0.5, 0.5, 0.5, 0.5, 0.5};
  SyntheticModel m;
  m.accuracy = p.levels;
  const auto records = simulate_records(p, make_bank(4), SyntheticOracle(m));
  const auto reached = std::count_if(records.begin(), records.end(),
                                     [](const auto& r) { return r.final_prize >= 1000; });
  CHECK(double(reached) / records.size() == doctest::Approx(0.77378).epsilon(0.02));
  for (const auto& r : records) CHECK(r.lifelines_used == 0);
}

TEST_CASE("synthetic oracle") {
  SyntheticModel m;
  Rng rng(4);
  double sum_right = 0, sum_wrong = 0;
  int n_right = 0, n_wrong = 0;
  for (int i = 0; i < 40000; ++i) {
    const auto d = synthetic_answer(7, m, rng);
    CHECK((d.ratio >= 0.0 && d.ratio <= 1.0));
    (d.correct ? sum_right : sum_wrong) += d.ratio;
    (d.correct ? n_right : n_wrong) += 1;
  }
  CHECK(sum_right / n_right == doctest::Approx(0.34).epsilon(0.03));
  CHECK(sum_wrong / n_wrong == doctest::Approx(0.58).epsilon(0.03));

  m.accuracy.p.fill(1.0);
  for (int i = 0; i < 200; ++i) CHECK(synthetic_answer(3, m, rng).correct);
  m.accuracy.p.fill(0.0);
  for (int i = 0; i < 200; ++i) CHECK_FALSE(synthetic_answer(3, m, rng).correct);

  const Question q{"q", "Q?", {"a", "b", "c", "d"}, 2, 1};
  for (int i = 0; i < 200; ++i) {
    const SyntheticDraw d{i % 2 == 0, 0.37};
    const auto c = synthetic_scores(q, d, rng);
    CHECK((c.chosen_index == 2) == d.correct);
    CHECK(c.c[c.chosen_index] == 1.0);
    CHECK(c.overall_ratio == 0.37);
    CHECK(confidence_ratio(c.c, false) == doctest::Approx(0.37));
  }
}

TEST_CASE("sweeps") {
  const auto bank = make_bank(4);
  auto p = params(500);
  const std::vector<double> one{5000.0};
  const auto rows = sweep(p, SweepDimension::K, one, bank, synthetic());
  p.risk.k = 5000.0;
  const auto direct = simulate(p, bank, synthetic());
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].avg_winnings == direct.avg_winnings);
  CHECK(rows[0].std_winnings == direct.std_winnings);

  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  const auto text = csv.str();
  CHECK(text.rfind("value,avg_winnings,std_winnings,avg_right,pct_zero\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(parse_sweep_dimension("alpha") == SweepDimension::Alpha);
  CHECK(parse_sweep_dimension("beta") == std::nullopt);
  CHECK_THROWS(sweep(p, SweepDimension::Radius, one, bank, synthetic()));
}

TEST_CASE("accuracy and calibration") {
  const auto bank = make_bank(4);
  Rng rng(0);
  const auto all = evaluate_accuracy(bank, FixedOracle(true, 0.0), rng);
  CHECK(all.overall() == 1.0);
  const auto half = calibrate(bank, HalfOracle(), rng);
  for (double p : half.p) CHECK(p == 0.5);
  const QuestionBank thin({Question{"x", "Q?", {"a", "b", "c", "d"}, 0, 1}});
  CHECK_THROWS_AS(calibrate(thin, HalfOracle(), rng), DataError);
}

TEST_CASE("pipeline oracle on the bundled data is reproducible") {
  const auto bank = load_bank(MILLIONAIRE_DATA_DIR "/bank.jsonl");
  const auto index = index_corpus(std::filesystem::path(MILLIONAIRE_DATA_DIR "/corpus.jsonl"));
  const std::vector<const SearchBackend*> engines{&index};
  Rng rng(0);
  const auto a = evaluate_accuracy(bank, PipelineOracle(engines, PipelineOptions{}), rng);
  const auto b = evaluate_accuracy(bank, PipelineOracle(engines, PipelineOptions{}), rng);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(a.total == int(bank.size()));

  const std::vector<int> radii{5, 20};
  const auto rows = radius_sweep(bank, engines, PipelineOptions{}, radii);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].combined_accuracy == a.overall());
  std::ostringstream csv;
  write_radius_csv(csv, rows);
  CHECK(csv.str().rfind("value,combined_accuracy,proximity_accuracy,naive_accuracy\n", 0) == 0);
}
