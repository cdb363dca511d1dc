#include <algorithm>
#include <random>

#include "gtest/gtest.h"

#include "thetakit/error.hpp"
#include "thetakit/greedy.hpp"
#include "thetakit/independent_set.hpp"
#include "thetakit/query_engine.hpp"
#include "thetakit/verify/enumerate.hpp"
#include "thetakit/verify/fixtures.hpp"

namespace {

using namespace thetakit;

std::vector<bool> values(const AnswerVector& av) {
  std::vector<bool> out;
  for (const auto& a : av.answers) {
    EXPECT_TRUE(a.ok()) << a.error;
    out.push_back(a.value.value_or(false));
  }
  return out;
}

TEST(QueryEngine, EmptyBatch) {
  QueryEngine engine;
  EXPECT_TRUE(engine.evaluate({}).answers.empty());
  EXPECT_EQ(engine.rounds(), 1u);
  EXPECT_EQ(engine.queries_answered(), 0u);
}

TEST(QueryEngine, ScoreThresholds) {
  const auto e = verify::four_voter_example();
  const auto C = *e.find("C");
  QueryBatch batch;
  for (std::uint64_t k = 0; k <= 3; ++k) batch.queries.push_back(score_at_most_query(e, C, k));
  EXPECT_EQ(values(evaluate_batch(batch)), (std::vector<bool>{false, false, false, true}));
}

TEST(QueryEngine, GraphQueries) {
  const auto k3 = complete_graph(3);
  QueryBatch batch{{alpha_geq_query(k3, 1), alpha_geq_query(k3, 2), mdg_geq_query(k3, 1),
                    mdg_geq_query(k3, 2), alpha_geq_query(Graph(), 0)}};
  EXPECT_EQ(values(evaluate_batch(batch)), (std::vector<bool>{true, false, true, false, true}));
}

TEST(QueryEngine, MalformedPayloadIsPerQuery) {
  QueryBatch batch{{alpha_geq_query(complete_graph(2), 1), {QueryKind::AlphaGeq, "k=1 n=2 edges=1-9"},
                    {QueryKind::ScoreAtMost, "garbage"}, mdg_geq_query(edgeless_graph(2), 2)}};
  const auto out = evaluate_batch(batch);
  ASSERT_EQ(out.answers.size(), 4u);
  EXPECT_EQ(out.answers[0].value, true);
  EXPECT_FALSE(out.answers[1].ok());
  EXPECT_FALSE(out.answers[2].ok());
  EXPECT_EQ(out.answers[3].value, true);
  EXPECT_THROW(evaluate_query(batch.queries[1]), ParseError);
}

TEST(QueryEngine, ResourceLimitIsReported) {
  EngineOptions opts;
  opts.budget.max_states = 1;
  QueryBatch batch{{mdg_geq_query(cycle_graph(12), 5)}};
  const auto out = evaluate_batch(batch, opts);
  ASSERT_FALSE(out.answers[0].ok());
  EXPECT_EQ(out.answers[0].error.rfind("resource limit: ", 0), 0u) << out.answers[0].error;
  EXPECT_THROW(evaluate_query(batch.queries[0], opts.budget), ResourceLimit);
}

TEST(QueryEngineProperties, ParallelAndShuffledMatchSequential) {
  std::mt19937_64 rng(51);
  QueryBatch batch;
  for (int i = 0; i < 60; ++i) {
    const auto g = verify::random_graph(1 + i % 8, rng);
    const std::size_t k = i % 5;
    batch.queries.push_back(i % 2 ? alpha_geq_query(g, k) : mdg_geq_query(g, k));
  }
  const auto e = verify::four_voter_example();
  for (CandidateId c = 0; c < 3; ++c)
    for (std::uint64_t k = 0; k < 5; ++k) batch.queries.push_back(score_at_most_query(e, c, k));

  const auto sequential = evaluate_batch(batch);
  EngineOptions par;
  par.threads = 4;
  EXPECT_EQ(evaluate_batch(batch, par).answers, sequential.answers);

  std::vector<std::size_t> perm(batch.queries.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  QueryBatch shuffled;
  for (auto i : perm) shuffled.queries.push_back(batch.queries[i]);
  const auto out = evaluate_batch(shuffled, par);
  for (std::size_t j = 0; j < perm.size(); ++j) EXPECT_EQ(out.answers[j], sequential.answers[perm[j]]);
}

TEST(ScoresFromAnswers, Examples) {
  EXPECT_EQ(scores_from_answers({{false, false, false, true, true}, {true, true}}),
            (std::vector<std::uint64_t>{3, 0}));
  EXPECT_THROW(scores_from_answers({{false, true, false}}), IntegrityError);
  EXPECT_THROW(scores_from_answers({{false, false}}), IntegrityError);
}

TEST(Pipelines, CarrollWinner) {
  const auto e = verify::four_voter_example();
  QueryEngine engine;
  EXPECT_TRUE(carroll_winner_pipeline(engine, e, *e.find("P")));
  EXPECT_EQ(engine.rounds(), 1u);
  QueryEngine other;
  EXPECT_FALSE(carroll_winner_pipeline(other, e, *e.find("D")));
  EXPECT_EQ(other.rounds(), 1u);
  EXPECT_EQ(other.queries_answered(), 3 * (max_score_bound(e) + 1));

  QueryEngine solo;
  EXPECT_TRUE(carroll_winner_pipeline(solo, Election::from_names({"X"}, {{"X"}}), 0));
}

TEST(Pipelines, SrMembership) {
  {
    QueryEngine engine;
    EXPECT_TRUE(sr_pipeline(engine, complete_graph(4), Rational(1, 1)));
    EXPECT_EQ(engine.rounds(), 1u);
  }
  {
    QueryEngine engine;
    EXPECT_FALSE(sr_pipeline(engine, verify::graph_from_mask(7, 59325), Rational(1, 1)));
    EXPECT_EQ(engine.rounds(), 1u);
  }
  QueryEngine engine;
  EXPECT_TRUE(sr_pipeline(engine, edgeless_graph(3), Rational(3, 2)));
  EXPECT_TRUE(sr_pipeline(engine, Graph(), Rational(1, 1)));
}

TEST(PipelineProperties, AgreeWithDirectComputation) {
  std::mt19937_64 rng(52);
  const std::vector<Rational> rs = {Rational(1, 1), Rational(4, 3), Rational(3, 2), Rational(2, 1)};
  for (int i = 0; i < 40; ++i) {
    const auto g = verify::random_graph(7, rng);
    for (const auto& r : rs) {
      QueryEngine engine;
      EXPECT_EQ(sr_pipeline(engine, g, r), in_S_r(g, r));
    }
  }
}

TEST(Serialization, RoundTrip) {
  const auto e = verify::three_voter_cycle();
  QueryBatch batch{{score_at_most_query(e, 1, 2), alpha_geq_query(cycle_graph(5), 2),
                    mdg_geq_query(Graph(), 0)}};
  const auto text = format_batch(batch);
  EXPECT_EQ(parse_batch(text).queries, batch.queries);
  EXPECT_EQ(format_batch(parse_batch(text)), text);

  AnswerVector av{{{true, ""}, {false, ""}, {std::nullopt, "line 3: bad"}}};
  const auto atext = format_answers(av);
  EXPECT_EQ(atext, "a 1\na 0\na error line 3: bad\n");
  EXPECT_EQ(parse_answers(atext).answers, av.answers);

  EXPECT_THROW(parse_batch("q nonsense k=1\n"), ParseError);
  EXPECT_THROW(parse_answers("a maybe\n"), ParseError);
}

TEST(Serialization, PayloadsAreOneBased) {
  EXPECT_EQ(alpha_geq_query(complete_graph(2), 1).payload, "k=1 n=2 edges=1-2");
  EXPECT_EQ(mdg_geq_query(Graph(), 0).payload, "k=0 n=0 edges=");
}

}  // namespace
