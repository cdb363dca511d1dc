#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"

#include "thetakit/election.hpp"
#include "thetakit/error.hpp"
#include "thetakit/verify/enumerate.hpp"
#include "thetakit/verify/fixtures.hpp"
#include "thetakit/verify/oracles.hpp"

namespace {

using namespace thetakit;
using verify::four_voter_example;
using verify::three_voter_cycle;

Election random_election(std::mt19937_64& rng, std::size_t max_m, std::size_t max_voters) {
  std::uniform_int_distribution<std::size_t> m_dist(1, max_m), v_dist(1, max_voters);
  const std::size_t m = m_dist(rng);
  const std::size_t voters = v_dist(rng);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("c" + std::to_string(i));
  std::vector<PreferenceOrder> orders;
  for (std::size_t v = 0; v < voters; ++v) {
    PreferenceOrder o;
    o.ranking.resize(m);
    std::iota(o.ranking.begin(), o.ranking.end(), 0);
    std::shuffle(o.ranking.begin(), o.ranking.end(), rng);
    orders.push_back(std::move(o));
  }
  return Election(names, orders);
}

TEST(Election, RejectsInvalidProfiles) {
  EXPECT_THROW(Election({}, {{{}}}), InvalidArgument);
  EXPECT_THROW(Election({"A"}, {}), InvalidArgument);
  EXPECT_THROW(Election({"A", "A"}, {{{0, 1}}}), InvalidArgument);
  EXPECT_THROW(Election({"A", "B"}, {{{0, 0}}}), InvalidArgument);
  EXPECT_THROW(Election({"A", "B"}, {{{0}}}), InvalidArgument);
  EXPECT_THROW(Election({"A", "B"}, {{{0, 2}}}), InvalidArgument);
}

TEST(PairwiseTally, ThreeVoterCycle) {
  const auto e = three_voter_cycle();
  const auto N = pairwise_tally(e);
  const auto C = *e.find("C"), D = *e.find("D"), P = *e.find("P");
  EXPECT_EQ(N[C][D], 2u);
  EXPECT_EQ(N[P][C], 2u);
  EXPECT_EQ(N[D][P], 2u);
  for (CandidateId a = 0; a < 3; ++a) {
    EXPECT_EQ(N[a][a], 0u);
    for (CandidateId b = 0; b < 3; ++b)
      if (a != b) {
        EXPECT_EQ(N[a][b] + N[b][a], e.num_voters());
      }
  }
}

TEST(PairwiseTally, SingleVoterAndFourVoterExample) {
  const auto one = Election::from_names({"a", "b"}, {{"a", "b"}});
  const auto N1 = pairwise_tally(one);
  EXPECT_EQ(N1[0][1], 1u);
  EXPECT_EQ(N1[1][0], 0u);

  const auto e = four_voter_example();
  const auto N = pairwise_tally(e);
  const auto C = *e.find("C"), D = *e.find("D"), P = *e.find("P");
  EXPECT_EQ(N[P][C], 3u);
  EXPECT_EQ(N[P][D], 3u);
  EXPECT_EQ(N[C][D], 2u);
}

TEST(Defeats, StrictMajority) {
  const auto e = four_voter_example();
  EXPECT_TRUE(defeats(e, *e.find("P"), *e.find("C")));
  // 2 of 4 is not more than half.
  EXPECT_FALSE(defeats(e, *e.find("C"), *e.find("D")));
  EXPECT_FALSE(defeats(e, *e.find("D"), *e.find("C")));

  const auto split = Election::from_names({"A", "B"}, {{"A", "B"}, {"B", "A"}});
  EXPECT_FALSE(defeats(split, 0, 1));
  EXPECT_FALSE(defeats(split, 1, 0));

  const auto cycle = three_voter_cycle();
  EXPECT_TRUE(defeats(cycle, *cycle.find("C"), *cycle.find("D")));
  EXPECT_THROW(defeats(e, 0, 0), InvalidArgument);
}

TEST(CondorcetWinner, Examples) {
  EXPECT_FALSE(condorcet_winner(three_voter_cycle()).has_value());
  const auto e = four_voter_example();
  EXPECT_EQ(condorcet_winner(e), e.find("P"));
  const auto solo = Election::from_names({"X"}, {{"X"}, {"X"}});
  EXPECT_EQ(condorcet_winner(solo), CandidateId{0});
}

TEST(ApplyRaise, WorkedExampleSteps) {
  const auto e = four_voter_example();
  const auto C = *e.find("C");
  const auto once = apply_raise(e, C, 1, 1);
  EXPECT_EQ(once.voter(1), (Election::from_names({"C", "D", "P"}, {{"C", "P", "D"}}).voter(0)));
  const auto twice = apply_raise(e, C, 3, 2);
  EXPECT_EQ(twice.voter(3), (Election::from_names({"C", "D", "P"}, {{"C", "D", "P"}}).voter(0)));
  EXPECT_EQ(apply_raise(e, C, 2, 0), e);
}

TEST(ApplyRaise, RejectsTooManySteps) {
  const auto e = four_voter_example();
  const auto C = *e.find("C");
  EXPECT_THROW(apply_raise(e, C, 0, 1), OutOfRange);  // already on top
  EXPECT_THROW(apply_raise(e, C, 3, 3), OutOfRange);
  EXPECT_THROW(apply_raise(e, C, 9, 0), OutOfRange);
}

TEST(CarrollScore, WorkedExample) {
  const auto e = four_voter_example();
  EXPECT_EQ(carroll_score(e, *e.find("P")).score, 0u);
  EXPECT_EQ(carroll_score(e, *e.find("C")).score, 3u);
  EXPECT_EQ(carroll_score(e, *e.find("D")).score, 3u);
}

TEST(CarrollScore, WitnessReplays) {
  const auto e = four_voter_example();
  for (CandidateId c = 0; c < e.num_candidates(); ++c) {
    const auto cert = carroll_score(e, c);
    EXPECT_EQ(cert.witness.size(), cert.score);
    EXPECT_EQ(condorcet_winner(apply_witness(e, cert.witness)), c);
  }
}

TEST(ScoreAtMost, Thresholds) {
  const auto e = four_voter_example();
  const auto C = *e.find("C");
  EXPECT_FALSE(score_at_most(e, C, 2));
  EXPECT_TRUE(score_at_most(e, C, 3));
  EXPECT_TRUE(score_at_most(e, C, max_score_bound(e)));
  EXPECT_EQ(max_score_bound(e), 8u);
}

TEST(TiesOrDefeats, Examples) {
  const auto e = four_voter_example();
  const auto C = *e.find("C"), D = *e.find("D"), P = *e.find("P");
  EXPECT_TRUE(ties_or_defeats(e, C, D));
  EXPECT_TRUE(ties_or_defeats(e, D, C));
  EXPECT_TRUE(ties_or_defeats(e, P, C));
  EXPECT_FALSE(ties_or_defeats(e, C, P));
  EXPECT_THROW(ties_or_defeats(e, C, C), InvalidArgument);

  const auto clones = Election::from_names({"A", "B"}, {{"A", "B"}, {"B", "A"}});
  EXPECT_TRUE(ties_or_defeats(clones, 0, 1));
  EXPECT_TRUE(ties_or_defeats(clones, 1, 0));
}

TEST(Winners, Examples) {
  const auto e = four_voter_example();
  const auto P = *e.find("P");
  EXPECT_TRUE(is_carroll_winner(e, P));
  EXPECT_FALSE(is_carroll_winner(e, *e.find("C")));
  EXPECT_EQ(all_winners(e), std::vector<CandidateId>{P});

  const auto solo = Election::from_names({"X"}, {{"X"}});
  EXPECT_TRUE(is_carroll_winner(solo, 0));
  EXPECT_EQ(all_winners(solo), std::vector<CandidateId>{0});

  // Both candidates of a 1-1 split need one exchange (the BFS oracle agrees).
  const auto clones = Election::from_names({"A", "B"}, {{"A", "B"}, {"B", "A"}});
  EXPECT_EQ(verify::bfs_carroll_score(clones, 0), 1u);
  EXPECT_EQ(verify::bfs_carroll_score(clones, 1), 1u);
  EXPECT_EQ(all_winners(clones), (std::vector<CandidateId>{0, 1}));
}

// Properties over random elections.

TEST(ElectionProperties, ZeroScoreIffCondorcetWinner) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto e = random_election(rng, 5, 6);
    const auto w = condorcet_winner(e);
    for (CandidateId c = 0; c < e.num_candidates(); ++c)
      EXPECT_EQ(carroll_score(e, c).score == 0, w == c);
  }
}

TEST(ElectionProperties, RenamingInvariance) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const auto e = random_election(rng, 5, 6);
    const std::size_t m = e.num_candidates();
    std::vector<CandidateId> relabel(m);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);

    std::vector<std::string> names(m);
    for (CandidateId c = 0; c < m; ++c) names[relabel[c]] = e.name(c);
    std::vector<PreferenceOrder> voters;
    for (const auto& v : e.voters()) {
      PreferenceOrder o;
      for (auto c : v.ranking) o.ranking.push_back(relabel[c]);
      voters.push_back(std::move(o));
    }
    std::shuffle(voters.begin(), voters.end(), rng);
    const Election renamed(names, voters);

    for (CandidateId c = 0; c < m; ++c)
      EXPECT_EQ(carroll_score(e, c).score, carroll_score(renamed, relabel[c]).score);
  }
}

TEST(ElectionProperties, ThresholdMonotoneAndWitnessSound) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto e = random_election(rng, 5, 7);
    for (CandidateId c = 0; c < e.num_candidates(); ++c) {
      const auto cert = carroll_score(e, c);
      EXPECT_LE(cert.score, max_score_bound(e));
      EXPECT_EQ(condorcet_winner(apply_witness(e, cert.witness)), c);
      bool previous = false;
      for (std::uint64_t k = 0; k <= max_score_bound(e); ++k) {
        const bool now = score_at_most(e, c, k);
        EXPECT_TRUE(!previous || now);
        EXPECT_EQ(now, k >= cert.score);
        previous = now;
      }
    }
  }
}

TEST(ElectionProperties, WinnersAreArgminOfScores) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 150; ++i) {
    const auto e = random_election(rng, 5, 6);
    std::vector<std::uint64_t> scores;
    for (CandidateId c = 0; c < e.num_candidates(); ++c) scores.push_back(carroll_score(e, c).score);
    const auto low = *std::min_element(scores.begin(), scores.end());
    const auto winners = all_winners(e);
    ASSERT_FALSE(winners.empty());
    for (CandidateId c = 0; c < e.num_candidates(); ++c) {
      const bool listed = std::find(winners.begin(), winners.end(), c) != winners.end();
      EXPECT_EQ(listed, scores[c] == low);
      EXPECT_EQ(is_carroll_winner(e, c), scores[c] == low);
    }
  }
}

// Beyond the exhaustive 3x3 acceptance sweep: four candidates, three voters.
TEST(ElectionProperties, MatchesBfsOracleOnFourCandidates) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 40; ++i) {
    auto e = random_election(rng, 4, 3);
    for (CandidateId c = 0; c < e.num_candidates(); ++c)
      EXPECT_EQ(carroll_score(e, c).score, verify::bfs_carroll_score(e, c));
  }
}

}  // namespace
