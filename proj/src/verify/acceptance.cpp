#include "thetakit/verify/acceptance.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <sstream>

#include "thetakit/election.hpp"
#include "thetakit/error.hpp"
#include "thetakit/greedy.hpp"
#include "thetakit/independent_set.hpp"
#include "thetakit/query_engine.hpp"
#include "thetakit/reduction.hpp"
#include "thetakit/verify/enumerate.hpp"
#include "thetakit/verify/fixtures.hpp"
#include "thetakit/verify/oracles.hpp"

namespace thetakit::verify {

namespace {

using Clock = std::chrono::steady_clock;

// Collects the first few mismatches and a count of checked instances.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (failures_.size() < 3) failures_.push_back(what);
  }
  void note(std::string text) { notes_ = std::move(text); }

  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << checked_ << " checks";
    if (!notes_.empty()) out << ", " << notes_;
    if (failed_) {
      out << ", " << failed_ << " failed:";
      for (const auto& f : failures_) out << " [" << f << "]";
    }
    return out.str();
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

template <typename Body>
CriterionResult timed(int id, std::string title, double limit, Body body) {
  CriterionResult r{id, std::move(title), false, {}, 0, limit};
  const auto start = Clock::now();
  Tally tally;
  try {
    body(tally);
    r.passed = tally.ok();
    r.detail = tally.summary();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = tally.summary() + "; aborted: " + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit > 0 && r.seconds > limit) {
    r.passed = false;
    r.detail += "; exceeded time limit";
  }
  return r;
}

std::vector<Graph> graph_corpus(const AcceptanceOptions& opts) {
  std::vector<Graph> corpus;
  for (std::size_t n = 0; n <= 6; ++n)
    for_each_graph(n, [&](const Graph& g) { corpus.push_back(g); });
  std::mt19937_64 rng(opts.seed);
  for (std::size_t i = 0; i < opts.random_graphs; ++i) corpus.push_back(random_graph(7, rng));
  return corpus;
}

std::vector<Graph> tree_corpus() {
  std::vector<Graph> trees;
  for (std::size_t n = 1; n <= 9; ++n)
    for (auto& t : nonisomorphic_trees(n)) trees.push_back(std::move(t));
  return trees;
}

std::vector<Election> small_profiles() {
  std::vector<Election> out;
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t v = 1; v <= 3; ++v)
      for_each_profile(m, v, [&](const Election& e) { out.push_back(e); });
  return out;
}

std::string describe(const Election& e) {
  std::string s;
  for (const auto& v : e.voters()) {
    if (!s.empty()) s += " / ";
    for (auto c : v.ranking) s += e.name(c);
  }
  return s;
}

std::string describe(const Graph& g) {
  std::string s = "n=" + std::to_string(g.num_vertices()) + " E={";
  for (const auto& [u, v] : g.edges()) s += std::to_string(u) + "-" + std::to_string(v) + " ";
  return s + "}";
}

const std::vector<Rational>& factors() {
  static const std::vector<Rational> rs = {Rational(1, 1), Rational(3, 2), Rational(2, 1)};
  return rs;
}

}  // namespace

CriterionResult check_worked_examples() {
  return timed(1, "worked election examples", 1.0, [](Tally& t) {
    const Election four = four_voter_example();
    const auto C = *four.find("C");
    const auto D = *four.find("D");
    const auto P = *four.find("P");
    t.expect(carroll_score(four, P).score == 0, "score(P) = 0");
    t.expect(carroll_score(four, C).score == 3, "score(C) = 3");
    t.expect(carroll_score(four, D).score == 3, "score(D) = 3");
    t.expect(condorcet_winner(four) == P, "Condorcet winner P");
    t.expect(all_winners(four) == std::vector<CandidateId>{P}, "winners {P}");
    t.expect(ties_or_defeats(four, C, D), "C ties-or-defeats D");
    t.expect(ties_or_defeats(four, D, C), "D ties-or-defeats C");

    const Election three = three_voter_cycle();
    const auto c = *three.find("C");
    const auto d = *three.find("D");
    const auto p = *three.find("P");
    t.expect(!condorcet_winner(three).has_value(), "no Condorcet winner in the cycle");
    t.expect(defeats(three, c, d) && !defeats(three, d, c), "C beats D");
    t.expect(defeats(three, p, c) && !defeats(three, c, p), "P beats C");
    t.expect(defeats(three, d, p) && !defeats(three, p, d), "D beats P");
  });
}

CriterionResult check_score_oracle() {
  return timed(2, "Carroll score = BFS over all adjacent exchanges", 300.0, [](Tally& t) {
    std::size_t profiles = 0;
    for (const auto& e : small_profiles()) {
      ++profiles;
      for (CandidateId c = 0; c < e.num_candidates(); ++c) {
        const auto cert = carroll_score(e, c);
        const auto oracle = bfs_carroll_score(e, c);
        t.expect(cert.score == oracle, describe(e) + " candidate " + e.name(c));
        t.expect(cert.witness.size() == cert.score &&
                     condorcet_winner(apply_witness(e, cert.witness)) == c,
                 "witness replay " + describe(e));
      }
    }
    t.note(std::to_string(profiles) + " profiles");
  });
}

CriterionResult check_mdg_oracle(const AcceptanceOptions& opts) {
  return timed(3, "mdg = naive tie-sequence enumeration; mdg <= alpha", 600.0, [&](Tally& t) {
    const auto corpus = graph_corpus(opts);
    for (const auto& g : corpus) {
      const auto result = mdg_max(g);
      const auto a = brute_force_alpha(g);
      t.expect(result.value == naive_mdg(g), "mdg " + describe(g));
      t.expect(result.value <= a && alpha(g) == a, "alpha " + describe(g));
      t.expect(result.trace.picks.size() == result.value && !check_trace(g, result.trace),
               "trace " + describe(g));
    }
    t.note(std::to_string(corpus.size()) + " graphs");
  });
}

CriterionResult check_sr_consistency(const AcceptanceOptions& opts) {
  return timed(4, "in_S_r == !not_in_S_r_via_k, monotone in r", 600.0, [&](Tally& t) {
    const auto corpus = graph_corpus(opts);
    std::size_t outside = 0;
    for (const auto& g : corpus) {
      bool previous = false;
      for (const auto& r : factors()) {
        const bool inside = in_S_r(g, r);
        t.expect(inside != not_in_S_r_via_k(g, r), "complement r=" + r.str() + " " + describe(g));
        t.expect(!previous || inside, "monotone r=" + r.str() + " " + describe(g));
        previous = inside;
        if (!inside && r == factors().front()) ++outside;
      }
    }
    t.note(std::to_string(corpus.size()) + " graphs, " + std::to_string(outside) + " outside S_1");
  });
}

CriterionResult check_trees() {
  return timed(5, "trees on <= 9 vertices are in S_1", 120.0, [](Tally& t) {
    // Unlabelled tree counts for n = 1..9.
    const std::vector<std::size_t> counts = {1, 1, 1, 2, 3, 6, 11, 23, 47};
    std::size_t total = 0;
    for (std::size_t n = 1; n <= 9; ++n) {
      const auto trees = nonisomorphic_trees(n);
      t.expect(trees.size() == counts[n - 1], "tree count n=" + std::to_string(n));
      for (const auto& tree : trees) {
        ++total;
        t.expect(tree.num_edges() + 1 == n && components(tree, tree.all_vertices()).size() == 1,
                 "not a tree " + describe(tree));
        t.expect(mdg_max(tree).value == alpha(tree), "mdg < alpha " + describe(tree));
      }
    }
    t.note(std::to_string(total) + " trees");
  });
}

CriterionResult check_transform() {
  return timed(6, "transform: alpha + k and greedy-optimal", 600.0, [](Tally& t) {
    std::size_t graphs = 0;
    for (std::size_t n = 0; n <= 6; ++n) {
      for_each_graph(n, [&](const Graph& g) {
        ++graphs;
        const Graph out = bty_transform(g);
        const auto a = alpha(out);
        t.expect(a == brute_force_alpha(g) + g.num_edges(), "alpha " + describe(g));
        t.expect(mdg_max(out).value == a, "mdg " + describe(g));
        t.expect(out.num_vertices() == n + 2 * g.num_edges(), "size " + describe(g));
      });
    }
    t.note(std::to_string(graphs) + " graphs");
  });
}

CriterionResult check_reduction(const AcceptanceOptions& opts) {
  return timed(7, "reduction equalities and iff", 0.0, [&](Tally& t) {
    std::vector<Graph> small;
    for (std::size_t n = 0; n <= 3; ++n) for_each_graph(n, [&](const Graph& g) { small.push_back(g); });
    std::vector<std::pair<Graph, Graph>> pairs;
    for (const auto& g : small)
      for (const auto& h : small) pairs.emplace_back(g, h);
    std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<std::size_t> size(1, 4);
    for (std::size_t i = 0; i < opts.random_pairs; ++i) {
      auto g = random_graph(size(rng), rng);
      auto h = random_graph(size(rng), rng);
      pairs.emplace_back(std::move(g), std::move(h));
    }

    double slowest = 0;
    std::size_t largest = 0;
    for (const auto& [g, h] : pairs) {
      const auto label = describe(g) + " vs " + describe(h);
      const auto start = Clock::now();
      try {
        const auto rep = verify_reduction(g, h, SearchBudget::with_timeout(opts.pair_budget));
        const bool equal = brute_force_alpha(g) == brute_force_alpha(h);
        t.expect(rep.passed(), "report " + label);
        t.expect(rep.mdg_ghat == rep.alpha_g_final + rep.alpha_h_final + rep.ell, "mdg " + label);
        t.expect(rep.alpha_ghat ==
                     2 * std::max(rep.alpha_g_final, rep.alpha_h_final) + rep.ell,
                 "alpha " + label);
        t.expect(rep.ghat_in_s1 == equal, "iff " + label);
        largest = std::max(largest, 8 * rep.n + 4);
      } catch (const ResourceLimit& e) {
        t.expect(false, "budget overrun " + label + ": " + e.what());
      }
      slowest = std::max(slowest, std::chrono::duration<double>(Clock::now() - start).count());
    }
    std::ostringstream note;
    note << pairs.size() << " pairs, largest Ghat " << largest << " vertices, slowest pair "
         << std::fixed << std::setprecision(2) << slowest << " s";
    t.note(note.str());
  });
}

CriterionResult check_pipelines(const AcceptanceOptions& opts) {
  return timed(8, "one-round pipelines agree with direct solvers", 0.0, [&](Tally& t) {
    QueryEngine engine;
    std::size_t calls = 0;
    auto elections = small_profiles();
    elections.push_back(three_voter_cycle());
    elections.push_back(four_voter_example());
    for (const auto& e : elections) {
      for (CandidateId c = 0; c < e.num_candidates(); ++c) {
        const auto before = engine.rounds();
        const bool piped = carroll_winner_pipeline(engine, e, c);
        ++calls;
        t.expect(engine.rounds() == before + 1, "rounds " + describe(e));
        t.expect(piped == is_carroll_winner(e, c), "winner " + describe(e));
      }
    }
    auto graphs = graph_corpus(opts);
    for (auto& tree : tree_corpus()) graphs.push_back(std::move(tree));
    for (const auto& g : graphs) {
      for (const auto& r : factors()) {
        const auto before = engine.rounds();
        const bool piped = sr_pipeline(engine, g, r);
        ++calls;
        t.expect(engine.rounds() == before + 1, "rounds " + describe(g));
        t.expect(piped == in_S_r(g, r), "S_r r=" + r.str() + " " + describe(g));
      }
    }
    t.note(std::to_string(calls) + " pipeline runs, " + std::to_string(engine.queries_answered()) +
           " queries");
  });
}

CriterionResult check_witness_replay() {
  return timed(9, "worked-example witness replay", 0.0, [](Tally& t) {
    const Election e = four_voter_example();
    const auto C = *e.find("C");
    // Raise C once for the second voter and twice for the fourth.
    const Election raised = apply_raise(apply_raise(e, C, 1, 1), C, 3, 2);
    t.expect(condorcet_winner(raised) == C, "C wins after the raises");
    const Election expected = Election::from_names(
        {"C", "D", "P"}, {{"C", "P", "D"}, {"C", "P", "D"}, {"P", "D", "C"}, {"C", "D", "P"}});
    t.expect(raised == expected, "raised profile");

    const auto cert = carroll_score(e, C);
    t.expect(cert.witness.size() == 3 && condorcet_winner(apply_witness(e, cert.witness)) == C,
             "certificate replay");
  });
}

std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& opts, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> results;
  auto add = [&](CriterionResult r) {
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  };
  add(check_worked_examples());
  add(check_score_oracle());
  add(check_mdg_oracle(opts));
  add(check_sr_consistency(opts));
  add(check_trees());
  add(check_transform());
  add(check_reduction(opts));
  add(check_pipelines(opts));
  add(check_witness_replay());
  return results;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << " (" << std::fixed
      << std::setprecision(2) << r.seconds << " s";
  if (r.time_limit > 0) out << ", limit " << std::setprecision(0) << r.time_limit << " s";
  out << ") " << r.detail;
  return out.str();
}

}  // namespace thetakit::verify
