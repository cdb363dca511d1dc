#include "thetakit/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetakit/election.hpp"
#include "thetakit/error.hpp"
#include "thetakit/formats.hpp"
#include "thetakit/greedy.hpp"
#include "thetakit/independent_set.hpp"
#include "thetakit/query_engine.hpp"
#include "thetakit/rational.hpp"
#include "thetakit/reduction.hpp"
#include "thetakit/verify/acceptance.hpp"

namespace thetakit::cli {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Election load_election(const Command& cmd) {
  if (cmd.election.empty()) throw InvalidArgument("--election is required");
  return parse_election(read_file(cmd.election));
}

Graph load_graph(const std::string& path, const char* flag, std::ostream& err) {
  if (path.empty()) throw InvalidArgument(std::string(flag) + " is required");
  std::vector<std::string> warnings;
  Graph g = parse_graph(read_file(path), &warnings);
  for (const auto& w : warnings) err << "warning: " << path << ": " << w << '\n';
  return g;
}

CandidateId require_candidate(const Election& e, const std::string& name) {
  auto id = e.find(name);
  if (!id) throw InvalidArgument("unknown candidate '" + name + "'");
  return *id;
}

std::string join_names(const Election& e, const std::vector<CandidateId>& ids) {
  std::string s;
  for (auto id : ids) s += (s.empty() ? "" : " ") + e.name(id);
  return s;
}

std::string one_based(const std::vector<Vertex>& vs) {
  std::string s;
  for (auto v : vs) s += (s.empty() ? "" : " ") + std::to_string(v + 1);
  return s;
}

SearchBudget budget_of(const Command& cmd) {
  SearchBudget b;
  b.max_states = cmd.budget;
  return b;
}

void election_score(const Command& cmd, Report& rep) {
  const Election e = load_election(cmd);
  std::vector<CandidateId> ids;
  if (!cmd.candidate.empty()) {
    ids.push_back(require_candidate(e, cmd.candidate));
  } else {
    for (CandidateId c = 0; c < e.num_candidates(); ++c) ids.push_back(c);
  }
  for (auto c : ids) rep.add("score " + e.name(c), std::to_string(carroll_score(e, c).score));
}

void election_winner(const Command& cmd, Report& rep) {
  const Election e = load_election(cmd);
  if (!cmd.candidate.empty()) {
    QueryEngine engine;
    const auto c = require_candidate(e, cmd.candidate);
    rep.add("carroll-winner " + e.name(c), yes_no(carroll_winner_pipeline(engine, e, c)));
    return;
  }
  const auto winners = all_winners(e);
  rep.add(winners.size() == 1 ? "winner" : "winners", join_names(e, winners));
}

void condorcet(const Command& cmd, Report& rep) {
  const Election e = load_election(cmd);
  for (CandidateId a = 0; a < e.num_candidates(); ++a)
    for (CandidateId b = 0; b < e.num_candidates(); ++b)
      if (a != b && defeats(e, a, b)) rep.add("beats " + e.name(a), e.name(b));
  const auto w = condorcet_winner(e);
  rep.add("condorcet", w ? e.name(*w) : "none");
}

void graph_alpha(const Command& cmd, Report& rep, std::ostream& err) {
  const Graph g = load_graph(cmd.graph, "--graph", err);
  const auto set = maximum_independent_set(g);
  rep.add("alpha", std::to_string(set.count()));
  rep.add("independent-set", one_based(to_vector(set)));
}

void graph_mdg(const Command& cmd, Report& rep, std::ostream& err) {
  const Graph g = load_graph(cmd.graph, "--graph", err);
  const auto result = mdg_max(g, budget_of(cmd));
  rep.add("mdg", std::to_string(result.value));
  rep.add("mdg-trace", one_based(result.trace.picks));
}

void graph_sr(const Command& cmd, Report& rep, std::ostream& err) {
  const Graph g = load_graph(cmd.graph, "--graph", err);
  const Rational r = Rational::parse(cmd.r);
  rep.add("in-S[" + r.str() + "]", yes_no(in_S_r(g, r, budget_of(cmd))));
}

void reduce(const Command& cmd, Report& rep, std::ostream& err) {
  const Graph g = load_graph(cmd.graph, "--graph", err);
  const Graph h = load_graph(cmd.graph2, "--graph2", err);
  const auto art = s1_reduction(g, h);
  rep.add("k", std::to_string(art.k));
  rep.add("n", std::to_string(art.n));
  rep.add("ell", std::to_string(art.ell));
  rep.add("vertices", std::to_string(art.ghat.num_vertices()));
  rep.add("edges", std::to_string(art.ghat.num_edges()));
  if (!cmd.emit_artifact.empty()) {
    write_file(cmd.emit_artifact, format_graph(art.ghat));
    write_file(cmd.emit_artifact + ".parts", format_part_map(art));
    rep.add("artifact", cmd.emit_artifact);
    rep.add("part-map", cmd.emit_artifact + ".parts");
  }
}

void verify(const Command& cmd, Report& rep, std::ostream& err) {
  const Graph g = load_graph(cmd.graph, "--graph", err);
  const Graph h = load_graph(cmd.graph2, "--graph2", err);
  const auto r = verify_reduction(g, h, budget_of(cmd));
  rep.add("alpha(G)", std::to_string(r.alpha_g));
  rep.add("alpha(H)", std::to_string(r.alpha_h));
  rep.add("alpha(G'')", std::to_string(r.alpha_g_final));
  rep.add("alpha(H'')", std::to_string(r.alpha_h_final));
  rep.add("k", std::to_string(r.k));
  rep.add("n", std::to_string(r.n));
  rep.add("ell", std::to_string(r.ell));
  rep.add("mdg(Ghat)", std::to_string(r.mdg_ghat));
  rep.add("alpha(Ghat)", std::to_string(r.alpha_ghat));
  for (const auto& c : r.checks)
    rep.add("check " + c.name, std::string(c.passed ? "pass" : "fail") + " (" + c.detail + ")");
  rep.add("in-S[1/1](Ghat)", yes_no(r.ghat_in_s1));
  rep.add("equal-alpha", yes_no(r.equal_alpha));
  rep.verdict("reduction", r.passed() ? "PASS" : "FAIL");
}

bool selftest(Report& rep, std::ostream& out, OutputMode mode) {
  verify::AcceptanceOptions opts;
  bool all = true;
  for (const auto& res : verify::run_acceptance(opts, [&](const verify::CriterionResult& r) {
         if (mode == OutputMode::Text) out << verify::format_result(r) << '\n' << std::flush;
       })) {
    all = all && res.passed;
    rep.add("criterion " + std::to_string(res.id), res.passed ? "pass" : "fail");
  }
  rep.verdict("selftest", all ? "PASS" : "FAIL");
  return all;
}

}  // namespace

std::string_view verb_name(Verb v) {
  switch (v) {
    case Verb::ElectionScore: return "election-score";
    case Verb::ElectionWinner: return "election-winner";
    case Verb::Condorcet: return "condorcet";
    case Verb::GraphAlpha: return "graph-alpha";
    case Verb::GraphMdg: return "graph-mdg";
    case Verb::GraphSr: return "graph-sr";
    case Verb::Reduce: return "reduce";
    case Verb::VerifyReduction: return "verify-reduction";
    case Verb::Selftest: return "selftest";
  }
  return "?";
}

std::string Report::render(OutputMode mode) const {
  if (mode == OutputMode::Json) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& e : entries_) obj[e.key] = e.value;
    return obj.dump() + "\n";
  }
  std::string out;
  for (const auto& e : entries_) out += e.key + (e.colon ? ": " : " = ") + e.value + "\n";
  return out;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  Report rep;
  bool ok = true;
  try {
    switch (cmd.verb) {
      case Verb::ElectionScore: election_score(cmd, rep); break;
      case Verb::ElectionWinner: election_winner(cmd, rep); break;
      case Verb::Condorcet: condorcet(cmd, rep); break;
      case Verb::GraphAlpha: graph_alpha(cmd, rep, err); break;
      case Verb::GraphMdg: graph_mdg(cmd, rep, err); break;
      case Verb::GraphSr: graph_sr(cmd, rep, err); break;
      case Verb::Reduce: reduce(cmd, rep, err); break;
      case Verb::VerifyReduction: verify(cmd, rep, err); break;
      case Verb::Selftest:
        ok = selftest(rep, out, cmd.output);
        if (cmd.output == OutputMode::Text) {
          out << (ok ? "selftest: PASS\n" : "selftest: FAIL\n");
          return ok ? 0 : 1;
        }
        break;
    }
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimit& e) {
    err << "error: resource limit: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  out << rep.render(cmd.output);
  return ok ? 0 : 1;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Carroll elections, minimum-degree greedy and the S_1 reduction"};
  app.require_subcommand(1, 1);

  Command cmd;
  std::string output = "text";
  const std::map<std::string, OutputMode> modes = {{"text", OutputMode::Text},
                                                   {"json", OutputMode::Json}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--output", output, "Output mode")->check(CLI::IsMember({"text", "json"}));
  };
  auto election_opts = [&](CLI::App* sub, bool with_candidate) {
    sub->add_option("--election", cmd.election, "Election file")->required();
    if (with_candidate) sub->add_option("--candidate", cmd.candidate, "Candidate name");
  };
  auto graph_opts = [&](CLI::App* sub, bool pair) {
    sub->add_option("--graph", cmd.graph, "Graph file")->required();
    if (pair) sub->add_option("--graph2", cmd.graph2, "Second graph file")->required();
    sub->add_option("--budget", cmd.budget, "State budget for the exact mdg search");
  };

  std::map<CLI::App*, Verb> verbs;
  auto verb = [&](Verb v, const std::string& help) {
    CLI::App* sub = app.add_subcommand(std::string(verb_name(v)), help);
    verbs[sub] = v;
    common(sub);
    return sub;
  };
  election_opts(verb(Verb::ElectionScore, "Exact Carroll scores"), true);
  election_opts(verb(Verb::ElectionWinner, "Carroll winners, or whether --candidate wins"), true);
  election_opts(verb(Verb::Condorcet, "Pairwise defeats and the Condorcet winner"), false);
  graph_opts(verb(Verb::GraphAlpha, "Independence number"), false);
  graph_opts(verb(Verb::GraphMdg, "Best-choice minimum degree greedy value"), false);
  auto* sr = verb(Verb::GraphSr, "Membership in S_r");
  graph_opts(sr, false);
  sr->add_option("--r", cmd.r, "Approximation factor p/q >= 1");
  auto* red = verb(Verb::Reduce, "Build the S_1 reduction artifact for a graph pair");
  graph_opts(red, true);
  red->add_option("--emit-artifact", cmd.emit_artifact,
                  "Write the joined graph here and its part map to <path>.parts");
  graph_opts(verb(Verb::VerifyReduction, "Build and check the reduction with exact solvers"), true);
  verb(Verb::Selftest, "Run the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  for (const auto& [sub, v] : verbs)
    if (sub->parsed()) cmd.verb = v;
  cmd.output = modes.at(output);
  return run(cmd, out, err);
}

}  // namespace thetakit::cli
