#include <filesystem>
#include <sstream>

#include "gtest/gtest.h"

#include "thetakit/cli.hpp"
#include "thetakit/formats.hpp"
#include "thetakit/reduction.hpp"

namespace {

using namespace thetakit;
using cli::Command;
using cli::Verb;

std::string data(const std::string& name) { return std::string(THETAKIT_TEST_DATA) + "/" + name; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const Command& cmd) {
  std::ostringstream out, err;
  const int code = cli::run(cmd, out, err);
  return {code, out.str(), err.str()};
}

Outcome run_argv(std::vector<std::string> args) {
  args.insert(args.begin(), "thetakit");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

TEST(Cli, ElectionScore) {
  Command cmd{.verb = Verb::ElectionScore, .election = data("four_voters.txt"), .candidate = "C"};
  const auto r = run(cmd);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "score C = 3\n");

  cmd.candidate.clear();
  EXPECT_EQ(run(cmd).out, "score C = 3\nscore D = 3\nscore P = 0\n");
}

TEST(Cli, WinnersAndCondorcet) {
  EXPECT_EQ(run({.verb = Verb::ElectionWinner, .election = data("four_voters.txt")}).out, "winner = P\n");
  EXPECT_EQ(run({.verb = Verb::ElectionWinner, .election = data("four_voters.txt"), .candidate = "D"}).out,
            "carroll-winner D = no\n");
  const auto cycle = run({.verb = Verb::Condorcet, .election = data("three_voter_cycle.txt")});
  EXPECT_EQ(cycle.code, 0);
  EXPECT_TRUE(contains(cycle.out, "condorcet = none\n"));
  EXPECT_TRUE(contains(cycle.out, "beats C = D\n"));
}

TEST(Cli, GraphVerbs) {
  EXPECT_EQ(run({.verb = Verb::GraphSr, .graph = data("k4.txt")}).out, "in-S[1/1] = yes\n");
  const auto a = run({.verb = Verb::GraphAlpha, .graph = data("k3.txt")});
  EXPECT_TRUE(contains(a.out, "alpha = 1\n"));
  const auto m = run({.verb = Verb::GraphMdg, .graph = data("two_isolated.txt")});
  EXPECT_EQ(m.out, "mdg = 2\nmdg-trace = 1 2\n");
}

TEST(Cli, VerifyReduction) {
  const auto same = run({.verb = Verb::VerifyReduction, .graph = data("k1.txt"), .graph2 = data("k1.txt")});
  EXPECT_EQ(same.code, 0);
  EXPECT_TRUE(contains(same.out, "mdg(Ghat) = 10\n"));
  EXPECT_TRUE(contains(same.out, "alpha(Ghat) = 10\n"));
  EXPECT_TRUE(contains(same.out, "reduction: PASS\n"));

  const auto diff =
      run({.verb = Verb::VerifyReduction, .graph = data("k1.txt"), .graph2 = data("two_isolated.txt")});
  EXPECT_EQ(diff.code, 0);
  EXPECT_TRUE(contains(diff.out, "in-S[1/1](Ghat) = no\n"));
  EXPECT_TRUE(contains(diff.out, "reduction: PASS\n"));
}

TEST(Cli, ErrorsAreNonzero) {
  const auto missing = run({.verb = Verb::GraphAlpha, .graph = data("no_such_file.txt")});
  EXPECT_NE(missing.code, 0);
  EXPECT_TRUE(missing.out.empty());
  EXPECT_TRUE(contains(missing.err, "error"));

  // Election file fed to the graph parser.
  const auto parse = run({.verb = Verb::GraphAlpha, .graph = data("four_voters.txt")});
  EXPECT_EQ(parse.code, 2);
  EXPECT_TRUE(contains(parse.err, "line"));

  EXPECT_NE(run({.verb = Verb::ElectionScore, .election = data("four_voters.txt"), .candidate = "Z"}).code, 0);
  EXPECT_NE(run({.verb = Verb::GraphSr, .graph = data("k4.txt"), .r = "1/2"}).code, 0);

  Command tiny{.verb = Verb::VerifyReduction, .graph = data("k1.txt"), .graph2 = data("k1.txt")};
  tiny.budget = 1;
  const auto limited = run(tiny);
  EXPECT_EQ(limited.code, 3);
  EXPECT_TRUE(contains(limited.err, "mdg(Ghat)"));
}

TEST(Cli, RerunsAreByteIdentical) {
  const Command cmd{.verb = Verb::VerifyReduction, .graph = data("k3.txt"), .graph2 = data("two_isolated.txt")};
  const auto first = run(cmd);
  EXPECT_EQ(first.out, run(cmd).out);
  Command json = cmd;
  json.output = cli::OutputMode::Json;
  const auto j = run(json);
  EXPECT_EQ(j.out, run(json).out);
  EXPECT_EQ(j.out.front(), '{');
}

TEST(Cli, EmittedArtifactReparses) {
  const auto dir = std::filesystem::temp_directory_path() / "thetakit_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "ghat.txt").string();
  const auto r = run({.verb = Verb::Reduce, .graph = data("k3.txt"), .graph2 = data("k1.txt"),
                      .emit_artifact = path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ghat = parse_graph(read_file(path));
  const auto map = parse_part_map(read_file(path + ".parts"));
  EXPECT_TRUE(check_structure(ghat, map.parts, map.joins, map.ell, map.n).empty());
  EXPECT_EQ(ghat, s1_reduction(complete_graph(3), complete_graph(1)).ghat);
  std::filesystem::remove_all(dir);
}

TEST(Cli, ArgvParsing) {
  const auto r = run_argv({"election-score", "--election", data("four_voters.txt"), "--candidate", "D"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "score D = 3\n");
  const auto j = run_argv({"graph-sr", "--graph", data("k4.txt"), "--r", "3/2", "--output", "json"});
  EXPECT_EQ(j.out, "{\"in-S[3/2]\":\"yes\"}\n");
  EXPECT_NE(run_argv({"graph-alpha"}).code, 0);
  EXPECT_NE(run_argv({"no-such-verb"}).code, 0);
}

}  // namespace
