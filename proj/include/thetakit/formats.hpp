#ifndef THETAKIT_FORMATS_HPP_
#define THETAKIT_FORMATS_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "thetakit/election.hpp"
#include "thetakit/graph.hpp"
#include "thetakit/reduction.hpp"

namespace thetakit {

// Election text: the first content line lists candidate names; every later
// nonblank line is one voter's ranking, most-preferred first. '#' starts a
// comment. Errors are reported as ParseError with the offending line.
Election parse_election(std::string_view text);
std::string format_election(const Election& e);

// DIMACS-like graph text: "p <n> <m>" (an optional "edge" token after "p"
// is accepted), then m lines "e <u> <v>" with 1-based endpoints. Lines
// starting with 'c' are comments. Duplicate edges collapse and are reported
// through `warnings` when given; self-loops are errors.
Graph parse_graph(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::string format_graph(const Graph& g);

// Sidecar describing how a reduction artifact's vertices split into parts:
//   ell <ell> / n <n> / k <k>
//   part G1 <lo>..<hi>     (1-based, inclusive)
//   join G1 H2
struct PartMap {
  std::size_t ell = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::array<PartRange, 6> parts{};
  std::vector<PartPair> joins;
};

std::string format_part_map(const ReductionArtifact& art);
PartMap parse_part_map(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace thetakit

#endif  // THETAKIT_FORMATS_HPP_
