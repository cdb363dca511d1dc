#ifndef THETAKIT_CLI_HPP_
#define THETAKIT_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thetakit::cli {

enum class Verb {
  ElectionScore,
  ElectionWinner,
  Condorcet,
  GraphAlpha,
  GraphMdg,
  GraphSr,
  Reduce,
  VerifyReduction,
  Selftest,
};

std::string_view verb_name(Verb v);

enum class OutputMode { Text, Json };

struct Command {
  Verb verb = Verb::Selftest;
  std::string election;
  std::string graph;
  std::string graph2;
  std::string candidate;
  std::string r = "1/1";
  std::uint64_t budget = 2'000'000;
  std::string emit_artifact;
  OutputMode output = OutputMode::Text;
};

// Ordered key/value result lines. Text mode renders "key = value" (or
// "key: value" for verdict lines); JSON mode renders one flat object.
class Report {
 public:
  void add(std::string key, std::string value) { entries_.push_back({std::move(key), std::move(value), false}); }
  void verdict(std::string key, std::string value) { entries_.push_back({std::move(key), std::move(value), true}); }
  std::string render(OutputMode mode) const;

 private:
  struct Entry {
    std::string key;
    std::string value;
    bool colon;
  };
  std::vector<Entry> entries_;
};

// Executes a parsed command. Answers go to `out`; diagnostics go to `err`.
// Returns 0 on success and nonzero only when something failed (parse error,
// resource limit, failing selftest); a "no" answer is still success.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

// Parses argv with CLI11 and runs the selected verb.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace thetakit::cli

#endif  // THETAKIT_CLI_HPP_
