#ifndef THETAKIT_ELECTION_HPP_
#define THETAKIT_ELECTION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace thetakit {

using CandidateId = std::uint32_t;

struct Candidate {
  CandidateId id = 0;
  std::string name;

  bool operator==(const Candidate&) const = default;
};

// A strict total order over all candidates, most-preferred first.
struct PreferenceOrder {
  std::vector<CandidateId> ranking;

  bool operator==(const PreferenceOrder&) const = default;
};

// Candidates with dense ids 0..m-1 plus a list of strict voter orders.
// Construction validates: at least one candidate and one voter, unique
// names, and every ranking a permutation of the id set.
class Election {
 public:
  Election(std::vector<std::string> names, std::vector<PreferenceOrder> voters);

  // Convenience for literals: each voter given as names, most-preferred first.
  static Election from_names(std::vector<std::string> names,
                             const std::vector<std::vector<std::string>>& voters);

  std::size_t num_candidates() const { return candidates_.size(); }
  std::size_t num_voters() const { return voters_.size(); }
  const std::vector<Candidate>& candidates() const { return candidates_; }
  const std::vector<PreferenceOrder>& voters() const { return voters_; }
  const PreferenceOrder& voter(std::size_t index) const { return voters_.at(index); }
  const std::string& name(CandidateId id) const { return candidates_.at(id).name; }
  std::optional<CandidateId> find(const std::string& name) const;

  // 0 = top of the voter's order.
  std::size_t position(std::size_t voter, CandidateId c) const;

  bool operator==(const Election&) const = default;

 private:
  std::vector<Candidate> candidates_;
  std::vector<PreferenceOrder> voters_;
};

// N[a][b] = number of voters ranking a above b.
using TallyMatrix = std::vector<std::vector<std::uint32_t>>;

// One adjacent exchange: swaps ranking[position] and ranking[position + 1]
// in the given voter's order (positions counted from the top).
struct SwapStep {
  std::size_t voter = 0;
  std::size_t position = 0;

  bool operator==(const SwapStep&) const = default;
};

struct ScoreCertificate {
  CandidateId candidate = 0;
  std::uint64_t score = 0;
  std::vector<SwapStep> witness;
};

TallyMatrix pairwise_tally(const Election& e);

// Strict majority: 2 * N[a][b] > |voters|. Throws InvalidArgument if a == b.
bool defeats(const Election& e, CandidateId a, CandidateId b);

std::optional<CandidateId> condorcet_winner(const Election& e);

// Moves c up `steps` adjacent positions in one voter's order. Throws
// OutOfRange if c sits fewer than `steps` positions from the top.
Election apply_raise(const Election& e, CandidateId c, std::size_t voter,
                     std::size_t steps);

Election apply_swap(const Election& e, SwapStep step);
Election apply_witness(const Election& e, std::span<const SwapStep> steps);

// K_max = |voters| * (m - 1): raising c to the top of every order always
// makes it a Condorcet winner, so no score exceeds this.
std::uint64_t max_score_bound(const Election& e);

// Exact Carroll (Dodgson) score with a replayable witness.
ScoreCertificate carroll_score(const Election& e, CandidateId c);

// Same search, cut off above `limit`; empty when the score exceeds it.
std::optional<ScoreCertificate> carroll_score_within(const Election& e, CandidateId c,
                                                     std::uint64_t limit);

bool score_at_most(const Election& e, CandidateId c, std::uint64_t k);

// True iff score(d) >= score(c). Throws InvalidArgument if c == d.
bool ties_or_defeats(const Election& e, CandidateId c, CandidateId d);

bool is_carroll_winner(const Election& e, CandidateId c);

// Candidates of minimum score, ascending by id. Never empty.
std::vector<CandidateId> all_winners(const Election& e);

}  // namespace thetakit

#endif  // THETAKIT_ELECTION_HPP_
