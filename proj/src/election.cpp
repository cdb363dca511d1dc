#include "thetakit/election.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "thetakit/error.hpp"

namespace thetakit {

Election::Election(std::vector<std::string> names, std::vector<PreferenceOrder> voters)
    : voters_(std::move(voters)) {
  if (names.empty()) throw InvalidArgument("election needs at least one candidate");
  if (voters_.empty()) throw InvalidArgument("election needs at least one voter");

  std::set<std::string> seen;
  candidates_.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw InvalidArgument("empty candidate name");
    if (!seen.insert(names[i]).second)
      throw InvalidArgument("duplicate candidate name '" + names[i] + "'");
    candidates_.push_back({static_cast<CandidateId>(i), std::move(names[i])});
  }

  const std::size_t m = candidates_.size();
  for (std::size_t v = 0; v < voters_.size(); ++v) {
    const auto& ranking = voters_[v].ranking;
    std::vector<bool> hit(m, false);
    bool ok = ranking.size() == m;
    for (CandidateId c : ranking) {
      if (!ok) break;
      ok = c < m && !hit[c];
      if (ok) hit[c] = true;
    }
    if (!ok)
      throw InvalidArgument("voter " + std::to_string(v) +
                            " does not rank every candidate exactly once");
  }
}

Election Election::from_names(std::vector<std::string> names,
                              const std::vector<std::vector<std::string>>& voters) {
  std::vector<PreferenceOrder> orders;
  orders.reserve(voters.size());
  for (const auto& voter : voters) {
    PreferenceOrder order;
    for (const auto& n : voter) {
      auto it = std::find(names.begin(), names.end(), n);
      if (it == names.end()) throw InvalidArgument("unknown candidate '" + n + "'");
      order.ranking.push_back(static_cast<CandidateId>(it - names.begin()));
    }
    orders.push_back(std::move(order));
  }
  return Election(std::move(names), std::move(orders));
}

std::optional<CandidateId> Election::find(const std::string& name) const {
  for (const auto& c : candidates_)
    if (c.name == name) return c.id;
  return std::nullopt;
}

std::size_t Election::position(std::size_t voter, CandidateId c) const {
  const auto& ranking = voters_.at(voter).ranking;
  auto it = std::find(ranking.begin(), ranking.end(), c);
  if (it == ranking.end()) throw OutOfRange("unknown candidate id " + std::to_string(c));
  return static_cast<std::size_t>(it - ranking.begin());
}

TallyMatrix pairwise_tally(const Election& e) {
  const std::size_t m = e.num_candidates();
  TallyMatrix tally(m, std::vector<std::uint32_t>(m, 0));
  for (const auto& voter : e.voters()) {
    const auto& r = voter.ranking;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) ++tally[r[i]][r[j]];
  }
  return tally;
}

namespace {

void check_candidate(const Election& e, CandidateId c) {
  if (c >= e.num_candidates())
    throw OutOfRange("candidate id " + std::to_string(c) + " out of range");
}

bool majority(std::uint64_t count, std::size_t voters) { return 2 * count > voters; }

bool wins_all(const TallyMatrix& tally, std::size_t voters, CandidateId c) {
  for (std::size_t d = 0; d < tally.size(); ++d)
    if (d != c && !majority(tally[c][d], voters)) return false;
  return true;
}

// Branch and bound over per-voter raise amounts of the target candidate.
// Each single raise passes exactly one rival and gains exactly one vote in
// that contest, so the summed remaining deficit is an admissible bound.
class ScoreSearch {
 public:
  ScoreSearch(const Election& e, CandidateId c) : e_(e), c_(c) {
    const std::size_t n = e.num_voters();
    const std::size_t m = e.num_candidates();
    const auto tally = pairwise_tally(e);
    const std::uint64_t target = n / 2 + 1;

    need_.assign(m, 0);
    for (std::size_t d = 0; d < m; ++d)
      if (d != c && tally[c][d] < target) need_[d] = target - tally[c][d];
    total_need_ = std::accumulate(need_.begin(), need_.end(), std::uint64_t{0});

    above_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      const auto& r = e.voter(v).ranking;
      const std::size_t pos = e.position(v, c);
      for (std::size_t j = 0; j < pos; ++j) above_[v].push_back(r[pos - 1 - j]);
    }

    // available_[v][d]: voters at index >= v that still rank d above c.
    available_.assign(n + 1, std::vector<std::uint64_t>(m, 0));
    for (std::size_t v = n; v-- > 0;) {
      available_[v] = available_[v + 1];
      for (CandidateId d : above_[v]) ++available_[v][d];
    }
    raises_.assign(n, 0);
  }

  std::optional<ScoreCertificate> run(std::uint64_t limit) {
    best_ = limit + 1;
    found_ = false;
    dfs(0, 0);
    if (!found_) return std::nullopt;

    ScoreCertificate cert;
    cert.candidate = c_;
    cert.score = best_;
    for (std::size_t v = 0; v < best_raises_.size(); ++v) {
      const std::size_t pos = e_.position(v, c_);
      for (std::size_t t = 1; t <= best_raises_[v]; ++t) cert.witness.push_back({v, pos - t});
    }
    return cert;
  }

 private:
  void dfs(std::size_t v, std::uint64_t cost) {
    if (total_need_ == 0) {
      if (cost < best_) {
        best_ = cost;
        best_raises_ = raises_;
        found_ = true;
      }
      return;
    }
    if (v == above_.size() || cost + total_need_ >= best_) return;
    for (std::size_t d = 0; d < need_.size(); ++d)
      if (need_[d] > available_[v][d]) return;

    std::vector<CandidateId> passed;
    dfs(v + 1, cost);
    for (std::size_t t = 1; t <= above_[v].size() && cost + t < best_; ++t) {
      const CandidateId d = above_[v][t - 1];
      if (need_[d] == 0) continue;  // dominated by raising one step less
      --need_[d];
      --total_need_;
      passed.push_back(d);
      raises_[v] = t;
      dfs(v + 1, cost + t);
    }
    for (CandidateId d : passed) {
      ++need_[d];
      ++total_need_;
    }
    raises_[v] = 0;
  }

  const Election& e_;
  CandidateId c_;
  std::vector<std::uint64_t> need_;
  std::uint64_t total_need_ = 0;
  std::vector<std::vector<CandidateId>> above_;
  std::vector<std::vector<std::uint64_t>> available_;
  std::vector<std::size_t> raises_;
  std::vector<std::size_t> best_raises_;
  std::uint64_t best_ = 0;
  bool found_ = false;
};

}  // namespace

bool defeats(const Election& e, CandidateId a, CandidateId b) {
  check_candidate(e, a);
  check_candidate(e, b);
  if (a == b) throw InvalidArgument("defeats: a candidate cannot face itself");
  std::uint64_t count = 0;
  for (std::size_t v = 0; v < e.num_voters(); ++v)
    if (e.position(v, a) < e.position(v, b)) ++count;
  return majority(count, e.num_voters());
}

std::optional<CandidateId> condorcet_winner(const Election& e) {
  const auto tally = pairwise_tally(e);
  for (CandidateId c = 0; c < e.num_candidates(); ++c)
    if (wins_all(tally, e.num_voters(), c)) return c;
  return std::nullopt;
}

Election apply_raise(const Election& e, CandidateId c, std::size_t voter,
                     std::size_t steps) {
  check_candidate(e, c);
  if (voter >= e.num_voters())
    throw OutOfRange("voter index " + std::to_string(voter) + " out of range");
  const std::size_t pos = e.position(voter, c);
  if (steps > pos)
    throw OutOfRange("cannot raise " + e.name(c) + " by " + std::to_string(steps) +
                     " from depth " + std::to_string(pos));
  Election out = e;
  for (std::size_t t = 1; t <= steps; ++t) out = apply_swap(out, {voter, pos - t});
  return out;
}

Election apply_swap(const Election& e, SwapStep step) {
  if (step.voter >= e.num_voters() || step.position + 1 >= e.num_candidates())
    throw OutOfRange("swap step outside the profile");
  std::vector<std::string> names;
  for (const auto& c : e.candidates()) names.push_back(c.name);
  std::vector<PreferenceOrder> voters = e.voters();
  auto& r = voters[step.voter].ranking;
  std::swap(r[step.position], r[step.position + 1]);
  return Election(std::move(names), std::move(voters));
}

Election apply_witness(const Election& e, std::span<const SwapStep> steps) {
  Election out = e;
  for (const auto& s : steps) out = apply_swap(out, s);
  return out;
}

std::uint64_t max_score_bound(const Election& e) {
  return static_cast<std::uint64_t>(e.num_voters()) * (e.num_candidates() - 1);
}

std::optional<ScoreCertificate> carroll_score_within(const Election& e, CandidateId c,
                                                     std::uint64_t limit) {
  check_candidate(e, c);
  return ScoreSearch(e, c).run(limit);
}

ScoreCertificate carroll_score(const Election& e, CandidateId c) {
  auto cert = carroll_score_within(e, c, max_score_bound(e));
  if (!cert) throw IntegrityError("no score found within |voters|*(m-1)");
  return *cert;
}

bool score_at_most(const Election& e, CandidateId c, std::uint64_t k) {
  return carroll_score_within(e, c, k).has_value();
}

bool ties_or_defeats(const Election& e, CandidateId c, CandidateId d) {
  check_candidate(e, c);
  check_candidate(e, d);
  if (c == d) throw InvalidArgument("ties_or_defeats: candidates must differ");
  return carroll_score(e, d).score >= carroll_score(e, c).score;
}

bool is_carroll_winner(const Election& e, CandidateId c) {
  const std::uint64_t own = carroll_score(e, c).score;
  for (CandidateId d = 0; d < e.num_candidates(); ++d) {
    if (d == c) continue;
    // Only need to know whether d beats `own`, i.e. scores at most own - 1.
    if (own > 0 && score_at_most(e, d, own - 1)) return false;
  }
  return true;
}

std::vector<CandidateId> all_winners(const Election& e) {
  std::vector<std::uint64_t> scores;
  for (CandidateId c = 0; c < e.num_candidates(); ++c)
    scores.push_back(carroll_score(e, c).score);
  const auto low = *std::min_element(scores.begin(), scores.end());
  std::vector<CandidateId> winners;
  for (CandidateId c = 0; c < e.num_candidates(); ++c)
    if (scores[c] == low) winners.push_back(c);
  return winners;
}

}  // namespace thetakit
