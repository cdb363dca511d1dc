#ifndef THETAKIT_QUERY_ENGINE_HPP_
#define THETAKIT_QUERY_ENGINE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thetakit/election.hpp"
#include "thetakit/graph.hpp"
#include "thetakit/greedy.hpp"
#include "thetakit/rational.hpp"

namespace thetakit {

// One round of independent yes/no queries answered by exact solvers, then
// deterministic post-processing. No query depends on another's answer.

enum class QueryKind { ScoreAtMost, AlphaGeq, MdgGeq };

std::string_view kind_name(QueryKind kind);
std::optional<QueryKind> parse_kind(std::string_view name);

// The payload is a single line of key=value tokens:
//   score_at_most:  k=<k> c=<id> m=<m> votes=<id,id,...;id,id,...>
//   alpha_geq / mdg_geq:  k=<k> n=<n> edges=<u-v,u-v,...>   (1-based)
struct Query {
  QueryKind kind = QueryKind::AlphaGeq;
  std::string payload;

  bool operator==(const Query&) const = default;
};

Query score_at_most_query(const Election& e, CandidateId c, std::uint64_t k);
Query alpha_geq_query(const Graph& g, std::size_t k);
Query mdg_geq_query(const Graph& g, std::size_t s);

struct QueryBatch {
  std::vector<Query> queries;
};

// Either a truth value or the reason the query could not be answered.
struct Answer {
  std::optional<bool> value;
  std::string error;

  bool ok() const { return value.has_value(); }
  bool operator==(const Answer&) const = default;
};

struct AnswerVector {
  std::vector<Answer> answers;
};

struct EngineOptions {
  std::size_t threads = 1;
  SearchBudget budget;
};

// Evaluates one query. Throws ParseError for a malformed payload and
// ResourceLimit when an mdg search overruns.
bool evaluate_query(const Query& q, const SearchBudget& budget = {});

// answer[i] is the truth of query[i]; a malformed payload or overrun becomes
// an error entry without aborting the batch.
AnswerVector evaluate_batch(const QueryBatch& batch, const EngineOptions& options = {});

// Counts rounds so callers can assert a pipeline asked exactly once.
class QueryEngine {
 public:
  explicit QueryEngine(EngineOptions options = {}) : options_(options) {}

  AnswerVector evaluate(const QueryBatch& batch);
  std::size_t rounds() const { return rounds_; }
  std::size_t queries_answered() const { return queries_; }

 private:
  EngineOptions options_;
  std::size_t rounds_ = 0;
  std::size_t queries_ = 0;
};

// Each row holds the answers to "score <= k" for k = 0, 1, ...; the score is
// the first k answered true. Throws IntegrityError if a row is not of the
// form false* true+.
std::vector<std::uint64_t> scores_from_answers(const std::vector<std::vector<bool>>& rows);

// Asks score_at_most for every candidate and every k in [0, K_max] in one
// batch, then checks whether c's score is minimum.
bool carroll_winner_pipeline(QueryEngine& engine, const Election& e, CandidateId c);

// Asks alpha_geq(k) and mdg_geq(s) for k, s in [0, n] in one batch, decides
// the complement test, and negates it.
bool sr_pipeline(QueryEngine& engine, const Graph& g, const Rational& r);

// Line-oriented audit format: "q <kind> <payload>" and "a <0|1>" (or
// "a error <message>").
std::string format_batch(const QueryBatch& batch);
QueryBatch parse_batch(std::string_view text);
std::string format_answers(const AnswerVector& answers);
AnswerVector parse_answers(std::string_view text);

}  // namespace thetakit

#endif  // THETAKIT_QUERY_ENGINE_HPP_
