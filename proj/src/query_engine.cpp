#include "thetakit/query_engine.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <map>
#include <sstream>
#include <thread>

#include "thetakit/error.hpp"
#include "thetakit/independent_set.hpp"

namespace thetakit {

namespace {

constexpr std::string_view kResourcePrefix = "resource limit: ";

std::uint64_t payload_number(const std::string& text, const std::string& key) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError(0, "payload field '" + key + "' is not a number: '" + text + "'");
  return value;
}

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(sep, start);
    out.push_back(text.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

class Payload {
 public:
  Payload(const std::string& text, std::initializer_list<std::string_view> keys) {
    std::istringstream in(text);
    for (std::string tok; in >> tok;) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw ParseError(0, "payload token without '=': '" + tok + "'");
      auto key = tok.substr(0, eq);
      if (std::find(keys.begin(), keys.end(), key) == keys.end())
        throw ParseError(0, "unexpected payload field '" + key + "'");
      if (!fields_.emplace(key, tok.substr(eq + 1)).second)
        throw ParseError(0, "payload field '" + key + "' repeated");
    }
    for (auto key : keys)
      if (!fields_.count(std::string(key)))
        throw ParseError(0, "payload missing field '" + std::string(key) + "'");
  }

  const std::string& text(const std::string& key) const { return fields_.at(key); }
  std::uint64_t number(const std::string& key) const { return payload_number(text(key), key); }

 private:
  std::map<std::string, std::string> fields_;
};

struct ElectionPayload {
  Election election;
  CandidateId candidate;
  std::uint64_t k;
};

ElectionPayload decode_election(const std::string& text) {
  Payload p(text, {"k", "c", "m", "votes"});
  const auto m = p.number("m");
  if (m == 0) throw ParseError(0, "election payload with no candidates");
  std::vector<std::string> names;
  for (std::uint64_t i = 0; i < m; ++i) names.push_back(std::to_string(i));
  std::vector<PreferenceOrder> voters;
  for (const auto& voter : split_on(p.text("votes"), ';')) {
    PreferenceOrder order;
    for (const auto& id : split_on(voter, ','))
      order.ranking.push_back(static_cast<CandidateId>(payload_number(id, "votes")));
    voters.push_back(std::move(order));
  }
  const auto c = p.number("c");
  if (c >= m) throw ParseError(0, "payload candidate out of range");
  try {
    return {Election(std::move(names), std::move(voters)), static_cast<CandidateId>(c),
            p.number("k")};
  } catch (const InvalidArgument& e) {
    throw ParseError(0, std::string("invalid election payload: ") + e.what());
  }
}

struct GraphPayload {
  Graph graph;
  std::uint64_t k;
};

GraphPayload decode_graph(const std::string& text) {
  Payload p(text, {"k", "n", "edges"});
  Graph g(p.number("n"));
  for (const auto& edge : split_on(p.text("edges"), ',')) {
    const auto dash = edge.find('-');
    if (dash == std::string::npos) throw ParseError(0, "malformed payload edge '" + edge + "'");
    const auto u = payload_number(edge.substr(0, dash), "edges");
    const auto v = payload_number(edge.substr(dash + 1), "edges");
    if (u < 1 || v < 1 || u > g.num_vertices() || v > g.num_vertices() || u == v)
      throw ParseError(0, "invalid payload edge '" + edge + "'");
    g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  return {std::move(g), p.number("k")};
}

std::string encode_graph(const Graph& g, std::size_t k) {
  std::string out = "k=" + std::to_string(k) + " n=" + std::to_string(g.num_vertices()) + " edges=";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(u + 1) + "-" + std::to_string(v + 1);
  }
  return out;
}

Answer answer_one(const Query& q, const SearchBudget& budget) {
  try {
    return {evaluate_query(q, budget), {}};
  } catch (const ResourceLimit& e) {
    return {std::nullopt, std::string(kResourcePrefix) + e.what()};
  } catch (const std::exception& e) {
    return {std::nullopt, e.what()};
  }
}

// Unanswered queries abort a pipeline; overruns keep their type.
void require_answers(const AnswerVector& answers) {
  for (const auto& a : answers.answers) {
    if (a.ok()) continue;
    if (a.error.starts_with(kResourcePrefix)) throw ResourceLimit(a.error);
    throw IntegrityError("unanswered query: " + a.error);
  }
}

void require_monotone_down(const std::vector<bool>& row, const char* what) {
  for (std::size_t i = 1; i < row.size(); ++i)
    if (row[i] && !row[i - 1]) throw IntegrityError(std::string(what) + " answers not monotone");
}

}  // namespace

std::string_view kind_name(QueryKind kind) {
  switch (kind) {
    case QueryKind::ScoreAtMost: return "score_at_most";
    case QueryKind::AlphaGeq: return "alpha_geq";
    case QueryKind::MdgGeq: return "mdg_geq";
  }
  return "?";
}

std::optional<QueryKind> parse_kind(std::string_view name) {
  for (auto kind : {QueryKind::ScoreAtMost, QueryKind::AlphaGeq, QueryKind::MdgGeq})
    if (kind_name(kind) == name) return kind;
  return std::nullopt;
}

Query score_at_most_query(const Election& e, CandidateId c, std::uint64_t k) {
  std::string votes;
  for (std::size_t v = 0; v < e.num_voters(); ++v) {
    if (v) votes += ';';
    const auto& r = e.voter(v).ranking;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) votes += ',';
      votes += std::to_string(r[i]);
    }
  }
  return {QueryKind::ScoreAtMost, "k=" + std::to_string(k) + " c=" + std::to_string(c) +
                                      " m=" + std::to_string(e.num_candidates()) +
                                      " votes=" + votes};
}

Query alpha_geq_query(const Graph& g, std::size_t k) {
  return {QueryKind::AlphaGeq, encode_graph(g, k)};
}

Query mdg_geq_query(const Graph& g, std::size_t s) {
  return {QueryKind::MdgGeq, encode_graph(g, s)};
}

bool evaluate_query(const Query& q, const SearchBudget& budget) {
  switch (q.kind) {
    case QueryKind::ScoreAtMost: {
      auto p = decode_election(q.payload);
      return score_at_most(p.election, p.candidate, p.k);
    }
    case QueryKind::AlphaGeq: {
      auto p = decode_graph(q.payload);
      return p.k == 0 || alpha(p.graph) >= p.k;
    }
    case QueryKind::MdgGeq: {
      auto p = decode_graph(q.payload);
      return mdg_geq(p.graph, p.k, budget);
    }
  }
  throw ParseError(0, "unknown query kind");
}

AnswerVector evaluate_batch(const QueryBatch& batch, const EngineOptions& options) {
  const std::size_t count = batch.queries.size();
  AnswerVector out;
  out.answers.resize(count);
  const std::size_t workers = std::min(std::max<std::size_t>(options.threads, 1), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      out.answers[i] = answer_one(batch.queries[i], options.budget);
    return out;
  }

  // Each slot is written by exactly one worker.
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++)
          out.answers[i] = answer_one(batch.queries[i], options.budget);
      });
  }
  return out;
}

AnswerVector QueryEngine::evaluate(const QueryBatch& batch) {
  ++rounds_;
  queries_ += batch.queries.size();
  return evaluate_batch(batch, options_);
}

std::vector<std::uint64_t> scores_from_answers(const std::vector<std::vector<bool>>& rows) {
  std::vector<std::uint64_t> scores;
  for (std::size_t c = 0; c < rows.size(); ++c) {
    const auto& row = rows[c];
    const auto first = std::find(row.begin(), row.end(), true);
    if (first == row.end() || !std::all_of(first, row.end(), [](bool b) { return b; }))
      throw IntegrityError("answer row " + std::to_string(c) + " is not false* true+");
    scores.push_back(static_cast<std::uint64_t>(first - row.begin()));
  }
  return scores;
}

bool carroll_winner_pipeline(QueryEngine& engine, const Election& e, CandidateId c) {
  if (c >= e.num_candidates()) throw OutOfRange("candidate id out of range");
  const std::uint64_t width = max_score_bound(e) + 1;
  QueryBatch batch;
  for (CandidateId d = 0; d < e.num_candidates(); ++d)
    for (std::uint64_t k = 0; k < width; ++k) batch.queries.push_back(score_at_most_query(e, d, k));

  const auto answers = engine.evaluate(batch);
  require_answers(answers);
  std::vector<std::vector<bool>> rows(e.num_candidates());
  for (CandidateId d = 0; d < e.num_candidates(); ++d)
    for (std::uint64_t k = 0; k < width; ++k)
      rows[d].push_back(*answers.answers[d * width + k].value);

  const auto scores = scores_from_answers(rows);
  return scores[c] == *std::min_element(scores.begin(), scores.end());
}

bool sr_pipeline(QueryEngine& engine, const Graph& g, const Rational& r) {
  const std::size_t n = g.num_vertices();
  QueryBatch batch;
  for (std::size_t k = 0; k <= n; ++k) batch.queries.push_back(alpha_geq_query(g, k));
  for (std::size_t s = 0; s <= n; ++s) batch.queries.push_back(mdg_geq_query(g, s));

  const auto answers = engine.evaluate(batch);
  require_answers(answers);
  std::vector<bool> alpha_at_least, mdg_at_least;
  for (std::size_t i = 0; i <= n; ++i) {
    alpha_at_least.push_back(*answers.answers[i].value);
    mdg_at_least.push_back(*answers.answers[n + 1 + i].value);
  }
  require_monotone_down(alpha_at_least, "alpha_geq");
  require_monotone_down(mdg_at_least, "mdg_geq");

  // mdg * num < k * den  <=>  not (mdg >= ceil(k * den / num)); the
  // threshold never exceeds k because r >= 1.
  bool outside = false;
  for (std::size_t k = 1; k <= n && !outside; ++k) {
    const unsigned __int128 scaled = static_cast<unsigned __int128>(k) * r.den();
    const auto threshold = static_cast<std::size_t>((scaled + r.num() - 1) / r.num());
    outside = alpha_at_least[k] && !mdg_at_least[threshold];
  }
  return !outside;
}

std::string format_batch(const QueryBatch& batch) {
  std::string out;
  for (const auto& q : batch.queries)
    out += "q " + std::string(kind_name(q.kind)) + " " + q.payload + "\n";
  return out;
}

QueryBatch parse_batch(std::string_view text) {
  QueryBatch batch;
  std::istringstream in{std::string(text)};
  std::size_t number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    std::istringstream fields(line);
    std::string tag, kind;
    if (!(fields >> tag)) continue;
    if (tag != "q" || !(fields >> kind)) throw ParseError(number, "expected 'q <kind> <payload>'");
    auto parsed = parse_kind(kind);
    if (!parsed) throw ParseError(number, "unknown query kind '" + kind + "'");
    std::string payload;
    std::getline(fields >> std::ws, payload);
    batch.queries.push_back({*parsed, payload});
  }
  return batch;
}

std::string format_answers(const AnswerVector& answers) {
  std::string out;
  for (const auto& a : answers.answers) {
    if (a.ok()) {
      out += *a.value ? "a 1\n" : "a 0\n";
    } else {
      std::string msg = a.error;
      std::replace(msg.begin(), msg.end(), '\n', ' ');
      out += "a error " + msg + "\n";
    }
  }
  return out;
}

AnswerVector parse_answers(std::string_view text) {
  AnswerVector out;
  std::istringstream in{std::string(text)};
  std::size_t number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    std::istringstream fields(line);
    std::string tag, value;
    if (!(fields >> tag)) continue;
    if (tag != "a" || !(fields >> value)) throw ParseError(number, "expected 'a <0|1>'");
    if (value == "0" || value == "1") {
      out.answers.push_back({value == "1", {}});
    } else if (value == "error") {
      std::string msg;
      std::getline(fields >> std::ws, msg);
      out.answers.push_back({std::nullopt, msg});
    } else {
      throw ParseError(number, "answer must be 0, 1 or error");
    }
  }
  return out;
}

}  // namespace thetakit
