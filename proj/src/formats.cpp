#include "thetakit/formats.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "thetakit/error.hpp"

namespace thetakit {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<std::string> split(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) out.push_back(std::move(tok));
  return out;
}

// Nonblank lines, with everything after `comment` (if set) stripped.
std::vector<Line> content_lines(std::string_view text, std::optional<char> comment) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (comment) line = line.substr(0, line.find(*comment));
    auto tokens = split(line);
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
    start = end + 1;
  }
  return out;
}

// Number of the last line, ignoring a trailing newline.
std::size_t count_lines(std::string_view text) {
  if (text.ends_with('\n')) text.remove_suffix(1);
  std::size_t lines = 1;
  for (char ch : text) lines += ch == '\n' ? 1 : 0;
  return lines;
}

std::optional<std::size_t> to_number(const std::string& tok) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

}  // namespace

Election parse_election(std::string_view text) {
  const auto lines = content_lines(text, '#');
  if (lines.empty()) throw ParseError(count_lines(text), "missing candidate line");

  const auto& header = lines.front();
  std::map<std::string, CandidateId> ids;
  for (const auto& name : header.tokens) {
    if (!ids.emplace(name, static_cast<CandidateId>(ids.size())).second)
      throw ParseError(header.number, "duplicate candidate '" + name + "'");
  }

  std::vector<PreferenceOrder> voters;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    PreferenceOrder order;
    std::vector<bool> seen(ids.size(), false);
    for (const auto& name : line.tokens) {
      auto it = ids.find(name);
      if (it == ids.end()) throw ParseError(line.number, "unknown candidate '" + name + "'");
      if (seen[it->second]) throw ParseError(line.number, "candidate '" + name + "' ranked twice");
      seen[it->second] = true;
      order.ranking.push_back(it->second);
    }
    if (order.ranking.size() != ids.size())
      throw ParseError(line.number, "ranking lists " + std::to_string(order.ranking.size()) +
                                        " of " + std::to_string(ids.size()) + " candidates");
    voters.push_back(std::move(order));
  }
  if (voters.empty()) throw ParseError(count_lines(text), "election has no voters");
  return Election(header.tokens, std::move(voters));
}

std::string format_election(const Election& e) {
  std::ostringstream out;
  for (std::size_t i = 0; i < e.num_candidates(); ++i)
    out << (i ? " " : "") << e.candidates()[i].name;
  out << '\n';
  for (const auto& voter : e.voters()) {
    for (std::size_t i = 0; i < voter.ranking.size(); ++i)
      out << (i ? " " : "") << e.name(voter.ranking[i]);
    out << '\n';
  }
  return out.str();
}

Graph parse_graph(std::string_view text, std::vector<std::string>* warnings) {
  std::optional<Graph> g;
  std::size_t declared_edges = 0;
  std::size_t edge_lines = 0;

  for (const auto& line : content_lines(text, std::nullopt)) {
    const auto& t = line.tokens;
    if (t[0] == "c") continue;
    if (t[0] == "p") {
      if (g) throw ParseError(line.number, "second header line");
      std::size_t first = t.size() == 4 ? 2 : 1;
      if (t.size() != 3 && !(t.size() == 4 && t[1] == "edge"))
        throw ParseError(line.number, "malformed header, expected 'p <n> <m>'");
      auto n = to_number(t[first]);
      auto m = to_number(t[first + 1]);
      if (!n || !m) throw ParseError(line.number, "malformed header, expected 'p <n> <m>'");
      g.emplace(*n);
      declared_edges = *m;
      continue;
    }
    if (t[0] == "e") {
      if (!g) throw ParseError(line.number, "edge before header");
      if (t.size() != 3) throw ParseError(line.number, "malformed edge, expected 'e <u> <v>'");
      auto u = to_number(t[1]);
      auto v = to_number(t[2]);
      if (!u || !v) throw ParseError(line.number, "malformed edge, expected 'e <u> <v>'");
      if (*u < 1 || *u > g->num_vertices() || *v < 1 || *v > g->num_vertices())
        throw ParseError(line.number, "vertex index out of range 1.." +
                                          std::to_string(g->num_vertices()));
      if (*u == *v) throw ParseError(line.number, "self-loop at vertex " + t[1]);
      ++edge_lines;
      if (!g->add_edge(static_cast<Vertex>(*u - 1), static_cast<Vertex>(*v - 1)) && warnings)
        warnings->push_back("line " + std::to_string(line.number) + ": duplicate edge " + t[1] +
                            " " + t[2] + " ignored");
      continue;
    }
    throw ParseError(line.number, "unrecognized line '" + t[0] + "'");
  }
  if (!g) throw ParseError(count_lines(text), "missing 'p <n> <m>' header");
  if (edge_lines != declared_edges)
    throw ParseError(count_lines(text), "header declares " + std::to_string(declared_edges) +
                                            " edges but " + std::to_string(edge_lines) +
                                            " were listed");
  return std::move(*g);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::string format_part_map(const ReductionArtifact& art) {
  std::ostringstream out;
  out << "ell " << art.ell << '\n' << "n " << art.n << '\n' << "k " << art.k << '\n';
  for (const auto& r : art.parts)
    out << "part " << part_name(r.part) << ' ' << r.lo + 1 << ".." << r.hi << '\n';
  for (const auto& [a, b] : art.join_list)
    out << "join " << part_name(a) << ' ' << part_name(b) << '\n';
  return out.str();
}

PartMap parse_part_map(std::string_view text) {
  PartMap map;
  std::set<Part> seen;
  bool has_ell = false, has_n = false, has_k = false;
  for (const auto& line : content_lines(text, '#')) {
    const auto& t = line.tokens;
    auto bad = [&](const std::string& what) { return ParseError(line.number, what); };
    if ((t[0] == "ell" || t[0] == "n" || t[0] == "k") && t.size() == 2) {
      auto value = to_number(t[1]);
      if (!value) throw bad("malformed " + t[0] + " line");
      (t[0] == "ell" ? map.ell : t[0] == "n" ? map.n : map.k) = *value;
      (t[0] == "ell" ? has_ell : t[0] == "n" ? has_n : has_k) = true;
    } else if (t[0] == "part" && t.size() == 3) {
      auto part = parse_part(t[1]);
      const auto dots = t[2].find("..");
      if (!part || dots == std::string::npos) throw bad("malformed part line");
      auto lo = to_number(t[2].substr(0, dots));
      auto hi = to_number(t[2].substr(dots + 2));
      if (!lo || !hi || *lo < 1 || *hi + 1 < *lo) throw bad("malformed part range");
      if (!seen.insert(*part).second) throw bad("part listed twice");
      map.parts[static_cast<std::size_t>(*part)] = {*part, static_cast<Vertex>(*lo - 1),
                                                    static_cast<Vertex>(*hi)};
    } else if (t[0] == "join" && t.size() == 3) {
      auto a = parse_part(t[1]);
      auto b = parse_part(t[2]);
      if (!a || !b || *a == *b) throw bad("malformed join line");
      map.joins.emplace_back(*a, *b);
    } else {
      throw bad("unrecognized line '" + t[0] + "'");
    }
  }
  if (seen.size() != 6 || !has_ell || !has_n || !has_k)
    throw ParseError(count_lines(text), "part map needs ell, n, k and all six parts");
  return map;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace thetakit
