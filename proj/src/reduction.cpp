#include "thetakit/reduction.hpp"

#include <algorithm>

#include "thetakit/error.hpp"
#include "thetakit/independent_set.hpp"

namespace thetakit {

bool mis_eq(const Graph& g, const Graph& h) { return alpha(g) == alpha(h); }

EdgePadding pad_edges(const Graph& g, const Graph& h) {
  EdgePadding out{g, h, 0, {}, {}};
  const bool g_lighter = g.num_edges() < h.num_edges();
  Graph& light = g_lighter ? out.g : out.h;
  Graph& heavy = g_lighter ? out.h : out.g;
  auto& light_log = g_lighter ? out.g_gadgets : out.h_gadgets;
  auto& heavy_log = g_lighter ? out.h_gadgets : out.g_gadgets;

  auto add = [](Graph& target, std::vector<std::size_t>& log, std::size_t clique) {
    append_component(target, complete_graph(clique));
    log.push_back(clique);
  };

  std::size_t gap = heavy.num_edges() - light.num_edges();
  if (gap % 2 == 1) {
    // K2 (1 edge) vs K4 (6 edges): the gap grows by 5 and becomes even.
    add(light, light_log, 2);
    add(heavy, heavy_log, 4);
    gap += 5;
  }
  for (; gap > 0; gap -= 2) {
    add(light, light_log, 3);
    add(heavy, heavy_log, 2);
  }
  out.k = out.g.num_edges();
  return out;
}

Graph bty_transform(const Graph& g) {
  const auto edges = g.edges();
  const std::size_t n = g.num_vertices();
  Graph out(n + 2 * edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto a = static_cast<Vertex>(n + 2 * i);
    const auto b = static_cast<Vertex>(a + 1);
    out.add_edge(edges[i].first, a);
    out.add_edge(a, b);
    out.add_edge(b, edges[i].second);
  }
  return out;
}

VertexPadding pad_vertices(const Graph& gp, const Graph& hp) {
  VertexPadding out{gp, hp, 0, 1, 1};
  const std::size_t p = gp.num_vertices();
  const std::size_t q = hp.num_vertices();
  if (p < q) out.g_clique = q - p + 1;
  if (q < p) out.h_clique = p - q + 1;
  append_component(out.g, complete_graph(out.g_clique));
  append_component(out.h, complete_graph(out.h_clique));
  out.n = out.g.num_vertices();
  return out;
}

std::string_view part_name(Part p) {
  switch (p) {
    case Part::G1: return "G1";
    case Part::G2: return "G2";
    case Part::H1: return "H1";
    case Part::H2: return "H2";
    case Part::I1: return "I1";
    case Part::I2: return "I2";
  }
  return "?";
}

std::optional<Part> parse_part(std::string_view name) {
  for (Part p : {Part::G1, Part::G2, Part::H1, Part::H2, Part::I1, Part::I2})
    if (part_name(p) == name) return p;
  return std::nullopt;
}

const std::vector<PartPair>& reduction_joins() {
  static const std::vector<PartPair> joins = {
      {Part::I1, Part::I2}, {Part::I1, Part::G2}, {Part::I1, Part::H2},
      {Part::G1, Part::H2}, {Part::G2, Part::H1},
  };
  return joins;
}

Graph join_construction(const Graph& g_final, const Graph& h_final, std::size_t ell,
                        std::array<PartRange, 6>& parts) {
  if (g_final.num_vertices() != h_final.num_vertices())
    throw InvalidArgument("join construction needs equal vertex counts");
  const auto n = static_cast<Vertex>(g_final.num_vertices());
  const auto l = static_cast<Vertex>(ell);

  Graph ghat(4 * n + 2 * l);
  const std::array<std::pair<Part, const Graph*>, 4> copies = {{
      {Part::G1, &g_final}, {Part::G2, &g_final}, {Part::H1, &h_final}, {Part::H2, &h_final},
  }};
  Vertex next = 0;
  for (const auto& [part, source] : copies) {
    parts[static_cast<std::size_t>(part)] = {part, next, next + n};
    for (const auto& [u, v] : source->edges()) ghat.add_edge(next + u, next + v);
    next += n;
  }
  parts[static_cast<std::size_t>(Part::I1)] = {Part::I1, next, next + l};
  parts[static_cast<std::size_t>(Part::I2)] = {Part::I2, next + l, next + 2 * l};

  for (const auto& [a, b] : reduction_joins()) {
    const auto& ra = parts[static_cast<std::size_t>(a)];
    const auto& rb = parts[static_cast<std::size_t>(b)];
    for (Vertex u = ra.lo; u < ra.hi; ++u)
      for (Vertex v = rb.lo; v < rb.hi; ++v) ghat.add_edge(u, v);
  }
  return ghat;
}

ReductionArtifact s1_reduction(const Graph& g, const Graph& h) {
  ReductionArtifact art;
  auto edges = pad_edges(g, h);
  art.k = edges.k;
  art.provenance.g_edge_gadgets = edges.g_gadgets;
  art.provenance.h_edge_gadgets = edges.h_gadgets;
  art.provenance.subdivided_edges = edges.k;

  art.g_prime = bty_transform(edges.g);
  art.h_prime = bty_transform(edges.h);
  art.g_padded = std::move(edges.g);
  art.h_padded = std::move(edges.h);

  auto verts = pad_vertices(art.g_prime, art.h_prime);
  art.n = verts.n;
  art.provenance.g_vertex_clique = verts.g_clique;
  art.provenance.h_vertex_clique = verts.h_clique;
  art.g_final = std::move(verts.g);
  art.h_final = std::move(verts.h);

  art.ell = 2 * art.n + 2;
  art.ghat = join_construction(art.g_final, art.h_final, art.ell, art.parts);
  art.join_list = reduction_joins();
  return art;
}

namespace {

bool joined(const std::vector<PartPair>& joins, Part a, Part b) {
  return std::any_of(joins.begin(), joins.end(), [&](const PartPair& p) {
    return (p.first == a && p.second == b) || (p.first == b && p.second == a);
  });
}

}  // namespace

std::vector<std::string> check_structure(const Graph& ghat,
                                         const std::array<PartRange, 6>& parts,
                                         const std::vector<PartPair>& joins, std::size_t ell,
                                         std::size_t n) {
  std::vector<std::string> problems;
  auto range = [&](Part p) -> const PartRange& { return parts[static_cast<std::size_t>(p)]; };

  std::vector<PartRange> sorted(parts.begin(), parts.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const PartRange& a, const PartRange& b) { return a.lo < b.lo; });
  Vertex cursor = 0;
  for (const auto& r : sorted) {
    if (r.lo != cursor || r.hi < r.lo) {
      problems.push_back("part ranges do not tile the vertex set at " + std::string(part_name(r.part)));
      return problems;
    }
    cursor = r.hi;
  }
  if (cursor != ghat.num_vertices()) {
    problems.push_back("part ranges do not cover all vertices");
    return problems;
  }

  if (ell != 2 * n + 2) problems.push_back("ell != 2n + 2");
  for (Part p : {Part::I1, Part::I2})
    if (range(p).size() != ell) problems.push_back(std::string(part_name(p)) + " size != ell");
  for (Part p : {Part::G1, Part::G2, Part::H1, Part::H2})
    if (range(p).size() != n) problems.push_back(std::string(part_name(p)) + " size != n");
  if (!problems.empty()) return problems;

  // Both copies of each padded graph carry identical internal edges; the
  // ell-sets are independent.
  auto same_inside = [&](Part a, Part b) {
    const auto& ra = range(a);
    const auto& rb = range(b);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (ghat.adjacent(ra.lo + i, ra.lo + j) != ghat.adjacent(rb.lo + i, rb.lo + j))
          return false;
    return true;
  };
  if (!same_inside(Part::G1, Part::G2)) problems.push_back("G1 and G2 differ");
  if (!same_inside(Part::H1, Part::H2)) problems.push_back("H1 and H2 differ");
  for (Part p : {Part::I1, Part::I2}) {
    const auto& r = range(p);
    for (Vertex u = r.lo; u < r.hi; ++u)
      for (Vertex v = u + 1; v < r.hi; ++v)
        if (ghat.adjacent(u, v)) {
          problems.push_back(std::string(part_name(p)) + " is not independent");
          u = r.hi;
          break;
        }
  }

  const std::array<Part, 6> all = {Part::G1, Part::G2, Part::H1, Part::H2, Part::I1, Part::I2};
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const bool want = joined(joins, all[i], all[j]);
      const auto& ra = range(all[i]);
      const auto& rb = range(all[j]);
      std::size_t present = 0;
      for (Vertex u = ra.lo; u < ra.hi; ++u)
        for (Vertex v = rb.lo; v < rb.hi; ++v) present += ghat.adjacent(u, v) ? 1 : 0;
      const std::size_t expected = want ? ra.size() * rb.size() : 0;
      if (present != expected)
        problems.push_back(std::string(part_name(all[i])) + "-" + std::string(part_name(all[j])) +
                           (want ? " join incomplete" : " has stray cross edges"));
    }
  }
  return problems;
}

bool ReductionReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.passed; });
}

namespace {

std::size_t mdg_named(const Graph& g, const std::string& label, const SearchBudget& budget) {
  try {
    return mdg_max(g, budget).value;
  } catch (const ResourceLimit& e) {
    throw ResourceLimit("mdg(" + label + "): " + e.what());
  }
}

std::string eq(std::size_t lhs, std::size_t rhs) {
  return std::to_string(lhs) + (lhs == rhs ? " == " : " != ") + std::to_string(rhs);
}

}  // namespace

ReductionReport verify_reduction(const Graph& g, const Graph& h, const SearchBudget& budget) {
  ReductionReport rep;
  const auto art = s1_reduction(g, h);
  rep.ell = art.ell;
  rep.k = art.k;
  rep.n = art.n;
  auto check = [&rep](std::string name, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  rep.alpha_g = alpha(g);
  rep.alpha_h = alpha(h);
  rep.equal_alpha = rep.alpha_g == rep.alpha_h;

  const std::size_t ag2 = alpha(art.g_padded);
  const std::size_t ah2 = alpha(art.h_padded);
  const std::size_t shift = art.provenance.g_edge_gadgets.size();
  check("edge-padding",
        art.g_padded.num_edges() == art.k && art.h_padded.num_edges() == art.k &&
            ag2 - rep.alpha_g == shift && ah2 - rep.alpha_h == shift,
        "k = " + std::to_string(art.k) + ", alpha shifts " + std::to_string(ag2 - rep.alpha_g) +
            " and " + std::to_string(ah2 - rep.alpha_h));

  const std::size_t agp = alpha(art.g_prime);
  const std::size_t ahp = alpha(art.h_prime);
  const std::size_t mgp = mdg_named(art.g_prime, "G'", budget);
  const std::size_t mhp = mdg_named(art.h_prime, "H'", budget);
  check("transform-in-S1", mgp == agp && mhp == ahp,
        "G': " + eq(mgp, agp) + ", H': " + eq(mhp, ahp));
  check("transform-alpha",
        agp == ag2 + art.k && ahp == ah2 + art.k &&
            art.g_prime.num_vertices() == art.g_padded.num_vertices() + 2 * art.k &&
            art.h_prime.num_vertices() == art.h_padded.num_vertices() + 2 * art.k,
        "G': " + eq(agp, ag2 + art.k) + ", H': " + eq(ahp, ah2 + art.k));

  rep.alpha_g_final = alpha(art.g_final);
  rep.alpha_h_final = alpha(art.h_final);
  const std::size_t mgf = mdg_named(art.g_final, "G''", budget);
  const std::size_t mhf = mdg_named(art.h_final, "H''", budget);
  check("vertex-padding",
        rep.alpha_g_final == agp + 1 && rep.alpha_h_final == ahp + 1 &&
            art.g_final.num_vertices() == art.n && art.h_final.num_vertices() == art.n &&
            mgf == rep.alpha_g_final && mhf == rep.alpha_h_final,
        "n = " + std::to_string(art.n));

  const auto problems = check_structure(art.ghat, art.parts, art.join_list, art.ell, art.n);
  check("structure", problems.empty(), problems.empty() ? "ok" : problems.front());

  rep.alpha_ghat = alpha(art.ghat);
  rep.mdg_ghat = mdg_named(art.ghat, "Ghat", budget);
  rep.ghat_in_s1 = rep.alpha_ghat <= rep.mdg_ghat;

  check("mdg-equality", rep.mdg_ghat == rep.alpha_g_final + rep.alpha_h_final + art.ell,
        eq(rep.mdg_ghat, rep.alpha_g_final + rep.alpha_h_final + art.ell));
  check("alpha-equality",
        rep.alpha_ghat == 2 * std::max(rep.alpha_g_final, rep.alpha_h_final) + art.ell,
        eq(rep.alpha_ghat, 2 * std::max(rep.alpha_g_final, rep.alpha_h_final) + art.ell));
  check("iff", rep.ghat_in_s1 == rep.equal_alpha,
        std::string("in S1: ") + (rep.ghat_in_s1 ? "yes" : "no") +
            ", equal alpha: " + (rep.equal_alpha ? "yes" : "no"));
  return rep;
}

}  // namespace thetakit
