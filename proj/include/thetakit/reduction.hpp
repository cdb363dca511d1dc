#ifndef THETAKIT_REDUCTION_HPP_
#define THETAKIT_REDUCTION_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thetakit/graph.hpp"
#include "thetakit/greedy.hpp"

namespace thetakit {

// Reduction from "equal independence number" on graph pairs to recognizing
// graphs on which greedy is optimal (S_1):
//
//   (g, h) -> pad_edges -> bty_transform (each side) -> pad_vertices -> join
//
// The joined graph Ghat is in S_1 exactly when alpha(g) == alpha(h).

struct MisEqInstance {
  Graph g;
  Graph h;
};

bool mis_eq(const Graph& g, const Graph& h);

struct EdgePadding {
  Graph g;
  Graph h;
  std::size_t k = 0;                   // common edge count
  std::vector<std::size_t> g_gadgets;  // clique sizes appended to g, in order
  std::vector<std::size_t> h_gadgets;
};

// Appends disjoint K2/K3/K4 gadgets until both graphs have the same edge
// count. Each gadget raises alpha by exactly 1 and both sides receive the
// same number of gadgets, so alpha shifts equally.
EdgePadding pad_edges(const Graph& g, const Graph& h);

// Replaces every edge u-v by a path u-a-b-v: alpha grows by exactly the edge
// count and the result stays in S_1. Subdivision vertices are numbered after
// the originals, two per edge in edges() order.
Graph bty_transform(const Graph& g);

struct VertexPadding {
  Graph g;
  Graph h;
  std::size_t n = 0;            // common vertex count
  std::size_t g_clique = 0;     // size of the clique appended to g
  std::size_t h_clique = 0;
};

// Appends one clique to each side (sizes gap+1 and 1, with the larger clique
// on the smaller graph) so the vertex counts meet. Alpha shifts by +1 on both
// sides and S_1 membership is preserved.
VertexPadding pad_vertices(const Graph& gp, const Graph& hp);

enum class Part { G1, G2, H1, H2, I1, I2 };

std::string_view part_name(Part p);
std::optional<Part> parse_part(std::string_view name);

// Half-open vertex range [lo, hi) of Ghat.
struct PartRange {
  Part part = Part::G1;
  Vertex lo = 0;
  Vertex hi = 0;

  std::size_t size() const { return hi - lo; }
  bool operator==(const PartRange&) const = default;
};

using PartPair = std::pair<Part, Part>;

// The five fully joined part pairs.
const std::vector<PartPair>& reduction_joins();

struct Provenance {
  std::vector<std::size_t> g_edge_gadgets;
  std::vector<std::size_t> h_edge_gadgets;
  std::size_t subdivided_edges = 0;  // per side, equals k
  std::size_t g_vertex_clique = 0;
  std::size_t h_vertex_clique = 0;
};

struct ReductionArtifact {
  Graph ghat;
  std::size_t ell = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  std::array<PartRange, 6> parts{};
  std::vector<PartPair> join_list;
  Provenance provenance;

  // Intermediate graphs kept for verification.
  Graph g_padded;  // after pad_edges
  Graph h_padded;
  Graph g_prime;   // after bty_transform
  Graph h_prime;
  Graph g_final;   // after pad_vertices (G'')
  Graph h_final;

  const PartRange& range(Part p) const { return parts[static_cast<std::size_t>(p)]; }
};

ReductionArtifact s1_reduction(const Graph& g, const Graph& h);

// Builds Ghat from the two padded graphs (which must have equal vertex
// counts n): copies G1, G2, H1, H2, then two independent sets I1, I2 of
// size ell = 2n + 2, with the pairs of reduction_joins() fully joined.
Graph join_construction(const Graph& g_final, const Graph& h_final, std::size_t ell,
                        std::array<PartRange, 6>& parts);

// Structural invariants of a (possibly re-read) artifact: the ranges
// partition the vertex set, |I1| = |I2| = ell, the four copies have size n,
// ell = 2n + 2, listed pairs are fully joined and no cross edges exist
// elsewhere. Returns the violations found.
std::vector<std::string> check_structure(const Graph& ghat,
                                         const std::array<PartRange, 6>& parts,
                                         const std::vector<PartPair>& joins, std::size_t ell,
                                         std::size_t n);

struct ReportCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ReductionReport {
  std::size_t alpha_g = 0;
  std::size_t alpha_h = 0;
  std::size_t alpha_g_final = 0;  // alpha(G'')
  std::size_t alpha_h_final = 0;
  std::size_t alpha_ghat = 0;
  std::size_t mdg_ghat = 0;
  std::size_t ell = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  bool ghat_in_s1 = false;
  bool equal_alpha = false;
  std::vector<ReportCheck> checks;

  bool passed() const;
};

// Runs the pipeline and checks every contract with the exact solvers. Each
// mdg search gets `budget`; overruns raise ResourceLimit naming the graph
// whose search failed.
ReductionReport verify_reduction(const Graph& g, const Graph& h,
                                 const SearchBudget& budget = {});

}  // namespace thetakit

#endif  // THETAKIT_REDUCTION_HPP_
