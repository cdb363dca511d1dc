#ifndef THETAKIT_INDEPENDENT_SET_HPP_
#define THETAKIT_INDEPENDENT_SET_HPP_

#include <cstddef>

#include "thetakit/graph.hpp"

namespace thetakit {

// Exact maximum independent set by branch and reduce: vertices of degree
// <= 1 are taken outright, components are solved independently, and the
// search branches on a maximum-degree vertex.
VertexSet maximum_independent_set(const Graph& g);

// alpha(G); 0 iff g has no vertices.
std::size_t alpha(const Graph& g);

// omega(G), computed as alpha of the complement.
std::size_t max_clique(const Graph& g);
VertexSet maximum_clique(const Graph& g);

// Parity of the clique number. Throws InvalidArgument on the empty graph.
bool odd_max_clique(const Graph& g);

}  // namespace thetakit

#endif  // THETAKIT_INDEPENDENT_SET_HPP_
