#ifndef BARNETTE_CANONICAL_HPP
#define BARNETTE_CANONICAL_HPP

#include <string>

#include "barnette/graph.hpp"

namespace barnette {

// Canonical form of (G,g) under op-equivalence: BFS labeling of G - g
// from every counterclockwise outer-cycle edge, keeping the
// lexicographically least code. Two triangulations receive equal codes
// iff they are op-equivalent.
std::string canonical_code(const Triangulation& t);

bool op_equivalent(const Triangulation& a, const Triangulation& b);

// Rooted code of a connected plane graph from a directed start edge;
// exposed for the pattern machinery, which reuses the same labeling.
std::string rooted_code(const PlaneGraph& g, VertexId from, VertexId to);

}  // namespace barnette

#endif
