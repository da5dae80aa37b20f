#ifndef BARNETTE_BUILD_HPP
#define BARNETTE_BUILD_HPP

#include "barnette/graph.hpp"
#include "barnette/pattern.hpp"

namespace barnette {

// Build a triangulation from an unoriented face list: orientations are
// propagated from the declared outer triple, then rotations assembled so
// every face closes under the tracing rule.
Triangulation from_faces(const std::vector<std::array<VertexId, 3>>& faces,
                         std::array<VertexId, 3> outer, VertexId g);

// Rotation system of a general plane graph from an unoriented face list
// (used for the cubic counterexample fixtures).
PlaneGraph plane_graph_from_faces(const std::vector<std::vector<VertexId>>& faces,
                                  const std::vector<VertexId>& outer);

// Semi-triangulation from its face list (distinguished face included),
// oriented so that sigma is the distinguished face trace.
SemiTriangulation semi_from_faces(const std::vector<std::vector<VertexId>>& faces,
                                  const std::vector<VertexId>& sigma);

// Well-known fixtures used across the test suites.
Triangulation make_k4();
Triangulation make_octahedron();
Triangulation make_icosahedron();

}  // namespace barnette

#endif
