#ifndef BARNETTE_DUALIZE_HPP
#define BARNETTE_DUALIZE_HPP

#include "barnette/graph.hpp"

namespace barnette {

struct CycleWitness {
    std::vector<VertexId> cycle;  // dual vertices (faces of G), cyclic
    std::vector<std::pair<VertexId, VertexId>> cut_edges;  // primal edges crossed, aligned
};

// Convert a hamiltonian vertex set into the Hamiltonian cycle of the dual
// cubic graph. The counting ledger (complement induces a tree, every face
// carries exactly two cut edges) is asserted rather than assumed.
CycleWitness tree_to_dual_cycle(const Triangulation& t, const VertexSet& u);

// Faces of a cubic plane graph in deterministic trace order.
std::vector<std::vector<VertexId>> cubic_faces(const CubicPlaneGraph& g);

// Index of the dual face corresponding to a primal vertex.
int dual_face_of_primal_vertex(const CubicPlaneGraph& dual, VertexId primal);

// Face-size condition of the dual statement: every face sharing an edge
// with the distinguished face has at most 5 edges and every other face
// (the distinguished one aside) at most 6.
bool check_barnette_class(const CubicPlaneGraph& g, int g_face_index);

// Independent walk-based validation of a claimed Hamiltonian cycle.
bool verify_dual_cycle(const CubicPlaneGraph& dual, const CycleWitness& w);

}  // namespace barnette

#endif
