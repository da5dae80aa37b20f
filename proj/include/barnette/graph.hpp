#ifndef BARNETTE_GRAPH_HPP
#define BARNETTE_GRAPH_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace barnette {

using VertexId = int;
using VertexSet = std::set<VertexId>;

/// Error taxonomy surfaced through the CLI exit-code contract.
enum class ErrorKind {
    Parse,       // malformed input text
    Invariant,   // structural invariant violated
    Precondition,// operation applied outside its domain
    Recognition, // no catalog pattern matches a site
    Budget,      // search budget exhausted
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Rotation-system plane graph. Vertex ids are arbitrary non-negative
// integers and survive every operation; rotations list neighbors in
// counterclockwise order.
//
// Face tracing convention used everywhere: the successor of the directed
// edge (u,v) is (v,w) where w immediately follows u in the rotation at v.
// Under this rule each directed edge lies in exactly one face trace, and
// the trace of the unbounded face reads counterclockwise around the
// drawing's boundary.
class PlaneGraph {
public:
    std::map<VertexId, std::vector<VertexId>> rot;

    bool has_vertex(VertexId v) const { return rot.count(v) != 0; }
    std::size_t vertex_count() const { return rot.size(); }
    std::size_t edge_count() const;
    int degree(VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const;
    VertexId max_vertex_id() const;

    std::vector<VertexId> vertices() const;

    // Directed-edge face trace starting at (u,v).
    std::vector<VertexId> trace_face(VertexId u, VertexId v) const;
    // All faces, each directed edge consumed exactly once. Faces are
    // reported as vertex cycles in trace order.
    std::vector<std::vector<VertexId>> trace_all_faces() const;

    // The neighbor following/preceding u in the rotation at v.
    VertexId rot_next(VertexId v, VertexId u) const;
    VertexId rot_prev(VertexId v, VertexId u) const;

    void check_symmetric() const;
};

/// A plane triangulation (G, g): simple, every face a triangle, at least
/// four vertices, with the distinguished vertex g on the declared outer
/// face.
class Triangulation {
public:
    PlaneGraph graph;
    std::array<VertexId, 3> outer{};  // one face trace, cyclic
    VertexId g = -1;

    std::size_t size() const { return graph.vertex_count(); }
    int degree(VertexId v) const { return graph.degree(v); }
    bool adjacent(VertexId u, VertexId v) const { return graph.adjacent(u, v); }

    // Full validation of the type invariants; throws Error on failure.
    void validate() const;

    // Outer cycle of G - g in counterclockwise orientation (the c(G) of
    // the family machinery). Computed as the unbounded-face trace of the
    // vertex-deleted graph.
    std::vector<VertexId> outer_cycle_without_g() const;

    // BFS distance from g for every vertex.
    std::map<VertexId, int> bfs_levels() const;
    int height() const;
    std::vector<VertexId> level_set(int k) const;
};

struct FaceSet {
    std::vector<std::array<VertexId, 3>> faces;  // oriented triples
    std::size_t outer_index = 0;
};

struct CubicPlaneGraph {
    // One vertex per face of the source triangulation; rotations give the
    // inherited embedding.
    PlaneGraph graph;
    std::map<VertexId, std::array<VertexId, 3>> face_of;  // dual vertex -> primal face
};

FaceSet trace_faces(const Triangulation& t);
CubicPlaneGraph dual_graph(const Triangulation& t);
Triangulation mirror_reflect(const Triangulation& t);

// Text format (External Interfaces):
//   triangulation v1 / g=<id> / outer=<a> <b> <c> / "<id>: n1 n2 ..."
Triangulation parse_triangulation(const std::string& text);
std::string serialize_triangulation(const Triangulation& t);

// Relaxed variant for the cubic counterexample fixtures: header
// "planegraph v1", rotation lines only.
PlaneGraph parse_plane_graph(const std::string& text);

std::string to_dot(const Triangulation& t, const VertexSet& marked);

}  // namespace barnette

#endif
