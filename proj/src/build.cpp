#include "barnette/build.hpp"

#include <algorithm>
#include <deque>

namespace barnette {

namespace {

// Orient an unoriented face list consistently, seeding from one oriented
// face. Each undirected edge must lie in exactly two faces, which receive
// it in opposite directions.
template <typename Face>
std::vector<std::vector<VertexId>> orient_faces(const std::vector<Face>& faces,
                                                const std::vector<VertexId>& seed) {
    auto as_set = [](const auto& f) {
        std::multiset<VertexId> s(f.begin(), f.end());
        return s;
    };
    int seed_idx = -1;
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (as_set(faces[i]) == as_set(seed)) seed_idx = static_cast<int>(i);
    if (seed_idx < 0) throw Error(ErrorKind::Invariant, "seed face not in face list");

    // Edge -> incident face indices.
    std::map<std::pair<VertexId, VertexId>, std::vector<int>> at_edge;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const auto& f = faces[i];
        for (std::size_t k = 0; k < f.size(); ++k) {
            VertexId a = f[k], b = f[(k + 1) % f.size()];
            at_edge[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(i));
        }
    }
    for (const auto& [e, fs] : at_edge)
        if (fs.size() != 2)
            throw Error(ErrorKind::Invariant, "edge not shared by exactly two faces");

    std::vector<std::vector<VertexId>> oriented(faces.size());
    std::vector<int> state(faces.size(), 0);  // 0 unvisited, 1 oriented
    oriented[seed_idx].assign(seed.begin(), seed.end());
    state[seed_idx] = 1;
    std::deque<int> q{seed_idx};
    auto uses_directed = [](const std::vector<VertexId>& f, VertexId a, VertexId b) {
        for (std::size_t k = 0; k < f.size(); ++k)
            if (f[k] == a && f[(k + 1) % f.size()] == b) return true;
        return false;
    };
    while (!q.empty()) {
        int i = q.front();
        q.pop_front();
        const auto& f = oriented[i];
        for (std::size_t k = 0; k < f.size(); ++k) {
            VertexId a = f[k], b = f[(k + 1) % f.size()];
            for (int j : at_edge.at({std::min(a, b), std::max(a, b)})) {
                if (j == i || state[j]) continue;
                std::vector<VertexId> cand(faces[j].begin(), faces[j].end());
                // The neighbor must use the edge in the reverse direction.
                if (uses_directed(cand, a, b)) std::reverse(cand.begin(), cand.end());
                if (!uses_directed(cand, b, a))
                    throw Error(ErrorKind::Invariant, "face list is not orientable");
                oriented[j] = std::move(cand);
                state[j] = 1;
                q.push_back(j);
            }
        }
    }
    for (int s : state)
        if (!s) throw Error(ErrorKind::Invariant, "face list is not connected");
    return oriented;
}

// Assemble rotations from oriented faces: a face (..., u, v, w, ...)
// states that w follows u in the rotation at v.
std::map<VertexId, std::vector<VertexId>> rotations_from_oriented(
    const std::vector<std::vector<VertexId>>& oriented) {
    std::map<VertexId, std::map<VertexId, VertexId>> succ;
    for (const auto& f : oriented) {
        std::size_t n = f.size();
        for (std::size_t k = 0; k < n; ++k) {
            VertexId u = f[k], v = f[(k + 1) % n], w = f[(k + 2) % n];
            if (!succ[v].emplace(u, w).second)
                throw Error(ErrorKind::Invariant, "inconsistent oriented faces");
        }
    }
    std::map<VertexId, std::vector<VertexId>> rot;
    for (auto& [v, nxt] : succ) {
        std::vector<VertexId> cyc;
        VertexId start = nxt.begin()->first;
        VertexId cur = start;
        do {
            cyc.push_back(cur);
            auto it = nxt.find(cur);
            if (it == nxt.end())
                throw Error(ErrorKind::Invariant, "rotation does not close at vertex " +
                                                      std::to_string(v));
            cur = it->second;
        } while (cur != start && cyc.size() <= nxt.size());
        if (cyc.size() != nxt.size())
            throw Error(ErrorKind::Invariant,
                        "rotation does not close at vertex " + std::to_string(v));
        rot[v] = std::move(cyc);
    }
    return rot;
}

}  // namespace

Triangulation from_faces(const std::vector<std::array<VertexId, 3>>& faces,
                         std::array<VertexId, 3> outer, VertexId g) {
    std::vector<VertexId> seed(outer.begin(), outer.end());
    auto oriented = orient_faces(faces, seed);
    Triangulation t;
    t.g = g;
    t.outer = outer;
    t.graph.rot = rotations_from_oriented(oriented);
    // The construction fixes the orientation up to reflection: the file
    // convention requires the declared outer triple to be a traced face.
    auto f = t.graph.trace_face(outer[0], outer[1]);
    if (f.size() != 3 || f[2] != outer[2]) {
        for (auto& [v, nb] : t.graph.rot) std::reverse(nb.begin(), nb.end());
    }
    t.validate();
    return t;
}

PlaneGraph plane_graph_from_faces(const std::vector<std::vector<VertexId>>& faces,
                                  const std::vector<VertexId>& outer) {
    auto oriented = orient_faces(faces, outer);
    PlaneGraph p;
    p.rot = rotations_from_oriented(oriented);
    p.check_symmetric();
    return p;
}

SemiTriangulation semi_from_faces(const std::vector<std::vector<VertexId>>& faces,
                                  const std::vector<VertexId>& sigma) {
    SemiTriangulation s;
    s.graph = plane_graph_from_faces(faces, sigma);
    s.sigma = sigma;
    s.validate();
    return s;
}

Triangulation make_k4() {
    return from_faces({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}, {1, 2, 3}, 1);
}

Triangulation make_octahedron() {
    // Outer triangle 1,2,3; inner 4,5,6 with 4 across (1,2), 5 across
    // (2,3), 6 across (3,1).
    return from_faces({{1, 2, 3},
                       {1, 2, 4},
                       {2, 4, 5},
                       {2, 3, 5},
                       {3, 5, 6},
                       {1, 3, 6},
                       {1, 4, 6},
                       {4, 5, 6}},
                      {1, 2, 3}, 1);
}

Triangulation make_icosahedron() {
    // North pole 1, upper pentagon 2..6, lower pentagon 7..11, south 12.
    std::vector<std::array<VertexId, 3>> fs;
    for (int i = 0; i < 5; ++i) {
        VertexId u = 2 + i, un = 2 + (i + 1) % 5;
        VertexId l = 7 + i, ln = 7 + (i + 1) % 5;
        fs.push_back({1, u, un});
        fs.push_back({u, un, ln});
        fs.push_back({u, l, ln});
        fs.push_back({12, l, ln});
    }
    return from_faces(fs, {1, 2, 3}, 1);
}

}  // namespace barnette
