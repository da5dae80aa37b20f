#include "barnette/dualize.hpp"

#include <algorithm>
#include <deque>

#include "barnette/verifier.hpp"

namespace barnette {

CycleWitness tree_to_dual_cycle(const Triangulation& t, const VertexSet& u) {
    auto rep = verify_hamiltonian_set(t, u);
    if (!rep.is_hamiltonian)
        throw Error(ErrorKind::Precondition, "set is not hamiltonian: " + rep.failure);

    // Complement side of the counting ledger: V \ U induces a tree.
    VertexSet comp;
    for (VertexId v : t.graph.vertices())
        if (!u.count(v)) comp.insert(v);
    std::size_t comp_edges = 0;
    for (VertexId v : comp)
        for (VertexId w : t.graph.rot.at(v))
            if (w > v && comp.count(w)) ++comp_edges;
    {
        std::set<VertexId> seen;
        std::deque<VertexId> q{*comp.begin()};
        seen.insert(*comp.begin());
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop_front();
            for (VertexId w : t.graph.rot.at(v))
                if (comp.count(w) && seen.insert(w).second) q.push_back(w);
        }
        if (seen.size() != comp.size() || comp_edges + 1 != comp.size())
            throw Error(ErrorKind::Invariant, "complement does not induce a tree (k != 1)");
    }

    FaceSet fs = trace_faces(t);
    std::map<std::pair<VertexId, VertexId>, int> owner;
    for (std::size_t i = 0; i < fs.faces.size(); ++i) {
        const auto& f = fs.faces[i];
        for (int k = 0; k < 3; ++k) owner[{f[k], f[(k + 1) % 3]}] = static_cast<int>(i);
    }

    std::size_t cut_count = 0;
    for (const auto& [v, nb] : t.graph.rot)
        for (VertexId w : nb)
            if (w > v && u.count(v) != u.count(w)) ++cut_count;
    if (cut_count != 2 * t.size() - 4)
        throw Error(ErrorKind::Invariant, "cut size is not 2|V|-4");

    // Each face owns exactly one outgoing cut edge: the one whose
    // U-endpoint comes first in the face trace.
    std::vector<std::pair<VertexId, VertexId>> out_edge(fs.faces.size(), {-1, -1});
    for (std::size_t i = 0; i < fs.faces.size(); ++i) {
        const auto& f = fs.faces[i];
        int inside = 0;
        for (VertexId v : f) inside += u.count(v) ? 1 : 0;
        if (inside != 1 && inside != 2)
            throw Error(ErrorKind::Invariant, "face carries neither 1 nor 2 set vertices");
        int outs = 0;
        for (int k = 0; k < 3; ++k) {
            VertexId a = f[k], b = f[(k + 1) % 3];
            if (u.count(a) && !u.count(b)) {
                out_edge[i] = {a, b};
                ++outs;
            }
        }
        if (outs != 1)
            throw Error(ErrorKind::Invariant, "face does not carry exactly one outgoing cut edge");
    }

    CycleWitness w;
    int start = 0, cur = 0;
    do {
        auto [a, b] = out_edge[cur];
        w.cycle.push_back(cur);
        w.cut_edges.push_back({a, b});
        cur = owner.at({b, a});
        if (w.cycle.size() > fs.faces.size())
            throw Error(ErrorKind::Invariant, "dual walk does not close into one cycle");
    } while (cur != start);
    if (w.cycle.size() != fs.faces.size())
        throw Error(ErrorKind::Invariant, "dual walk misses faces (not a Hamiltonian cycle)");
    return w;
}

std::vector<std::vector<VertexId>> cubic_faces(const CubicPlaneGraph& g) {
    return g.graph.trace_all_faces();
}

int dual_face_of_primal_vertex(const CubicPlaneGraph& dual, VertexId primal) {
    auto faces = cubic_faces(dual);
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool all = true;
        for (VertexId dv : faces[i]) {
            const auto& pf = dual.face_of.at(dv);
            if (std::find(pf.begin(), pf.end(), primal) == pf.end()) all = false;
        }
        if (all) return static_cast<int>(i);
    }
    throw Error(ErrorKind::Invariant, "no dual face collects the primal vertex");
}

bool check_barnette_class(const CubicPlaneGraph& g, int g_face_index) {
    for (const auto& [v, nb] : g.graph.rot)
        if (nb.size() != 3) throw Error(ErrorKind::Precondition, "graph is not cubic");
    auto faces = cubic_faces(g);
    if (g_face_index < 0 || g_face_index >= static_cast<int>(faces.size()))
        throw Error(ErrorKind::Precondition, "unknown distinguished face");
    // Edge sets per face for adjacency tests.
    auto edge_set = [](const std::vector<VertexId>& f) {
        std::set<std::pair<VertexId, VertexId>> s;
        for (std::size_t k = 0; k < f.size(); ++k) {
            VertexId a = f[k], b = f[(k + 1) % f.size()];
            s.insert({std::min(a, b), std::max(a, b)});
        }
        return s;
    };
    auto ge = edge_set(faces[static_cast<std::size_t>(g_face_index)]);
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (static_cast<int>(i) == g_face_index) continue;
        auto fe = edge_set(faces[i]);
        bool adj = false;
        for (const auto& e : fe)
            if (ge.count(e)) adj = true;
        if (faces[i].size() > (adj ? 5u : 6u)) return false;
    }
    return true;
}

bool verify_dual_cycle(const CubicPlaneGraph& dual, const CycleWitness& w) {
    if (w.cycle.size() != dual.graph.vertex_count()) return false;
    std::set<VertexId> seen(w.cycle.begin(), w.cycle.end());
    if (seen.size() != w.cycle.size()) return false;
    for (std::size_t i = 0; i < w.cycle.size(); ++i) {
        VertexId a = w.cycle[i], b = w.cycle[(i + 1) % w.cycle.size()];
        if (!dual.graph.adjacent(a, b)) return false;
    }
    return true;
}

}  // namespace barnette
