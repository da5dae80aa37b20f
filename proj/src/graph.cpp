#include "barnette/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace barnette {

std::size_t PlaneGraph::edge_count() const {
    std::size_t half = 0;
    for (const auto& [v, nb] : rot) half += nb.size();
    return half / 2;
}

int PlaneGraph::degree(VertexId v) const {
    auto it = rot.find(v);
    if (it == rot.end()) throw Error(ErrorKind::Invariant, "unknown vertex " + std::to_string(v));
    return static_cast<int>(it->second.size());
}

bool PlaneGraph::adjacent(VertexId u, VertexId v) const {
    auto it = rot.find(u);
    if (it == rot.end()) return false;
    return std::find(it->second.begin(), it->second.end(), v) != it->second.end();
}

VertexId PlaneGraph::max_vertex_id() const {
    VertexId m = -1;
    for (const auto& [v, nb] : rot) m = std::max(m, v);
    return m;
}

std::vector<VertexId> PlaneGraph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(rot.size());
    for (const auto& [v, nb] : rot) out.push_back(v);
    return out;
}

VertexId PlaneGraph::rot_next(VertexId v, VertexId u) const {
    const auto& nb = rot.at(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        if (nb[i] == u) return nb[(i + 1) % nb.size()];
    throw Error(ErrorKind::Invariant,
                "edge (" + std::to_string(v) + "," + std::to_string(u) + ") missing from rotation");
}

VertexId PlaneGraph::rot_prev(VertexId v, VertexId u) const {
    const auto& nb = rot.at(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        if (nb[i] == u) return nb[(i + nb.size() - 1) % nb.size()];
    throw Error(ErrorKind::Invariant,
                "edge (" + std::to_string(v) + "," + std::to_string(u) + ") missing from rotation");
}

void PlaneGraph::check_symmetric() const {
    for (const auto& [v, nb] : rot) {
        std::set<VertexId> seen;
        for (VertexId u : nb) {
            if (u == v) throw Error(ErrorKind::Invariant, "loop at vertex " + std::to_string(v));
            if (!seen.insert(u).second)
                throw Error(ErrorKind::Invariant,
                            "repeated neighbor " + std::to_string(u) + " at vertex " + std::to_string(v));
            if (!adjacent(u, v))
                throw Error(ErrorKind::Invariant,
                            "asymmetric adjacency " + std::to_string(v) + "->" + std::to_string(u));
        }
    }
}

std::vector<VertexId> PlaneGraph::trace_face(VertexId u, VertexId v) const {
    std::vector<VertexId> face;
    VertexId a = u, b = v;
    std::size_t guard = 2 * edge_count() + 2;
    do {
        face.push_back(a);
        VertexId c = rot_next(b, a);
        a = b;
        b = c;
        if (face.size() > guard)
            throw Error(ErrorKind::Invariant, "face trace does not close (corrupt rotation data)");
    } while (!(a == u && b == v));
    return face;
}

std::vector<std::vector<VertexId>> PlaneGraph::trace_all_faces() const {
    std::set<std::pair<VertexId, VertexId>> used;
    std::vector<std::vector<VertexId>> faces;
    for (const auto& [v, nb] : rot) {
        for (VertexId u : nb) {
            if (used.count({v, u})) continue;
            auto face = trace_face(v, u);
            for (std::size_t i = 0; i < face.size(); ++i)
                used.insert({face[i], face[(i + 1) % face.size()]});
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

namespace {

bool cyclic_equal(const std::vector<VertexId>& a, const std::array<VertexId, 3>& b) {
    if (a.size() != 3) return false;
    for (int r = 0; r < 3; ++r)
        if (a[r % 3] == b[0] && a[(r + 1) % 3] == b[1] && a[(r + 2) % 3] == b[2]) return true;
    return false;
}

// Three internally-vertex-disjoint paths between u and v (Menger check on
// small graphs). Used only as the slow-path connectivity witness.
bool three_disjoint_paths(const PlaneGraph& g, VertexId s, VertexId t) {
    // Unit-capacity max-flow with vertex splitting, three augmentations.
    std::vector<VertexId> vs = g.vertices();
    std::map<VertexId, int> idx;
    for (std::size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = static_cast<int>(i);
    int n = static_cast<int>(vs.size());
    // node 2i = in, 2i+1 = out
    struct Arc { int to, rev, cap; };
    std::vector<std::vector<Arc>> adj(2 * n);
    auto add_arc = [&](int a, int b, int c) {
        adj[a].push_back({b, static_cast<int>(adj[b].size()), c});
        adj[b].push_back({a, static_cast<int>(adj[a].size()) - 1, 0});
    };
    for (int i = 0; i < n; ++i) add_arc(2 * i, 2 * i + 1, (vs[i] == s || vs[i] == t) ? 3 : 1);
    for (const auto& [v, nb] : g.rot)
        for (VertexId u : nb) add_arc(2 * idx[v] + 1, 2 * idx[u], 1);
    int source = 2 * idx[s] + 1, sink = 2 * idx[t];
    int flow = 0;
    while (flow < 3) {
        std::vector<int> prev_node(2 * n, -1), prev_arc(2 * n, -1);
        std::deque<int> q{source};
        prev_node[source] = source;
        while (!q.empty()) {
            int a = q.front();
            q.pop_front();
            for (std::size_t k = 0; k < adj[a].size(); ++k) {
                const Arc& arc = adj[a][k];
                if (arc.cap > 0 && prev_node[arc.to] == -1) {
                    prev_node[arc.to] = a;
                    prev_arc[arc.to] = static_cast<int>(k);
                    q.push_back(arc.to);
                }
            }
        }
        if (prev_node[sink] == -1) break;
        for (int a = sink; a != source; a = prev_node[a]) {
            Arc& arc = adj[prev_node[a]][prev_arc[a]];
            arc.cap -= 1;
            adj[a][arc.rev].cap += 1;
        }
        ++flow;
    }
    return flow >= 3;
}

}  // namespace

void Triangulation::validate() const {
    if (graph.vertex_count() < 4)
        throw Error(ErrorKind::Invariant, "triangulation needs at least 4 vertices");
    graph.check_symmetric();
    if (!graph.has_vertex(g)) throw Error(ErrorKind::Invariant, "g is not a vertex");

    auto faces = graph.trace_all_faces();
    std::size_t V = graph.vertex_count(), E = graph.edge_count(), F = faces.size();
    for (const auto& f : faces) {
        if (f.size() != 3)
            throw Error(ErrorKind::Invariant, "face trace does not close as triangle");
    }
    if (E != 3 * V - 6)
        throw Error(ErrorKind::Invariant, "edge count violates |E| = 3|V|-6");
    if (F != 2 * V - 4)
        throw Error(ErrorKind::Invariant, "face count violates |F| = 2|V|-4");

    bool outer_found = false;
    bool g_on_outer = false;
    for (const auto& f : faces) {
        if (cyclic_equal(f, outer)) outer_found = true;
    }
    for (VertexId v : outer)
        if (v == g) g_on_outer = true;
    if (!outer_found)
        throw Error(ErrorKind::Invariant, "declared outer triple is not a traced face");
    if (!g_on_outer) throw Error(ErrorKind::Invariant, "g not on outer face");

    // A simple plane triangulation on >= 4 vertices is 3-connected; the
    // face/Euler checks above establish simplicity and triangularity, so
    // run the Menger witness only on one non-adjacent pair as a guard.
    for (VertexId u : graph.vertices()) {
        for (VertexId v : graph.vertices()) {
            if (u < v && !graph.adjacent(u, v)) {
                if (!three_disjoint_paths(graph, u, v))
                    throw Error(ErrorKind::Invariant, "not 3-connected");
                return;
            }
        }
    }
}

std::vector<VertexId> Triangulation::outer_cycle_without_g() const {
    // Delete g; the faces incident with g merge into the unbounded region
    // of G - g, whose trace starts at the outer-face edge avoiding g.
    PlaneGraph h;
    for (const auto& [v, nb] : graph.rot) {
        if (v == g) continue;
        std::vector<VertexId> pruned;
        for (VertexId u : nb)
            if (u != g) pruned.push_back(u);
        h.rot[v] = std::move(pruned);
    }
    // Directed outer edge of G avoiding g, oriented as the outer trace.
    std::array<VertexId, 3> o = outer;
    VertexId a = -1, b = -1;
    for (int i = 0; i < 3; ++i) {
        if (o[i] != g && o[(i + 1) % 3] != g) {
            a = o[i];
            b = o[(i + 1) % 3];
        }
    }
    if (a < 0) throw Error(ErrorKind::Invariant, "outer face lacks a g-free edge");
    return h.trace_face(a, b);
}

std::map<VertexId, int> Triangulation::bfs_levels() const {
    std::map<VertexId, int> level;
    std::deque<VertexId> q{g};
    level[g] = 0;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop_front();
        for (VertexId u : graph.rot.at(v)) {
            if (!level.count(u)) {
                level[u] = level[v] + 1;
                q.push_back(u);
            }
        }
    }
    if (level.size() != graph.vertex_count())
        throw Error(ErrorKind::Invariant, "graph is disconnected");
    return level;
}

int Triangulation::height() const {
    int h = 0;
    for (const auto& [v, d] : bfs_levels()) h = std::max(h, d);
    return h;
}

std::vector<VertexId> Triangulation::level_set(int k) const {
    std::vector<VertexId> out;
    for (const auto& [v, d] : bfs_levels())
        if (d == k) out.push_back(v);
    return out;
}

FaceSet trace_faces(const Triangulation& t) {
    FaceSet fs;
    auto faces = t.graph.trace_all_faces();
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const auto& f = faces[i];
        if (f.size() != 3)
            throw Error(ErrorKind::Invariant, "face trace does not close as triangle");
        std::array<VertexId, 3> tri{f[0], f[1], f[2]};
        if (cyclic_equal(f, t.outer)) fs.outer_index = fs.faces.size();
        fs.faces.push_back(tri);
    }
    return fs;
}

CubicPlaneGraph dual_graph(const Triangulation& t) {
    FaceSet fs = trace_faces(t);
    // Map each directed edge to the face owning it.
    std::map<std::pair<VertexId, VertexId>, int> owner;
    for (std::size_t i = 0; i < fs.faces.size(); ++i) {
        const auto& f = fs.faces[i];
        for (int k = 0; k < 3; ++k) owner[{f[k], f[(k + 1) % 3]}] = static_cast<int>(i);
    }
    CubicPlaneGraph d;
    for (std::size_t i = 0; i < fs.faces.size(); ++i) {
        const auto& f = fs.faces[i];
        // Neighbors across the three edges, in face-trace order; this is a
        // consistent embedding of the dual.
        std::vector<VertexId> nb;
        for (int k = 0; k < 3; ++k) nb.push_back(owner.at({f[(k + 1) % 3], f[k]}));
        d.graph.rot[static_cast<VertexId>(i)] = nb;
        d.face_of[static_cast<VertexId>(i)] = fs.faces[i];
    }
    return d;
}

Triangulation mirror_reflect(const Triangulation& t) {
    Triangulation m;
    m.g = t.g;
    m.outer = {t.outer[2], t.outer[1], t.outer[0]};
    for (const auto& [v, nb] : t.graph.rot) {
        std::vector<VertexId> rev(nb.rbegin(), nb.rend());
        m.graph.rot[v] = std::move(rev);
    }
    return m;
}

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    std::string s = pos == std::string::npos ? line : line.substr(0, pos);
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) ++start;
    return s.substr(start);
}

std::vector<long> parse_ints(const std::string& s, int lineno) {
    std::vector<long> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) {
        try {
            std::size_t used = 0;
            long v = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Parse,
                        "line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
        }
    }
    return out;
}

}  // namespace

Triangulation parse_triangulation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    Triangulation t;
    bool saw_header = false, saw_g = false, saw_outer = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip_comment(line);
        if (s.empty()) continue;
        if (!saw_header) {
            if (s != "triangulation v1")
                throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) +
                                                  ": expected header 'triangulation v1'");
            saw_header = true;
            continue;
        }
        if (s.rfind("g=", 0) == 0) {
            auto vals = parse_ints(s.substr(2), lineno);
            if (vals.size() != 1)
                throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad g line");
            t.g = static_cast<VertexId>(vals[0]);
            saw_g = true;
            continue;
        }
        if (s.rfind("outer=", 0) == 0) {
            auto vals = parse_ints(s.substr(6), lineno);
            if (vals.size() != 3)
                throw Error(ErrorKind::Parse,
                            "line " + std::to_string(lineno) + ": outer needs three vertices");
            t.outer = {static_cast<VertexId>(vals[0]), static_cast<VertexId>(vals[1]),
                       static_cast<VertexId>(vals[2])};
            saw_outer = true;
            continue;
        }
        auto colon = s.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected '<id>: ...'");
        auto idv = parse_ints(s.substr(0, colon), lineno);
        auto nbv = parse_ints(s.substr(colon + 1), lineno);
        if (idv.size() != 1)
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad vertex id");
        VertexId v = static_cast<VertexId>(idv[0]);
        if (t.graph.rot.count(v))
            throw Error(ErrorKind::Parse,
                        "line " + std::to_string(lineno) + ": duplicate rotation for vertex " +
                            std::to_string(v));
        std::vector<VertexId> nb;
        for (long x : nbv) nb.push_back(static_cast<VertexId>(x));
        t.graph.rot[v] = std::move(nb);
    }
    if (!saw_header) throw Error(ErrorKind::Parse, "missing header");
    if (!saw_g) throw Error(ErrorKind::Parse, "missing g line");
    if (!saw_outer) throw Error(ErrorKind::Parse, "missing outer line");
    t.validate();
    return t;
}

std::string serialize_triangulation(const Triangulation& t) {
    std::ostringstream out;
    out << "triangulation v1\n";
    out << "g=" << t.g << "\n";
    out << "outer=" << t.outer[0] << " " << t.outer[1] << " " << t.outer[2] << "\n";
    for (const auto& [v, nb] : t.graph.rot) {
        out << v << ":";
        for (VertexId u : nb) out << " " << u;
        out << "\n";
    }
    return out.str();
}

PlaneGraph parse_plane_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    PlaneGraph g;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip_comment(line);
        if (s.empty()) continue;
        if (!saw_header) {
            if (s != "planegraph v1")
                throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) +
                                                  ": expected header 'planegraph v1'");
            saw_header = true;
            continue;
        }
        auto colon = s.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected '<id>: ...'");
        auto idv = parse_ints(s.substr(0, colon), lineno);
        auto nbv = parse_ints(s.substr(colon + 1), lineno);
        if (idv.size() != 1)
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad vertex id");
        std::vector<VertexId> nb;
        for (long x : nbv) nb.push_back(static_cast<VertexId>(x));
        g.rot[static_cast<VertexId>(idv[0])] = std::move(nb);
    }
    if (!saw_header) throw Error(ErrorKind::Parse, "missing header");
    g.check_symmetric();
    return g;
}

std::string to_dot(const Triangulation& t, const VertexSet& marked) {
    std::ostringstream out;
    out << "graph G {\n";
    for (const auto& [v, nb] : t.graph.rot) {
        out << "  " << v;
        if (v == t.g)
            out << " [shape=box,label=\"g=" << v << "\"]";
        else if (marked.count(v))
            out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (const auto& [v, nb] : t.graph.rot)
        for (VertexId u : nb)
            if (v < u) out << "  " << v << " -- " << u << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace barnette
