#include "barnette/oracle.hpp"

#include <algorithm>

namespace barnette {

namespace {

// Search state over a fixed vertex order: each vertex is in, out, or
// undecided. Pruning rules are conservative: a cut is taken only when no
// completion can satisfy the predicate.
struct Search {
    const Triangulation& t;
    Flavor flavor;
    std::vector<VertexId> order;             // g excluded
    std::map<VertexId, int> idx;
    std::vector<std::array<VertexId, 3>> faces;
    std::vector<VertexId> cyc;               // c(G)
    std::map<VertexId, int> cyc_pos;
    std::size_t budget;
    std::size_t limit;
    std::size_t expanded = 0;
    bool budget_hit = false;
    std::vector<VertexSet> found;

    enum State : int8_t { Undecided = 0, In = 1, Out = 2 };
    std::vector<State> state;

    Search(const Triangulation& tri, const SearchConstraint& c)
        : t(tri), flavor(c.flavor), budget(c.budget), limit(c.limit) {
        for (VertexId v : t.graph.vertices())
            if (v != t.g) order.push_back(v);
        for (std::size_t i = 0; i < order.size(); ++i) idx[order[i]] = static_cast<int>(i);
        for (const auto& f : t.graph.trace_all_faces()) faces.push_back({f[0], f[1], f[2]});
        cyc = t.outer_cycle_without_g();
        for (std::size_t i = 0; i < cyc.size(); ++i) cyc_pos[cyc[i]] = static_cast<int>(i);
        state.assign(order.size(), Undecided);
    }

    State get(VertexId v) const { return v == t.g ? Out : state[idx.at(v)]; }

    bool in_set(VertexId v) const { return get(v) == In; }

    // A face all of whose vertices are excluded can never be dominated.
    bool face_dead() const {
        for (const auto& f : faces) {
            bool possible = false;
            for (VertexId v : f)
                if (get(v) != Out) possible = true;
            if (!possible) return true;
        }
        return false;
    }

    // An induced cycle among In vertices can never become a tree.
    bool cycle_dead() const {
        // Count edges and run a union-find over In vertices.
        std::map<VertexId, VertexId> parent;
        std::function<VertexId(VertexId)> find = [&](VertexId v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (VertexId v : order)
            if (in_set(v)) parent[v] = v;
        for (VertexId v : order) {
            if (!in_set(v)) continue;
            for (VertexId u : t.graph.rot.at(v)) {
                if (u <= v || !in_set(u)) continue;
                VertexId a = find(v), b = find(u);
                if (a == b) return true;
                parent[a] = b;
            }
        }
        return false;
    }

    // Once every vertex is decided the predicate is checked exactly; the
    // directional checks also prune early when the witness pair is fixed.
    bool compat_dead() const {
        int m = static_cast<int>(cyc.size());
        for (int i = 0; i < m; ++i) {
            VertexId x = cyc[i];
            if (get(x) != Out || t.degree(x) > 4) continue;
            if (flavor == Flavor::Compatible || flavor == Flavor::Pm) {
                if (get(cyc[(i + 2) % m]) == Out) return true;
            }
            if (flavor == Flavor::Minus || flavor == Flavor::Pm) {
                if (get(cyc[(i - 2 + m) % m]) == Out) return true;
            }
        }
        return false;
    }

    // Connectivity cut: all In vertices must lie in one component of the
    // graph induced by In + Undecided.
    bool disconnect_dead() const {
        VertexId start = -1;
        for (VertexId v : order)
            if (in_set(v)) { start = v; break; }
        if (start < 0) return false;
        std::set<VertexId> seen{start};
        std::vector<VertexId> stack{start};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : t.graph.rot.at(v)) {
                if (u == t.g || get(u) == Out) continue;
                if (seen.insert(u).second) stack.push_back(u);
            }
        }
        for (VertexId v : order)
            if (in_set(v) && !seen.count(v)) return true;
        return false;
    }

    void run(std::size_t pos) {
        if (limit && found.size() >= limit) return;
        if (++expanded > budget) {
            budget_hit = true;
            return;
        }
        if (face_dead() || cycle_dead() || compat_dead() || disconnect_dead()) return;
        if (pos == order.size()) {
            VertexSet u;
            for (std::size_t i = 0; i < order.size(); ++i)
                if (state[i] == In) u.insert(order[i]);
            if (u.empty()) return;
            auto rep = verify_hamiltonian_set(t, u);
            if (rep.satisfies(flavor)) found.push_back(std::move(u));
            return;
        }
        for (State s : {In, Out}) {
            state[pos] = s;
            run(pos + 1);
            if (budget_hit) return;
        }
        state[pos] = Undecided;
    }
};

}  // namespace

SearchResult enumerate_hamiltonian_sets(const Triangulation& t, const SearchConstraint& c) {
    if (c.budget == 0) throw Error(ErrorKind::Precondition, "budget must be positive");
    Search s(t, c);
    s.run(0);
    SearchResult r;
    r.sets = std::move(s.found);
    std::sort(r.sets.begin(), r.sets.end());
    r.exhausted = !s.budget_hit && (c.limit == 0 || r.sets.size() < c.limit);
    r.expanded = s.expanded;
    return r;
}

SearchResult naive_subset_scan(const Triangulation& t, Flavor f) {
    std::vector<VertexId> vs;
    for (VertexId v : t.graph.vertices())
        if (v != t.g) vs.push_back(v);
    if (vs.size() > 24)
        throw Error(ErrorKind::Precondition, "subset scan limited to 24 vertices");
    SearchResult r;
    for (std::uint64_t mask = 1; mask < (1ull << vs.size()); ++mask) {
        VertexSet u;
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (mask & (1ull << i)) u.insert(vs[i]);
        if (verify_hamiltonian_set(t, u).satisfies(f)) r.sets.push_back(std::move(u));
    }
    std::sort(r.sets.begin(), r.sets.end());
    r.exhausted = true;
    r.expanded = 1ull << vs.size();
    return r;
}

}  // namespace barnette
