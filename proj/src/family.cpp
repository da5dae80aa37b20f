#include "barnette/family.hpp"

#include <algorithm>

namespace barnette {

LevelStructure bfs_levels(const Triangulation& t) {
    LevelStructure ls;
    ls.level = t.bfs_levels();
    for (const auto& [v, d] : ls.level) ls.height = std::max(ls.height, d);
    return ls;
}

namespace {

std::vector<VertexId> rotate_lex_min(std::vector<VertexId> c) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < c.size(); ++i) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            VertexId a = c[(i + k) % c.size()], b = c[(best + k) % c.size()];
            if (a < b) { best = i; break; }
            if (a > b) break;
        }
    }
    std::rotate(c.begin(), c.begin() + static_cast<long>(best), c.end());
    return c;
}

bool oriented_cyclic_face_equal(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t r = 0; r < b.size(); ++r) {
        bool ok = true;
        for (std::size_t k = 0; k < a.size() && ok; ++k)
            if (a[k] != b[(r + k) % b.size()]) ok = false;
        if (ok) return true;
    }
    return false;
}

// Induced sub-rotation-system on a vertex subset.
PlaneGraph induced(const PlaneGraph& g, const VertexSet& keep) {
    PlaneGraph h;
    for (const auto& [v, nb] : g.rot) {
        if (!keep.count(v)) continue;
        std::vector<VertexId> pruned;
        for (VertexId u : nb)
            if (keep.count(u)) pruned.push_back(u);
        h.rot[v] = std::move(pruned);
    }
    return h;
}

}  // namespace

FamilyClass check_family_membership(const Triangulation& t) {
    FamilyClass fc;
    fc.height = t.height();
    for (VertexId v : t.graph.vertices()) {
        if (v == t.g) continue;
        if (t.degree(v) > 6) return fc;
    }
    for (VertexId v : t.graph.rot.at(t.g)) {
        if (t.degree(v) > 5) return fc;
    }
    LayerCycle top;
    try {
        top = layer_cycle(t, fc.height);
    } catch (const Error&) {
        return fc;  // top level neither cycle nor path
    }
    fc.member = true;
    fc.stratum = top.kind == LayerCycle::Cycle ? 0 : static_cast<int>(top.seq.size());
    return fc;
}

LayerCycle layer_cycle(const Triangulation& t, int k) {
    auto ls = bfs_levels(t);
    if (k < 1 || k > ls.height)
        throw Error(ErrorKind::Precondition, "layer index out of range");

    VertexSet deep;  // levels >= k
    std::vector<VertexId> exact;
    for (const auto& [v, d] : ls.level) {
        if (d >= k) deep.insert(v);
        if (d == k) exact.push_back(v);
    }

    PlaneGraph sub = induced(t.graph, deep);

    if (k == ls.height) {
        // Top level: decide between the cycle and the induced path.
        int deg1 = 0, deg2 = 0;
        bool path_like = true;
        for (const auto& [v, nb] : sub.rot) {
            if (nb.size() == 1) ++deg1;
            else if (nb.size() == 2) ++deg2;
            else if (nb.size() == 0 && sub.rot.size() == 1) { /* single vertex */ }
            else path_like = false;
        }
        if (sub.rot.size() == 1) {
            LayerCycle lc;
            lc.kind = LayerCycle::Path;
            lc.seq = {sub.rot.begin()->first};
            return lc;
        }
        if (path_like && deg1 == 2 && deg2 + 2 == static_cast<int>(sub.rot.size())) {
            // Walk the path from the smaller endpoint.
            VertexId end = -1;
            for (const auto& [v, nb] : sub.rot)
                if (nb.size() == 1 && (end < 0 || v < end)) end = v;
            LayerCycle lc;
            lc.kind = LayerCycle::Path;
            VertexId prev = -1, cur = end;
            while (true) {
                lc.seq.push_back(cur);
                VertexId nxt = -1;
                for (VertexId u : sub.rot.at(cur))
                    if (u != prev) nxt = u;
                if (nxt < 0) break;
                prev = cur;
                cur = nxt;
            }
            if (lc.seq.size() != sub.rot.size())
                throw Error(ErrorKind::Invariant, "top level is neither a cycle nor an induced path");
            return lc;
        }
    }

    // Cycle case: trace the unique face of the induced subgraph that is
    // not a face of G — the merged region left by the removed levels.
    auto g_faces = t.graph.trace_all_faces();
    auto sub_faces = sub.trace_all_faces();
    std::vector<std::vector<VertexId>> merged;
    for (const auto& f : sub_faces) {
        bool in_g = false;
        for (const auto& gf : g_faces)
            if (oriented_cyclic_face_equal(f, gf)) { in_g = true; break; }
        if (!in_g) merged.push_back(f);
    }
    if (merged.size() != 1)
        throw Error(ErrorKind::Invariant,
                    "level " + std::to_string(k) + " does not bound a single cycle");
    const auto& cyc = merged[0];
    if (cyc.size() != exact.size())
        throw Error(ErrorKind::Invariant,
                    "level " + std::to_string(k) + " boundary revisits a vertex");
    for (VertexId v : cyc)
        if (ls.level.at(v) != k)
            throw Error(ErrorKind::Invariant,
                        "level " + std::to_string(k) + " boundary leaves the level set");
    LayerCycle lc;
    lc.kind = LayerCycle::Cycle;
    lc.seq = rotate_lex_min(cyc);
    return lc;
}

Triangulation peel(const Triangulation& t) {
    auto ls = bfs_levels(t);
    if (ls.height <= 1) throw Error(ErrorKind::Precondition, "peel requires height > 1");

    Triangulation r;
    r.g = t.g;
    for (const auto& [v, d] : ls.level) {
        if (d == 0 || d == 1) continue;
        const auto& nb = t.graph.rot.at(v);
        if (d >= 3) {
            r.graph.rot[v] = nb;
            continue;
        }
        // Level-2 vertex: its level-1 neighbors must form one contiguous
        // rotation arc, which g replaces.
        std::vector<VertexId> out;
        std::size_t n = nb.size();
        std::size_t first_deep = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (ls.level.at(nb[i]) == 1 && ls.level.at(nb[(i + n - 1) % n]) != 1) first_deep = i;
        }
        if (first_deep == n)
            throw Error(ErrorKind::Invariant, "peel: result not simple (no level-1 arc)");
        bool in_arc = true;
        out.push_back(t.g);
        for (std::size_t k = 0; k < n; ++k) {
            VertexId u = nb[(first_deep + k) % n];
            if (ls.level.at(u) == 1) {
                if (!in_arc)
                    throw Error(ErrorKind::Invariant,
                                "peel: result not simple (level-1 neighbors not contiguous)");
            } else {
                in_arc = false;
                out.push_back(u);
            }
        }
        r.graph.rot[v] = std::move(out);
    }
    // g's rotation: the level-2 cycle, oriented so faces close; derive it
    // from the old embedding by walking the boundary of the deep part.
    LayerCycle c2 = layer_cycle(t, 2);
    if (c2.kind != LayerCycle::Cycle)
        throw Error(ErrorKind::Invariant, "peel: level 2 is not a cycle");
    std::vector<VertexId> gseq(c2.seq.rbegin(), c2.seq.rend());
    r.graph.rot[t.g] = gseq;

    auto close_check = [&](Triangulation& cand) -> bool {
        try {
            cand.outer = {cand.g, cand.graph.rot.at(cand.g)[0], cand.graph.rot.at(cand.g)[1]};
            auto faces = cand.graph.trace_all_faces();
            for (const auto& f : faces) {
                if (f.size() != 3) return false;
                if (oriented_cyclic_face_equal(f, {cand.outer[0], cand.outer[1], cand.outer[2]})) {
                    cand.outer = {f[0], f[1], f[2]};
                }
            }
            // Pick a real traced face containing g as the outer face.
            for (const auto& f : faces)
                if (f.size() == 3 && (f[0] == cand.g || f[1] == cand.g || f[2] == cand.g)) {
                    cand.outer = {f[0], f[1], f[2]};
                    break;
                }
            cand.validate();
            return true;
        } catch (const Error&) {
            return false;
        }
    };
    if (!close_check(r)) {
        std::vector<VertexId> rev(gseq.rbegin(), gseq.rend());
        r.graph.rot[t.g] = rev;
        if (!close_check(r))
            throw Error(ErrorKind::Invariant, "peel: result not simple");
    }
    if (!check_family_membership(r).member)
        throw Error(ErrorKind::Invariant, "peel: result not in family");
    return r;
}

}  // namespace barnette
