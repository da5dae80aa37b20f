#include "barnette/ops.hpp"

#include <algorithm>
#include <sstream>

#include "barnette/build.hpp"
#include "barnette/canonical.hpp"
#include "barnette/family.hpp"

namespace barnette {

char op_kind_char(OpKind k) {
    switch (k) {
        case OpKind::A: return 'A';
        case OpKind::B: return 'B';
        case OpKind::C: return 'C';
        case OpKind::Bbar: return 'b';
        case OpKind::Cbar: return 'c';
    }
    return '?';
}

OpKind op_kind_from_char(char c) {
    switch (c) {
        case 'A': return OpKind::A;
        case 'B': return OpKind::B;
        case 'C': return OpKind::C;
        case 'b': return OpKind::Bbar;
        case 'c': return OpKind::Cbar;
    }
    throw Error(ErrorKind::Parse, std::string("unknown op kind '") + c + "'");
}

std::string DerivationTrace::serialize() const {
    std::ostringstream out;
    out << "start " << start_name;
    if (start_param > 0) out << " " << start_param;
    out << "\n";
    for (const auto& s : steps) {
        out << "step " << op_kind_char(s.kind);
        if (s.kind != OpKind::A) out << " " << s.a << " " << s.b;
        out << "\n";
    }
    return out.str();
}

DerivationTrace DerivationTrace::parse(const std::string& text) {
    DerivationTrace t;
    std::istringstream in(text);
    std::string line;
    bool saw_start = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "start") {
            if (!(ls >> t.start_name))
                throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad start");
            ls >> t.start_param;
            saw_start = true;
        } else if (word == "step") {
            std::string kind;
            if (!(ls >> kind) || kind.size() != 1)
                throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad step");
            OpStep s;
            s.kind = op_kind_from_char(kind[0]);
            if (s.kind != OpKind::A && !(ls >> s.a >> s.b))
                throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": step needs a site");
            t.steps.push_back(s);
        } else {
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": unknown directive");
        }
    }
    if (!saw_start) throw Error(ErrorKind::Parse, "trace lacks a start line");
    return t;
}

Triangulation apply_A(const Triangulation& t) {
    auto c = t.outer_cycle_without_g();
    int m = static_cast<int>(c.size());
    VertexId base = t.graph.max_vertex_id() + 1;
    auto x = [&](int i) { return base + ((i % m) + m) % m; };
    auto y = [&](int i) { return c[((i % m) + m) % m]; };

    std::vector<std::array<VertexId, 3>> faces;
    for (const auto& f : t.graph.trace_all_faces()) {
        if (f[0] == t.g || f[1] == t.g || f[2] == t.g) continue;
        faces.push_back({f[0], f[1], f[2]});
    }
    for (int i = 0; i < m; ++i) {
        faces.push_back({x(i), x(i + 1), y(i)});
        faces.push_back({y(i), y(i + 1), x(i + 1)});
        faces.push_back({t.g, x(i), x(i + 1)});
    }
    return from_faces(faces, {t.g, x(0), x(1)}, t.g);
}

namespace {

// Chain the region-owned boundary edges into the boundary cycle and
// orient it with the region on the left, rotated to start at g.
std::vector<VertexId> boundary_cycle_region_left(const std::vector<std::vector<VertexId>>& faces,
                                                 VertexId g) {
    std::set<std::pair<VertexId, VertexId>> owned;
    for (const auto& f : faces)
        for (std::size_t k = 0; k < f.size(); ++k)
            owned.insert({f[k], f[(k + 1) % f.size()]});
    std::map<VertexId, VertexId> next;
    for (const auto& [a, b] : owned) {
        if (owned.count({b, a})) continue;  // interior edge
        if (next.count(a))
            throw Error(ErrorKind::Invariant, "site boundary is not a simple cycle");
        next[a] = b;
    }
    if (next.empty()) throw Error(ErrorKind::Invariant, "site has no boundary");
    std::vector<VertexId> chain;
    VertexId start = next.begin()->first, cur = start;
    do {
        chain.push_back(cur);
        auto it = next.find(cur);
        if (it == next.end()) throw Error(ErrorKind::Invariant, "site boundary does not close");
        cur = it->second;
    } while (cur != start && chain.size() <= next.size());
    if (chain.size() != next.size())
        throw Error(ErrorKind::Invariant, "site boundary splits into several cycles");
    // The owned directions have the region on the right; reverse for the
    // region-on-left convention and rotate to g.
    std::reverse(chain.begin(), chain.end());
    auto at = std::find(chain.begin(), chain.end(), g);
    if (at == chain.end()) throw Error(ErrorKind::Invariant, "g not on site boundary");
    std::rotate(chain.begin(), at, chain.end());
    return chain;
}

struct FaceIndex {
    std::vector<std::vector<VertexId>> faces;
    std::map<std::pair<VertexId, VertexId>, int> owner;

    explicit FaceIndex(const Triangulation& t) {
        faces = t.graph.trace_all_faces();
        for (std::size_t i = 0; i < faces.size(); ++i)
            for (std::size_t k = 0; k < faces[i].size(); ++k)
                owner[{faces[i][k], faces[i][(k + 1) % faces[i].size()]}] = static_cast<int>(i);
    }
    // Third vertex of the face owning the directed edge (a,b).
    VertexId apex(VertexId a, VertexId b) const {
        const auto& f = faces[owner.at({a, b})];
        for (std::size_t k = 0; k < 3; ++k)
            if (f[k] == a && f[(k + 1) % 3] == b) return f[(k + 2) % 3];
        throw Error(ErrorKind::Invariant, "face index corrupt");
    }
};

Pattern make_op_pattern(const std::vector<std::vector<VertexId>>& faces,
                        const std::vector<VertexId>& sigma, const VertexSet& marks) {
    Pattern p;
    p.body = semi_from_faces(faces, sigma);
    p.d = sigma[0];
    p.D = marks;
    p.validate();
    return p;
}

}  // namespace

const Pattern& op_target_pattern(OpKind k) {
    // Fig. 3 targets. Boundary role order follows the site boundary as it
    // comes off the tracing convention: (g, x_{i+1}, ..., x_i).
    static const Pattern delta1 = make_op_pattern(
        {{0, 1, 2}, {0, 1, 3}, {1, 2, 3}, {2, 0, 3}}, {0, 1, 2}, {});
    static const Pattern delta2 = make_op_pattern(
        {{0, 1, 2, 3}, {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}}, {0, 1, 2, 3}, {});
    // sigma roles: (d, B, T2, T1, A); interior u=5, q=6.
    static const Pattern delta3 = make_op_pattern(
        {{0, 1, 2, 3, 4},
         {0, 4, 6},
         {4, 3, 6},
         {3, 5, 6},
         {3, 2, 5},
         {2, 1, 5},
         {5, 1, 6},
         {0, 6, 1}},
        {0, 1, 2, 3, 4}, {});
    // sigma roles: (d, B, T2, V, T1, A); interior u=6, q=7.
    static const Pattern delta4 = make_op_pattern(
        {{0, 1, 2, 3, 4, 5},
         {0, 5, 7},
         {5, 4, 7},
         {4, 6, 7},
         {4, 3, 6},
         {3, 2, 6},
         {2, 1, 6},
         {6, 1, 7},
         {0, 7, 1}},
        {0, 1, 2, 3, 4, 5}, {});
    switch (k) {
        case OpKind::B: return delta1;
        case OpKind::C: return delta2;
        case OpKind::Bbar: return delta3;
        case OpKind::Cbar: return delta4;
        case OpKind::A: break;
    }
    throw Error(ErrorKind::Precondition, "A has no target pattern");
}

std::vector<VertexId> op_site_sigma(const Triangulation& t, OpKind k, VertexId a, VertexId b) {
    if (!t.graph.adjacent(a, b))
        throw Error(ErrorKind::Precondition, "site vertices are not adjacent");
    FaceIndex fi(t);
    auto levels = t.bfs_levels();
    if (levels.at(a) != 1 || levels.at(b) != 1)
        throw Error(ErrorKind::Precondition, "site edge is not on the outer cycle");

    // The g-face and the inner face at the edge (a,b).
    VertexId ap1 = fi.apex(a, b), ap2 = fi.apex(b, a);
    VertexId inner = -1;
    if (ap1 == t.g) inner = ap2;
    else if (ap2 == t.g) inner = ap1;
    else throw Error(ErrorKind::Precondition, "edge does not bound a face with g");

    auto face_at = [&](VertexId u, VertexId v, VertexId w) -> std::vector<VertexId> {
        // The trace of the face with vertex set {u,v,w}.
        VertexId x = fi.apex(u, v);
        if (x == w) return {u, v, w};
        x = fi.apex(v, u);
        if (x == w) return {v, u, w};
        throw Error(ErrorKind::Invariant, "expected face is absent");
    };

    std::vector<std::vector<VertexId>> region;
    region.push_back(face_at(a, b, t.g));
    switch (k) {
        case OpKind::B: {
            if (t.degree(a) > 4 || t.degree(b) > 4)
                throw Error(ErrorKind::Precondition,
                            "B requires both site degrees at most 4");
            break;
        }
        case OpKind::C: {
            if (levels.at(inner) != 2)
                throw Error(ErrorKind::Precondition, "C requires a level-2 apex");
            if (t.degree(inner) > 5)
                throw Error(ErrorKind::Precondition, "C requires apex degree at most 5");
            region.push_back(face_at(a, b, inner));
            break;
        }
        case OpKind::Bbar:
        case OpKind::Cbar: {
            VertexId t1 = inner;
            if (levels.at(t1) != 2)
                throw Error(ErrorKind::Precondition, "site apex is not at level 2");
            // Second level-2 vertex: apex of (t1, b) beyond the (a,b) face.
            VertexId t2 = fi.apex(t1, b);
            if (t2 == a) t2 = fi.apex(b, t1);
            if (t2 == a || levels.at(t2) != 2)
                throw Error(ErrorKind::Precondition, "two-face condition fails at the site");
            if (k == OpKind::Bbar && (t.degree(t1) > 5 || t.degree(t2) > 5))
                throw Error(ErrorKind::Precondition,
                            "operation requires level-2 degrees at most 5");
            region.push_back(face_at(a, b, t1));
            region.push_back(face_at(t1, t2, b));
            if (k == OpKind::Cbar) {
                VertexId v = fi.apex(t1, t2);
                if (v == b) v = fi.apex(t2, t1);
                if (v == b || levels.at(v) != 3)
                    throw Error(ErrorKind::Precondition, "three-face condition fails at the site");
                if (t.degree(v) > 5)
                    throw Error(ErrorKind::Precondition,
                                "operation requires the level-3 vertex degree at most 5");
                region.push_back(face_at(t1, t2, v));
            }
            break;
        }
        case OpKind::A:
            throw Error(ErrorKind::Precondition, "A is not an edge operation");
    }
    return boundary_cycle_region_left(region, t.g);
}

Triangulation apply_edge_op(const Triangulation& t, OpKind k, VertexId a, VertexId b) {
    auto sigma = op_site_sigma(t, k, a, b);
    auto m = extract_configuration(t.graph, sigma);
    const Pattern& target = op_target_pattern(k);
    Pattern site = m.as_pattern(t.graph, t.g, {});
    if (!sigma_compatible(target, site))
        throw Error(ErrorKind::Precondition, "site is not sigma-compatible with the target");
    Replacement rep{m, t.g, &target};
    auto [out, w] = replace_patterns(t, {}, {rep});
    (void)w;
    return out;
}

std::vector<std::pair<VertexId, VertexId>> op_sites(const Triangulation& t, OpKind k) {
    std::vector<std::pair<VertexId, VertexId>> out;
    auto c = t.outer_cycle_without_g();
    for (std::size_t i = 0; i < c.size(); ++i) {
        VertexId a = c[i], b = c[(i + 1) % c.size()];
        try {
            op_site_sigma(t, k, a, b);
            out.push_back({a, b});
        } catch (const Error&) {
        }
    }
    return out;
}

namespace {

Triangulation remove_degree3(const Triangulation& t, VertexId v) {
    Triangulation out;
    out.g = t.g;
    for (const auto& [u, nb] : t.graph.rot) {
        if (u == v) continue;
        std::vector<VertexId> pruned;
        for (VertexId w : nb)
            if (w != v) pruned.push_back(w);
        out.graph.rot[u] = std::move(pruned);
    }
    auto f = out.graph.trace_face(out.g, out.graph.rot.at(out.g).front());
    out.outer = {f[0], f[1], f[2]};
    out.validate();
    return out;
}

Triangulation remove_degree4(const Triangulation& t, VertexId v, VertexId ca, VertexId cb) {
    Triangulation out;
    out.g = t.g;
    for (const auto& [u, nb] : t.graph.rot) {
        if (u == v) continue;
        std::vector<VertexId> next;
        for (VertexId w : nb) {
            if (w != v) {
                next.push_back(w);
            } else if (u == ca) {
                next.push_back(cb);
            } else if (u == cb) {
                next.push_back(ca);
            }
            // other neighbors of v simply drop the reference
        }
        out.graph.rot[u] = std::move(next);
    }
    auto f = out.graph.trace_face(out.g, out.graph.rot.at(out.g).front());
    out.outer = {f[0], f[1], f[2]};
    out.validate();
    return out;
}

}  // namespace

Decomposition decompose_to_core(const Triangulation& t) {
    // Reduction loop, recording removals; sites are translated into the
    // replay namespace afterwards.
    struct Removal {
        OpKind kind;
        VertexId site_a, site_b;
        VertexId removed;  // -1 for peels
        // For peels: (outer vertex, its two deeper neighbors in cycle
        // order), used to rename the layer the forward A re-creates.
        std::vector<std::array<VertexId, 3>> layer;
    };
    std::vector<Removal> removals;
    Triangulation cur = t;
    while (true) {
        auto c = cur.outer_cycle_without_g();
        auto levels = cur.bfs_levels();
        int m = static_cast<int>(c.size());
        auto pos_of = [&](VertexId v) {
            for (int i = 0; i < m; ++i)
                if (c[i] == v) return i;
            return -1;
        };

        VertexId pick = -1;
        for (VertexId v : c) {
            if (cur.degree(v) != 3) continue;
            int i = pos_of(v);
            VertexId prev = c[(i + m - 1) % m], next = c[(i + 1) % m];
            if (cur.degree(prev) >= 4 && cur.degree(next) >= 4 && (pick < 0 || v < pick)) pick = v;
        }
        if (pick >= 0) {
            int i = pos_of(pick);
            removals.push_back({OpKind::B, c[(i + m - 1) % m], c[(i + 1) % m], pick, {}});
            cur = remove_degree3(cur, pick);
            continue;
        }
        for (VertexId v : c) {
            if (cur.degree(v) != 4) continue;
            int i = pos_of(v);
            VertexId prev = c[(i + m - 1) % m], next = c[(i + 1) % m];
            if (cur.graph.adjacent(prev, next)) continue;
            VertexId apex = -1;
            for (VertexId w : cur.graph.rot.at(v))
                if (w != cur.g && w != prev && w != next) apex = w;
            if (apex < 0 || cur.graph.adjacent(apex, cur.g)) continue;
            if (pick < 0 || v < pick) pick = v;
        }
        if (pick >= 0) {
            int i = pos_of(pick);
            VertexId prev = c[(i + m - 1) % m], next = c[(i + 1) % m];
            removals.push_back({OpKind::C, prev, next, pick, {}});
            cur = remove_degree4(cur, pick, prev, next);
            continue;
        }
        bool all5 = true;
        for (VertexId v : c)
            if (cur.degree(v) != 5) all5 = false;
        if (all5) {
            try {
                Triangulation peeled = peel(cur);
                Removal r{OpKind::A, -1, -1, -1, {}};
                // Every outer vertex has exactly two level-2 neighbors
                // here (degree 5); record them for layer renaming.
                for (VertexId v : c) {
                    std::vector<VertexId> deep;
                    for (VertexId w : cur.graph.rot.at(v))
                        if (w != cur.g && levels.at(w) == 2) deep.push_back(w);
                    if (deep.size() != 2)
                        throw Error(ErrorKind::Invariant, "peelable layer vertex without two anchors");
                    r.layer.push_back({v, deep[0], deep[1]});
                }
                removals.push_back(std::move(r));
                cur = peeled;
                continue;
            } catch (const Error&) {
            }
        }
        break;
    }

    // Forward order with fresh-id translation.
    Decomposition d;
    d.core = cur;
    std::map<VertexId, VertexId> rename;  // recorded id -> replay id
    auto xl = [&rename](VertexId v) {
        auto r = rename.find(v);
        return r == rename.end() ? v : r->second;
    };
    Triangulation sim = cur;
    for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
        OpStep step;
        step.kind = it->kind;
        if (it->kind == OpKind::A) {
            sim = apply_A(sim);
            for (const auto& [orig, d1, d2] : it->layer) {
                VertexId nd1 = xl(d1), nd2 = xl(d2);
                VertexId image = -1;
                for (VertexId w : sim.graph.rot.at(sim.g))
                    if (sim.graph.adjacent(w, nd1) && sim.graph.adjacent(w, nd2)) image = w;
                if (image < 0)
                    throw Error(ErrorKind::Invariant, "layer renaming failed after peel replay");
                rename[orig] = image;
            }
            d.steps.push_back(step);
            continue;
        }
        step.a = xl(it->site_a);
        step.b = xl(it->site_b);
        VertexId fresh = sim.graph.max_vertex_id() + 1;
        sim = apply_edge_op(sim, it->kind, step.a, step.b);
        rename[it->removed] = fresh;
        d.steps.push_back(step);
    }
    if (!op_equivalent(sim, t))
        throw Error(ErrorKind::Invariant, "decomposition replay mismatch");
    return d;
}

Triangulation replay_steps(const Triangulation& start, const std::vector<OpStep>& steps) {
    Triangulation cur = start;
    for (const auto& s : steps) {
        if (s.kind == OpKind::A)
            cur = apply_A(cur);
        else
            cur = apply_edge_op(cur, s.kind, s.a, s.b);
    }
    return cur;
}

std::optional<std::map<VertexId, VertexId>> op_equivalence_map(const Triangulation& a,
                                                               const Triangulation& b) {
    auto reduced = [](const Triangulation& t) {
        PlaneGraph h;
        for (const auto& [v, nb] : t.graph.rot) {
            if (v == t.g) continue;
            std::vector<VertexId> pruned;
            for (VertexId u : nb)
                if (u != t.g) pruned.push_back(u);
            h.rot[v] = std::move(pruned);
        }
        return h;
    };
    PlaneGraph ha = reduced(a), hb = reduced(b);
    auto best_edge = [](const Triangulation& t, const PlaneGraph& h) {
        auto cyc = t.outer_cycle_without_g();
        std::string best;
        std::pair<VertexId, VertexId> edge{-1, -1};
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            auto code = rooted_code(h, cyc[i], cyc[(i + 1) % cyc.size()]);
            if (best.empty() || code < best) {
                best = std::move(code);
                edge = {cyc[i], cyc[(i + 1) % cyc.size()]};
            }
        }
        return std::make_pair(best, edge);
    };
    auto [ca, ea] = best_edge(a, ha);
    auto [cb, eb] = best_edge(b, hb);
    if (ca != cb) return std::nullopt;

    // Rebuild the label maps of the two best-rooted walks and compose.
    auto labels = [](const PlaneGraph& g, VertexId from, VertexId to) {
        std::map<VertexId, int> label;
        std::vector<VertexId> order{from};
        std::vector<VertexId> entry{to};
        label[from] = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
            VertexId v = order[i];
            const auto& nb = g.rot.at(v);
            std::size_t start = 0;
            while (start < nb.size() && nb[start] != entry[i]) ++start;
            for (std::size_t k = 0; k < nb.size(); ++k) {
                VertexId u = nb[(start + k) % nb.size()];
                if (!label.count(u)) {
                    label[u] = static_cast<int>(order.size());
                    order.push_back(u);
                    entry.push_back(v);
                }
            }
        }
        return label;
    };
    auto la = labels(ha, ea.first, ea.second);
    auto lb = labels(hb, eb.first, eb.second);
    std::map<int, VertexId> inv;
    for (const auto& [v, l] : lb) inv[l] = v;
    std::map<VertexId, VertexId> phi;
    for (const auto& [v, l] : la) phi[v] = inv.at(l);
    phi[a.g] = b.g;
    return phi;
}

std::vector<OpStep> translate_steps(const Triangulation& recorded_start,
                                    const Triangulation& replay_start,
                                    const std::vector<OpStep>& steps) {
    auto phi0 = op_equivalence_map(recorded_start, replay_start);
    if (!phi0)
        throw Error(ErrorKind::Precondition, "trace starts are not op-equivalent");
    std::map<VertexId, VertexId> phi = *phi0;
    Triangulation oldg = recorded_start, newg = replay_start;
    std::vector<OpStep> out;
    for (const auto& s : steps) {
        OpStep ns = s;
        if (s.kind == OpKind::A) {
            auto oc = oldg.outer_cycle_without_g();
            VertexId obase = oldg.graph.max_vertex_id() + 1;
            auto nc = newg.outer_cycle_without_g();
            VertexId nbase = newg.graph.max_vertex_id() + 1;
            oldg = apply_A(oldg);
            newg = apply_A(newg);
            // x_i sits over the old cycle edge (c[i-1], c[i]); align the
            // two new layers through phi on the old cycles.
            int m = static_cast<int>(oc.size());
            std::map<VertexId, int> npos;
            for (int i = 0; i < m; ++i) npos[nc[i]] = i;
            for (int i = 0; i < m; ++i) {
                int j = npos.at(phi.at(oc[i]));
                // old x over (oc[i-1], oc[i]) is obase+i; new counterpart
                // sits over (nc[j-1], nc[j]) and is nbase+j.
                phi[obase + i] = nbase + j;
            }
        } else {
            ns.a = phi.at(s.a);
            ns.b = phi.at(s.b);
            VertexId of = oldg.graph.max_vertex_id() + 1;
            VertexId nf = newg.graph.max_vertex_id() + 1;
            std::size_t added = op_target_pattern(s.kind).body.interior().size();
            oldg = apply_edge_op(oldg, s.kind, s.a, s.b);
            newg = apply_edge_op(newg, ns.kind, ns.a, ns.b);
            for (std::size_t k = 0; k < added; ++k) phi[of + static_cast<VertexId>(k)] = nf + static_cast<VertexId>(k);
        }
        out.push_back(ns);
    }
    return out;
}

}  // namespace barnette
