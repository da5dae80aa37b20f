#include "barnette/pattern.hpp"

#include <algorithm>
#include <deque>

#include "barnette/canonical.hpp"

namespace barnette {

namespace {

bool cyclic_oriented_equal(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t r = 0; r < b.size(); ++r) {
        bool ok = true;
        for (std::size_t k = 0; k < a.size() && ok; ++k)
            if (a[k] != b[(r + k) % b.size()]) ok = false;
        if (ok) return true;
    }
    return false;
}

// Label map of the rooted BFS walk used by rooted_code; two graphs with
// equal codes are isomorphic through label composition.
std::map<VertexId, int> rooted_labels(const PlaneGraph& g, VertexId from, VertexId to) {
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
}

}  // namespace

void SemiTriangulation::validate() const {
    graph.check_symmetric();
    if (sigma.size() < 3) throw Error(ErrorKind::Invariant, "sigma needs at least 3 vertices");
    std::set<VertexId> seen(sigma.begin(), sigma.end());
    if (seen.size() != sigma.size())
        throw Error(ErrorKind::Invariant, "sigma revisits a vertex");
    auto tr = graph.trace_face(sigma[0], sigma[1]);
    if (!cyclic_oriented_equal(tr, sigma))
        throw Error(ErrorKind::Invariant, "sigma is not the distinguished face trace");
    for (const auto& f : graph.trace_all_faces()) {
        if (cyclic_oriented_equal(f, sigma)) continue;
        if (f.size() != 3)
            throw Error(ErrorKind::Invariant, "proper face is not a triangle");
    }
}

std::vector<std::pair<VertexId, VertexId>> SemiTriangulation::chords() const {
    std::set<VertexId> on_sigma(sigma.begin(), sigma.end());
    std::set<std::pair<VertexId, VertexId>> cyc_edges;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        VertexId a = sigma[i], b = sigma[(i + 1) % sigma.size()];
        cyc_edges.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const auto& [v, nb] : graph.rot) {
        if (!on_sigma.count(v)) continue;
        for (VertexId u : nb)
            if (u > v && on_sigma.count(u) && !cyc_edges.count({v, u})) out.push_back({v, u});
    }
    return out;
}

VertexSet SemiTriangulation::interior() const {
    std::set<VertexId> on_sigma(sigma.begin(), sigma.end());
    VertexSet out;
    for (const auto& [v, nb] : graph.rot)
        if (!on_sigma.count(v)) out.insert(v);
    return out;
}

void Pattern::validate() const {
    body.validate();
    if (std::find(body.sigma.begin(), body.sigma.end(), d) == body.sigma.end())
        throw Error(ErrorKind::Invariant, "anchor d not on sigma");
    for (VertexId v : D)
        if (!body.graph.has_vertex(v))
            throw Error(ErrorKind::Invariant, "marked vertex not in pattern");
}

std::optional<std::map<VertexId, VertexId>> sigma_alignment(const Pattern& a, const Pattern& b) {
    if (a.body.sigma.size() != b.body.sigma.size()) return std::nullopt;
    std::size_t n = a.body.sigma.size();
    std::size_t ia = 0, ib = 0;
    while (a.body.sigma[ia] != a.d) ++ia;
    while (b.body.sigma[ib] != b.d) ++ib;
    std::map<VertexId, VertexId> phi;
    for (std::size_t k = 0; k < n; ++k)
        phi[a.body.sigma[(ia + k) % n]] = b.body.sigma[(ib + k) % n];
    return phi;
}

bool sigma_compatible(const Pattern& a, const Pattern& b) {
    // Def 2.1: [a] sigma-compatible with [b] — anchored, orientation kept,
    // marked boundary sets equal, and every chord of sigma(a) maps onto a
    // chord of sigma(b) (one direction only: this is what keeps the glued
    // graph simple).
    auto phi = sigma_alignment(a, b);
    if (!phi) return false;
    for (VertexId v : a.body.sigma) {
        bool ma = a.D.count(v) != 0;
        bool mb = b.D.count(phi->at(v)) != 0;
        if (ma != mb) return false;
    }
    for (const auto& [x, y] : a.body.chords())
        if (!b.body.graph.adjacent(phi->at(x), phi->at(y))) return false;
    return true;
}

std::optional<std::map<VertexId, VertexId>> pattern_equal(const Pattern& a, const Pattern& b) {
    if (a.body.sigma.size() != b.body.sigma.size()) return std::nullopt;
    if (a.body.graph.vertex_count() != b.body.graph.vertex_count()) return std::nullopt;
    std::size_t ia = 0, ib = 0;
    while (a.body.sigma[ia] != a.d) ++ia;
    while (b.body.sigma[ib] != b.d) ++ib;
    VertexId a_next = a.body.sigma[(ia + 1) % a.body.sigma.size()];
    VertexId b_next = b.body.sigma[(ib + 1) % b.body.sigma.size()];
    if (rooted_code(a.body.graph, a.d, a_next) != rooted_code(b.body.graph, b.d, b_next))
        return std::nullopt;
    auto la = rooted_labels(a.body.graph, a.d, a_next);
    auto lb = rooted_labels(b.body.graph, b.d, b_next);
    std::map<int, VertexId> lb_inv;
    for (const auto& [v, l] : lb) lb_inv[l] = v;
    std::map<VertexId, VertexId> phi;
    for (const auto& [v, l] : la) phi[v] = lb_inv.at(l);
    // Marked sets must correspond exactly.
    VertexSet mapped;
    for (VertexId v : a.D) mapped.insert(phi.at(v));
    if (mapped != b.D) return std::nullopt;
    return phi;
}

ConfigurationMatch extract_configuration(const PlaneGraph& g,
                                         const std::vector<VertexId>& sigma) {
    std::size_t n = sigma.size();
    for (std::size_t i = 0; i < n; ++i)
        if (!g.adjacent(sigma[i], sigma[(i + 1) % n]))
            throw Error(ErrorKind::Precondition, "boundary cycle is not a cycle of G");

    auto faces = g.trace_all_faces();
    std::map<std::pair<VertexId, VertexId>, int> owner;
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t k = 0; k < faces[i].size(); ++k)
            owner[{faces[i][k], faces[i][(k + 1) % faces[i].size()]}] = static_cast<int>(i);

    std::set<std::pair<VertexId, VertexId>> sigma_dir;  // both directions
    for (std::size_t i = 0; i < n; ++i) {
        sigma_dir.insert({sigma[i], sigma[(i + 1) % n]});
        sigma_dir.insert({sigma[(i + 1) % n], sigma[i]});
    }

    // Region faces: the region lies left of each forward sigma edge, so
    // flood from the faces owning the reversed edges.
    std::set<int> region;
    std::deque<int> q;
    for (std::size_t i = 0; i < n; ++i) {
        int f = owner.at({sigma[(i + 1) % n], sigma[i]});
        if (region.insert(f).second) q.push_back(f);
    }
    while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        const auto& face = faces[f];
        for (std::size_t k = 0; k < face.size(); ++k) {
            VertexId a = face[k], b = face[(k + 1) % face.size()];
            if (sigma_dir.count({a, b})) continue;  // do not cross the boundary
            int nf = owner.at({b, a});
            if (region.insert(nf).second) q.push_back(nf);
        }
    }

    ConfigurationMatch m;
    m.sigma = sigma;
    std::set<VertexId> on_sigma(sigma.begin(), sigma.end());
    for (int f : region) {
        m.faces.push_back(faces[f]);
        for (VertexId v : faces[f])
            if (!on_sigma.count(v)) m.interior.insert(v);
    }
    // Chords: boundary-boundary edges inside region faces that are not
    // sigma-cycle edges.
    std::set<std::pair<VertexId, VertexId>> chord_set;
    for (int f : region) {
        const auto& face = faces[f];
        for (std::size_t k = 0; k < face.size(); ++k) {
            VertexId a = face[k], b = face[(k + 1) % face.size()];
            if (on_sigma.count(a) && on_sigma.count(b) && !sigma_dir.count({a, b}))
                chord_set.insert({std::min(a, b), std::max(a, b)});
        }
    }
    m.chords.assign(chord_set.begin(), chord_set.end());

    // Guard: the region must not wrap around to the whole sphere.
    if (region.size() == faces.size())
        throw Error(ErrorKind::Invariant, "configuration region covers every face");
    return m;
}

Pattern ConfigurationMatch::as_pattern(const PlaneGraph& g, VertexId anchor,
                                       const VertexSet& marks) const {
    Pattern p;
    p.d = anchor;
    std::set<VertexId> on_sigma(sigma.begin(), sigma.end());
    VertexSet keep = interior;
    for (VertexId v : sigma) keep.insert(v);

    // Region-side neighbor sets for boundary vertices.
    std::map<VertexId, std::set<VertexId>> region_adj;
    for (const auto& f : faces)
        for (std::size_t k = 0; k < f.size(); ++k) {
            region_adj[f[k]].insert(f[(k + 1) % f.size()]);
            region_adj[f[(k + 1) % f.size()]].insert(f[k]);
        }

    for (VertexId v : keep) {
        const auto& nb = g.rot.at(v);
        std::vector<VertexId> sub;
        if (interior.count(v)) {
            sub = nb;
        } else {
            for (VertexId u : nb)
                if (region_adj[v].count(u)) sub.push_back(u);
        }
        p.body.graph.rot[v] = std::move(sub);
    }
    p.body.sigma = sigma;
    for (VertexId v : keep)
        if (marks.count(v)) p.D.insert(v);
    p.body.validate();
    return p;
}

std::optional<ConfigurationMatch> match_configuration(const Triangulation& g, const Pattern& p,
                                                      VertexId anchor,
                                                      const std::vector<VertexId>& sigma) {
    ConfigurationMatch m;
    try {
        m = extract_configuration(g.graph, sigma);
    } catch (const Error&) {
        return std::nullopt;
    }
    Pattern found;
    try {
        VertexSet marks;  // structural match only; marks handled by callers
        found = m.as_pattern(g.graph, anchor, marks);
    } catch (const Error&) {
        return std::nullopt;
    }
    Pattern probe = p;
    probe.D.clear();
    if (!pattern_equal(found, probe)) return std::nullopt;
    return m;
}

std::pair<Triangulation, VertexSet> replace_patterns(const Triangulation& g, const VertexSet& w,
                                                     const std::vector<Replacement>& reps) {
    // Disjointness of proper regions.
    VertexSet all_interior;
    std::set<std::vector<VertexId>> face_keys;
    for (const auto& r : reps) {
        for (VertexId v : r.where.interior) {
            if (!all_interior.insert(v).second)
                throw Error(ErrorKind::Precondition, "proper regions overlap");
        }
        for (auto f : r.where.faces) {
            std::sort(f.begin(), f.end());
            if (!face_keys.insert(f).second)
                throw Error(ErrorKind::Precondition, "proper regions overlap (shared face)");
        }
    }

    Triangulation out = g;
    VertexSet marks = w;
    VertexId fresh = g.graph.max_vertex_id() + 1;

    for (const auto& r : reps) {
        const Pattern& delta = *r.with;
        std::size_t n = r.where.sigma.size();
        if (delta.body.sigma.size() != n)
            throw Error(ErrorKind::Precondition, "replacement boundary length mismatch");

        // Anchor-aligned boundary map: delta sigma -> G sigma.
        std::size_t id = 0, ig = 0;
        while (delta.body.sigma[id] != delta.d) ++id;
        while (r.where.sigma[ig] != r.anchor) ++ig;
        std::map<VertexId, VertexId> phi;
        for (std::size_t k = 0; k < n; ++k)
            phi[delta.body.sigma[(id + k) % n]] = r.where.sigma[(ig + k) % n];
        for (VertexId v : delta.body.interior()) {
            phi[v] = fresh++;
        }

        // Remove old interior vertices and their incidences.
        for (VertexId v : r.where.interior) {
            out.graph.rot.erase(v);
            marks.erase(v);
        }
        for (auto& [v, nb] : out.graph.rot) {
            std::vector<VertexId> pruned;
            for (VertexId u : nb)
                if (!r.where.interior.count(u)) pruned.push_back(u);
            nb = std::move(pruned);
        }
        // Remove chord edges of the old configuration.
        for (const auto& [a, b] : r.where.chords) {
            auto& na = out.graph.rot.at(a);
            na.erase(std::remove(na.begin(), na.end(), b), na.end());
            auto& nb2 = out.graph.rot.at(b);
            nb2.erase(std::remove(nb2.begin(), nb2.end(), a), nb2.end());
        }

        // Marked boundary vertices follow the replacement's D set.
        for (VertexId v : r.where.sigma) marks.erase(v);

        // Splice boundary rotations: at each sigma vertex the region arc
        // sits strictly between the cyclic neighbors; insert the
        // replacement's arc in its place.
        for (std::size_t k = 0; k < n; ++k) {
            VertexId dv = delta.body.sigma[(id + k) % n];
            VertexId gv = phi.at(dv);
            VertexId g_next = r.where.sigma[(ig + k + 1) % n];
            VertexId g_prev = r.where.sigma[(ig + k + n - 1) % n];
            VertexId d_next = delta.body.sigma[(id + k + 1) % n];
            VertexId d_prev = delta.body.sigma[(id + k + n - 1) % n];

            // Replacement's region-side arc at dv: rotation from d_next
            // to d_prev exclusive, in delta's cyclic order.
            const auto& dn = delta.body.graph.rot.at(dv);
            std::size_t s = 0;
            while (s < dn.size() && dn[s] != d_next) ++s;
            if (s == dn.size())
                throw Error(ErrorKind::Invariant, "sigma neighbor missing in replacement");
            std::vector<VertexId> arc;
            for (std::size_t k2 = 1; k2 < dn.size(); ++k2) {
                VertexId u = dn[(s + k2) % dn.size()];
                if (u == d_prev) break;
                arc.push_back(phi.at(u));
            }

            // Current rotation at gv: find g_next, walk to g_prev, splice.
            auto& rotv = out.graph.rot.at(gv);
            std::size_t sg = 0;
            while (sg < rotv.size() && rotv[sg] != g_next) ++sg;
            if (sg == rotv.size())
                throw Error(ErrorKind::Invariant, "boundary rotation lost its sigma neighbor");
            std::vector<VertexId> rebuilt;
            rebuilt.push_back(g_next);
            for (VertexId u : arc) rebuilt.push_back(u);
            bool closed = false;
            for (std::size_t k2 = 1; k2 < rotv.size(); ++k2) {
                VertexId u = rotv[(sg + k2) % rotv.size()];
                if (!closed && u != g_prev) continue;  // drop the old region arc
                closed = true;
                rebuilt.push_back(u);
            }
            if (!closed)
                throw Error(ErrorKind::Invariant, "boundary rotation lost its sigma neighbor");
            rotv = std::move(rebuilt);
        }

        // Interior rotations of the replacement.
        for (VertexId v : delta.body.interior()) {
            std::vector<VertexId> nb;
            for (VertexId u : delta.body.graph.rot.at(v)) nb.push_back(phi.at(u));
            out.graph.rot[phi.at(v)] = std::move(nb);
        }

        // gamma(W): boundary and interior marks come from the new D.
        for (VertexId v : delta.D) marks.insert(phi.at(v));
    }

    // The old outer face may have been inside a replaced region; re-anchor
    // to a face at g deterministically.
    auto f = out.graph.trace_face(out.g, out.graph.rot.at(out.g).front());
    if (f.size() != 3)
        throw Error(ErrorKind::Invariant, "replacement result is not a triangulation");
    out.outer = {f[0], f[1], f[2]};
    out.validate();
    return {out, marks};
}

}  // namespace barnette
