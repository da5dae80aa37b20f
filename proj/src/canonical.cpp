#include "barnette/canonical.hpp"

#include <algorithm>
#include <sstream>

namespace barnette {

std::string rooted_code(const PlaneGraph& g, VertexId from, VertexId to) {
    // BFS labeling: each vertex is expanded once, reading its rotation
    // starting from the neighbor it was first reached through. Fresh
    // vertices are labeled in encounter order, so the emitted label
    // sequence determines the rooted embedding up to isomorphism.
    std::map<VertexId, int> label;
    std::vector<VertexId> order;
    std::vector<VertexId> entry;  // indexed like `order`
    label[from] = 0;
    order.push_back(from);
    entry.push_back(to);
    std::ostringstream code;
    for (std::size_t i = 0; i < order.size(); ++i) {
        VertexId v = order[i];
        const auto& nb = g.rot.at(v);
        std::size_t start = 0;
        while (start < nb.size() && nb[start] != entry[i]) ++start;
        if (start == nb.size())
            throw Error(ErrorKind::Invariant, "entry neighbor missing from rotation");
        code << nb.size() << ':';
        for (std::size_t k = 0; k < nb.size(); ++k) {
            VertexId u = nb[(start + k) % nb.size()];
            auto it = label.find(u);
            int lu;
            if (it == label.end()) {
                lu = static_cast<int>(order.size());
                label[u] = lu;
                order.push_back(u);
                entry.push_back(v);
            } else {
                lu = it->second;
            }
            code << lu << ',';
        }
        code << ';';
    }
    if (order.size() != g.vertex_count())
        throw Error(ErrorKind::Invariant, "rooted code requires a connected graph");
    return code.str();
}

std::string canonical_code(const Triangulation& t) {
    PlaneGraph h;
    for (const auto& [v, nb] : t.graph.rot) {
        if (v == t.g) continue;
        std::vector<VertexId> pruned;
        for (VertexId u : nb)
            if (u != t.g) pruned.push_back(u);
        h.rot[v] = std::move(pruned);
    }
    auto cyc = t.outer_cycle_without_g();
    std::string best;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        std::string code = rooted_code(h, cyc[i], cyc[(i + 1) % cyc.size()]);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

bool op_equivalent(const Triangulation& a, const Triangulation& b) {
    if (a.size() != b.size()) return false;
    return canonical_code(a) == canonical_code(b);
}

}  // namespace barnette
