#include "barnette/verifier.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace barnette {

Flavor flavor_from_string(const std::string& s) {
    if (s == "any") return Flavor::Any;
    if (s == "compatible" || s == "compat") return Flavor::Compatible;
    if (s == "minus") return Flavor::Minus;
    if (s == "pm") return Flavor::Pm;
    throw Error(ErrorKind::Parse, "unknown flavor '" + s + "'");
}

std::string flavor_to_string(Flavor f) {
    switch (f) {
        case Flavor::Any: return "any";
        case Flavor::Compatible: return "compatible";
        case Flavor::Minus: return "minus";
        case Flavor::Pm: return "pm";
    }
    return "?";
}

CompatibilityReport verify_hamiltonian_set(const Triangulation& t, const VertexSet& u) {
    CompatibilityReport rep;
    for (VertexId v : u)
        if (!t.graph.has_vertex(v))
            throw Error(ErrorKind::Precondition, "set contains unknown vertex " + std::to_string(v));

    if (u.empty()) {
        rep.failure = "empty";
        return rep;
    }
    if (u.count(t.g)) {
        rep.failure = "contains-g";
        return rep;
    }

    // Induced subgraph: tree iff connected with |E| = |V| - 1.
    std::size_t edges = 0;
    for (VertexId v : u)
        for (VertexId w : t.graph.rot.at(v))
            if (w > v && u.count(w)) ++edges;
    std::set<VertexId> seen;
    std::deque<VertexId> q{*u.begin()};
    seen.insert(*u.begin());
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop_front();
        for (VertexId w : t.graph.rot.at(v))
            if (u.count(w) && seen.insert(w).second) q.push_back(w);
    }
    if (seen.size() != u.size()) {
        rep.failure = "disconnected";
        return rep;
    }
    if (edges + 1 != u.size()) {
        rep.failure = "cycle-in-induced";
        return rep;
    }

    for (const auto& f : t.graph.trace_all_faces()) {
        bool hit = false;
        for (VertexId v : f)
            if (u.count(v)) hit = true;
        if (!hit) {
            std::ostringstream w;
            w << "missing-face";
            for (VertexId v : f) w << " " << v;
            rep.failure = w.str();
            return rep;
        }
    }
    rep.is_hamiltonian = true;

    auto cyc = t.outer_cycle_without_g();
    int m = static_cast<int>(cyc.size());
    rep.compatible = rep.minus_compatible = true;
    for (int i = 0; i < m; ++i) {
        VertexId x = cyc[i];
        if (u.count(x) || t.degree(x) > 4) continue;
        if (!u.count(cyc[(i + 2) % m])) {
            rep.compatible = false;
            rep.compat_witnesses.push_back(i);
        }
        if (!u.count(cyc[(i - 2 + m) % m])) {
            rep.minus_compatible = false;
            rep.minus_witnesses.push_back(i);
        }
    }
    rep.pm = rep.compatible && rep.minus_compatible;
    return rep;
}

std::string CompatibilityReport::render() const {
    std::ostringstream out;
    out << "is_hamiltonian=" << (is_hamiltonian ? "true" : "false") << "\n";
    if (!is_hamiltonian) out << "failure=" << failure << "\n";
    out << "compatible=" << (compatible ? "true" : "false") << "\n";
    out << "minus_compatible=" << (minus_compatible ? "true" : "false") << "\n";
    out << "pm=" << (pm ? "true" : "false") << "\n";
    auto dump = [&](const char* key, const std::vector<int>& w) {
        if (w.empty()) return;
        out << key << "=";
        for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
        out << "\n";
    };
    dump("compat_witnesses", compat_witnesses);
    dump("minus_witnesses", minus_witnesses);
    return out.str();
}

}  // namespace barnette
