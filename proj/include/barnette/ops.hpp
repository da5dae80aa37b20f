#ifndef BARNETTE_OPS_HPP
#define BARNETTE_OPS_HPP

#include <optional>
#include <string>

#include "barnette/graph.hpp"
#include "barnette/pattern.hpp"

namespace barnette {

enum class OpKind { A, B, C, Bbar, Cbar };

char op_kind_char(OpKind k);
OpKind op_kind_from_char(char c);

// One rewriting step. Edge operations are anchored by the ordered pair
// (a, b) of consecutive outer-cycle vertices (a before b along the
// counterclockwise outer cycle).
struct OpStep {
    OpKind kind = OpKind::A;
    VertexId a = -1, b = -1;
};

struct DerivationTrace {
    std::string start_name;  // catalog base-graph name
    int start_param = 0;     // parameter, 0 when absent
    std::vector<OpStep> steps;

    std::string serialize() const;
    static DerivationTrace parse(const std::string& text);
};

// Layer operation A of Def 2.4(a).
Triangulation apply_A(const Triangulation& t);

// Site discovery for the edge operations; pairs are in c(G) order.
std::vector<std::pair<VertexId, VertexId>> op_sites(const Triangulation& t, OpKind k);

// Edge operations, routed through the replacement engine with the
// built-in target patterns. Newly created vertices take ids max+1
// ascending; the inserted ids are reported for trace bookkeeping.
Triangulation apply_edge_op(const Triangulation& t, OpKind k, VertexId a, VertexId b);

// The target patterns of the four edge operations (anchored at d = the
// boundary vertex playing g).
const Pattern& op_target_pattern(OpKind k);

// Boundary of an operation site, oriented with the proper region on the
// left and rotated to start at g. Throws when the site preconditions
// fail, naming the failing degree or face condition.
std::vector<VertexId> op_site_sigma(const Triangulation& t, OpKind k, VertexId a, VertexId b);

// Theorem 2.1 style reduction to an irreducible core: repeatedly remove a
// degree-3 outer vertex (flanks of degree >= 4), remove a degree-4 outer
// vertex over a level-2 apex (non-adjacent flanks), or peel a layer when
// every outer vertex has degree 5. Deterministic: least eligible vertex
// first.
struct Decomposition {
    Triangulation core;           // irreducible remainder
    std::vector<OpStep> steps;    // forward ops rebuilding the input from core
};
Decomposition decompose_to_core(const Triangulation& t);

// Replay forward steps on a start graph; vertex ids referenced by steps
// are interpreted in the evolving replay graph.
Triangulation replay_steps(const Triangulation& start, const std::vector<OpStep>& steps);

// Translate steps recorded against `recorded_start` so they replay on the
// op-equivalent `replay_start` (trace portability across relabelings).
std::vector<OpStep> translate_steps(const Triangulation& recorded_start,
                                    const Triangulation& replay_start,
                                    const std::vector<OpStep>& steps);

// Orientation-preserving isomorphism witness between op-equivalent
// triangulations (g mapped to g); nullopt when not op-equivalent.
std::optional<std::map<VertexId, VertexId>> op_equivalence_map(const Triangulation& a,
                                                               const Triangulation& b);

}  // namespace barnette

#endif
