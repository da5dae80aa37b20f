#ifndef BARNETTE_CONSTRUCT_HPP
#define BARNETTE_CONSTRUCT_HPP

#include <optional>

#include "barnette/catalog.hpp"
#include "barnette/graph.hpp"
#include "barnette/ops.hpp"
#include "barnette/verifier.hpp"

namespace barnette {

struct ConstructionResult {
    VertexSet set;
    Flavor flavor_achieved = Flavor::Any;
    bool exceptional = false;      // input op-equivalent to P or Q
    std::string exception_name;    // "P" or "Q"
    DerivationTrace trace;         // derivation used (start + steps)
};

// The inductive construction: a hamiltonian set of the requested flavor,
// verifier-checked before returning. For flavor=compatible the graphs P
// and Q raise the exception marker and carry their plain hamiltonian set.
ConstructionResult construct_hamiltonian_set(const Catalog& cat, const Triangulation& t,
                                             Flavor flavor);

// Base dispatch: catalog lookup for irreducible cores and level-1 hosts.
// Returns nullopt when t is not op-equivalent to a stored entry.
std::optional<ConstructionResult> base_case_lookup(const Catalog& cat, const Triangulation& t);

// One surgery step together with the marked-set rewrite; the set choice
// is the lexicographically least one that keeps the evolving set
// hamiltonian and (-)compatible. Returns nullopt when no choice works.
std::optional<std::pair<Triangulation, VertexSet>> transfer_step(const Triangulation& t,
                                                                 const VertexSet& x, OpKind k,
                                                                 VertexId a, VertexId b);

// Theorem 3.1 machinery: lift a compatible set through the double layer.
struct LiftPlan {
    Triangulation deep;            // G^{-2}-equivalent inner graph
    std::vector<OpStep> bar_steps; // commuted middle-layer operations
    std::vector<OpStep> top_steps; // outer C/B operations
};

// The set W on A^2(deep) determined by a hamiltonian set U on deep.
VertexSet lift_double_layer_set(const Triangulation& deep, const Triangulation& a2,
                                const VertexSet& u);

// Replay a derivation from `start` carrying a marked set through every
// step, backtracking over the per-step choices. Returns the final graph
// and set, or nullopt when no transfer chain exists.
std::optional<std::pair<Triangulation, VertexSet>> replay_with_set(const Triangulation& start,
                                                                   const VertexSet& x0,
                                                                   const std::vector<OpStep>& steps);

// Trace emission per the external interface.
std::string render_construction(const ConstructionResult& r);

// Decompose into the spec's trace form against catalog start graphs.
DerivationTrace decompose(const Catalog& cat, const Triangulation& t);

// Replay a trace from its catalog start graph.
Triangulation replay_trace(const Catalog& cat, const DerivationTrace& trace);

// Replay equivalence check.
bool verify_derivation(const Catalog& cat, const DerivationTrace& trace,
                       const Triangulation& target);

}  // namespace barnette

#endif
