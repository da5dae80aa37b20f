#ifndef BARNETTE_PATTERN_HPP
#define BARNETTE_PATTERN_HPP

#include <optional>

#include "barnette/graph.hpp"

namespace barnette {

// Plane semi-triangulation: one distinguished face, every other face a
// triangle. The boundary cycle sigma is stored as the trace of the
// distinguished face, which places the proper region on the left of each
// directed sigma edge.
struct SemiTriangulation {
    PlaneGraph graph;
    std::vector<VertexId> sigma;
    bool bounded = true;  // proper region bounded in the reference drawing

    void validate() const;
    // Chords: edges joining non-consecutive sigma vertices (necessarily
    // through the proper region).
    std::vector<std::pair<VertexId, VertexId>> chords() const;
    VertexSet interior() const;
};

// The [Delta, d, D] triple.
struct Pattern {
    SemiTriangulation body;
    VertexId d = -1;
    VertexSet D;

    void validate() const;
};

// Anchor-aligned boundary correspondence: maps a's sigma onto b's sigma,
// same direction, a.d onto b.d. Returns std::nullopt when lengths differ.
std::optional<std::map<VertexId, VertexId>> sigma_alignment(const Pattern& a, const Pattern& b);

// Def 2.1 sigma-compatibility: aligned boundary with equal marked
// boundary sets and corresponding chords.
bool sigma_compatible(const Pattern& a, const Pattern& b);

// Full pattern equality [a] = [b]: orientation-preserving isomorphism
// with d and the marked set carried over. Returns the vertex map.
std::optional<std::map<VertexId, VertexId>> pattern_equal(const Pattern& a, const Pattern& b);

// A configuration of G cut out along a boundary cycle. The cycle must be
// oriented with the proper region on the left of each directed edge.
struct ConfigurationMatch {
    std::vector<VertexId> sigma;   // boundary in G, region on the left
    VertexSet interior;            // vertices strictly inside
    std::vector<std::vector<VertexId>> faces;  // proper faces covered (traces)
    std::vector<std::pair<VertexId, VertexId>> chords;  // region edges between boundary vertices

    Pattern as_pattern(const PlaneGraph& g, VertexId anchor, const VertexSet& marks) const;
};

// Cut the sub-configuration bounded by the given cycle.
ConfigurationMatch extract_configuration(const PlaneGraph& g,
                                         const std::vector<VertexId>& sigma);

// Spec surface: match a validated pattern against the configuration at a
// site; absence is a value.
std::optional<ConfigurationMatch> match_configuration(const Triangulation& g, const Pattern& p,
                                                      VertexId anchor,
                                                      const std::vector<VertexId>& sigma);

struct Replacement {
    ConfigurationMatch where;
    VertexId anchor;          // boundary vertex playing d (usually g)
    const Pattern* with;      // replacement pattern, sigma-aligned at anchor
};

// Def 2.2 replacement operation: delete each configuration's interior,
// glue the replacement along sigma, and rewrite the marked set as
// gamma(W) = (W minus the configuration vertices) union the new D sets.
// Proper regions must be pairwise disjoint.
std::pair<Triangulation, VertexSet> replace_patterns(const Triangulation& g, const VertexSet& w,
                                                     const std::vector<Replacement>& reps);

}  // namespace barnette

#endif
