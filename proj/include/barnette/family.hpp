#ifndef BARNETTE_FAMILY_HPP
#define BARNETTE_FAMILY_HPP

#include <optional>

#include "barnette/graph.hpp"

namespace barnette {

struct LevelStructure {
    std::map<VertexId, int> level;
    int height = 0;
};

struct FamilyClass {
    bool member = false;
    int stratum = -1;  // 0 for the cycle class, n >= 1 for the path classes
    int height = 0;
};

struct LayerCycle {
    std::vector<VertexId> seq;  // cyclic for kind==Cycle, linear otherwise
    enum Kind { Cycle, Path } kind = Cycle;
};

LevelStructure bfs_levels(const Triangulation& t);

// Membership in the family: every vertex other than g has degree at most
// 6 and every neighbor of g degree at most 5; the stratum is read off the
// top level (cycle => 0, path of n vertices => n).
FamilyClass check_family_membership(const Triangulation& t);

// The cycle c^k on the distance-k vertex set, counterclockwise, indexed
// from the lexicographically least rotation. For k equal to the height
// the result may be a path instead.
LayerCycle layer_cycle(const Triangulation& t, int k);

// G^{-1}: delete all vertices of c(G) and join g to every level-2 vertex.
// Throws when the result is not simple or leaves the family.
Triangulation peel(const Triangulation& t);

}  // namespace barnette

#endif
