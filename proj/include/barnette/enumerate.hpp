#ifndef BARNETTE_ENUMERATE_HPP
#define BARNETTE_ENUMERATE_HPP

#include <functional>

#include "barnette/graph.hpp"

namespace barnette {

// Isomorph-free closure of the seed graphs under operations A, B, C,
// deduplicated by canonical code. Stops at max_vertices (and optionally
// at a height bound).
std::map<std::string, Triangulation> enumerate_family(const std::vector<Triangulation>& seeds,
                                                      int max_vertices, int max_height = -1,
                                                      int jobs = 1);

// Independent census: every op-equivalence class of family members up to
// the bound, generated level-by-level from rotation data alone (no
// rewrite operations involved).
std::map<std::string, Triangulation> exhaustive_family_census(int max_vertices, int jobs = 1);

}  // namespace barnette

#endif
