#ifndef BARNETTE_BASES_HPP
#define BARNETTE_BASES_HPP

#include "barnette/graph.hpp"

namespace barnette {

// Figure recurrences for the parametric base families. Vertex layout:
// g = 0 throughout, remaining ids ascending.

// Strip triangulation of the n-gon under g: triangles (i, i+1, i+2).
Triangulation make_Gn(int n);

// The unique branching B-terminal graph at height 1.
Triangulation make_J();

// Height-2 base with an n-vertex top path; all outer degrees 5 for n>=3.
Triangulation make_Fn(int n);

// The two exceptional graphs of the compatibility theorem.
Triangulation make_P();
Triangulation make_Q();

}  // namespace barnette

#endif
