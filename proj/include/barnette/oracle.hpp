#ifndef BARNETTE_ORACLE_HPP
#define BARNETTE_ORACLE_HPP

#include "barnette/graph.hpp"
#include "barnette/verifier.hpp"

namespace barnette {

struct SearchConstraint {
    Flavor flavor = Flavor::Any;
    std::size_t limit = 0;        // 0 = all
    std::size_t budget = 2000000; // node expansions
};

struct SearchResult {
    std::vector<VertexSet> sets;
    bool exhausted = false;
    std::size_t expanded = 0;
};

// Branch-and-bound over vertex inclusion with conservative pruning; finds
// every hamiltonian set of the requested flavor within the budget.
SearchResult enumerate_hamiltonian_sets(const Triangulation& t, const SearchConstraint& c);

// Reference implementation: plain subset scan (for graphs small enough).
SearchResult naive_subset_scan(const Triangulation& t, Flavor f);

}  // namespace barnette

#endif
