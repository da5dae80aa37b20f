#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "barnette/bases.hpp"
#include "barnette/build.hpp"
#include "barnette/dualize.hpp"
#include "barnette/oracle.hpp"
#include "barnette/verifier.hpp"

using namespace barnette;

TEST_CASE("K4 set {2,3} yields a 4-cycle through the tetrahedron dual") {
    auto t = make_k4();
    auto w = tree_to_dual_cycle(t, {2, 3});
    CHECK(w.cycle.size() == 4);
    CHECK(verify_dual_cycle(dual_graph(t), w));
}

TEST_CASE("icosahedron: any hamiltonian set gives a 20-cycle in the dodecahedron") {
    auto t = make_icosahedron();
    SearchConstraint c;
    c.flavor = Flavor::Any;
    auto r = enumerate_hamiltonian_sets(t, c);
    REQUIRE(!r.sets.empty());
    for (const auto& s : r.sets) {
        auto w = tree_to_dual_cycle(t, s);
        CHECK(w.cycle.size() == 2 * t.size() - 4);
        CHECK(verify_dual_cycle(dual_graph(t), w));
    }
}

TEST_CASE("dual class check: duals of family members pass at g's face") {
    for (const Triangulation& t : {make_k4(), make_Gn(6), make_Fn(3), make_icosahedron()}) {
        auto d = dual_graph(t);
        int gface = dual_face_of_primal_vertex(d, t.g);
        CHECK(check_barnette_class(d, gface));
    }
}

TEST_CASE("dodecahedron passes the class check at every face") {
    auto d = dual_graph(make_icosahedron());
    int nf = static_cast<int>(cubic_faces(d).size());
    for (int i = 0; i < nf; ++i) CHECK(check_barnette_class(d, i));
}

TEST_CASE("precondition violations are reported") {
    auto t = make_k4();
    CHECK_THROWS_AS(tree_to_dual_cycle(t, {4}), Error);
}
