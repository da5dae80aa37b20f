#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "barnette/bases.hpp"
#include "barnette/build.hpp"
#include "barnette/family.hpp"
#include "barnette/oracle.hpp"
#include "barnette/ops.hpp"
#include "barnette/verifier.hpp"

using namespace barnette;

TEST_CASE("K4: two adjacent non-g vertices form a hamiltonian set") {
    auto t = make_k4();
    auto rep = verify_hamiltonian_set(t, {2, 3});
    CHECK(rep.is_hamiltonian);
    CHECK(rep.pm);
}

TEST_CASE("K4: single vertex misses a face") {
    auto t = make_k4();
    auto rep = verify_hamiltonian_set(t, {4});
    CHECK_FALSE(rep.is_hamiltonian);
    CHECK(rep.failure.rfind("missing-face", 0) == 0);
}

TEST_CASE("failure witnesses: cycle, disconnected, contains-g") {
    auto t = make_icosahedron();
    CHECK(verify_hamiltonian_set(t, {2, 3, 4, 5, 6}).failure == "cycle-in-induced");
    CHECK(verify_hamiltonian_set(t, {2, 9}).failure == "disconnected");
    CHECK(verify_hamiltonian_set(t, {1, 2}).failure == "contains-g");
    CHECK(verify_hamiltonian_set(t, {}).failure == "empty");
}

TEST_CASE("P's saturated set is hamiltonian but not compatible either way") {
    auto p = make_P();
    SearchConstraint c;
    c.flavor = Flavor::Any;
    auto all = enumerate_hamiltonian_sets(p, c);
    CHECK(all.exhausted);
    CHECK(!all.sets.empty());
    bool some_not_compat = false;
    for (const auto& s : all.sets) {
        auto rep = verify_hamiltonian_set(p, s);
        CHECK(rep.is_hamiltonian);
        if (!rep.compatible) some_not_compat = true;
        CHECK_FALSE(rep.compatible);   // Theorem 3.2: P is exceptional
    }
    CHECK(some_not_compat);

    c.flavor = Flavor::Compatible;
    auto compat = enumerate_hamiltonian_sets(p, c);
    CHECK(compat.exhausted);
    CHECK(compat.sets.empty());
    c.flavor = Flavor::Minus;
    auto minus = enumerate_hamiltonian_sets(p, c);
    CHECK(minus.exhausted);
    CHECK(minus.sets.empty());
}

TEST_CASE("Q is exceptional too") {
    auto q = make_Q();
    SearchConstraint c;
    c.flavor = Flavor::Compatible;
    auto compat = enumerate_hamiltonian_sets(q, c);
    CHECK(compat.exhausted);
    CHECK(compat.sets.empty());
    c.flavor = Flavor::Any;
    auto all = enumerate_hamiltonian_sets(q, c);
    CHECK(!all.sets.empty());
}

TEST_CASE("oracle equals the naive subset scan on small graphs") {
    std::vector<Triangulation> fixtures = {make_k4(), make_octahedron(), make_Gn(6),
                                           make_J(),  make_Fn(3),        make_icosahedron()};
    for (const auto& t : fixtures) {
        for (Flavor f : {Flavor::Any, Flavor::Compatible, Flavor::Minus, Flavor::Pm}) {
            SearchConstraint c;
            c.flavor = f;
            auto fast = enumerate_hamiltonian_sets(t, c);
            auto slow = naive_subset_scan(t, f);
            CHECK(fast.exhausted);
            CHECK(fast.sets == slow.sets);
        }
    }
}

TEST_CASE("mirror duality: compatible sets reflect to minus-compatible sets") {
    std::mt19937 rng(7);
    for (const Triangulation& t : {make_Gn(7), make_Fn(4), make_icosahedron()}) {
        auto m = mirror_reflect(t);
        SearchConstraint c;
        c.flavor = Flavor::Compatible;
        auto sc = enumerate_hamiltonian_sets(t, c);
        c.flavor = Flavor::Minus;
        auto sm = enumerate_hamiltonian_sets(m, c);
        CHECK(sc.sets == sm.sets);  // identical vertex sets, reflected host
    }
}

TEST_CASE("flag lattice: pm implies both directions") {
    auto t = make_Gn(8);
    auto all = naive_subset_scan(t, Flavor::Any);
    for (const auto& s : all.sets) {
        auto rep = verify_hamiltonian_set(t, s);
        CHECK(rep.pm == (rep.compatible && rep.minus_compatible));
    }
}

TEST_CASE("budget exhaustion reports partial results") {
    SearchConstraint c;
    c.flavor = Flavor::Any;
    c.budget = 10;
    auto r = enumerate_hamiltonian_sets(make_icosahedron(), c);
    CHECK_FALSE(r.exhausted);
}

TEST_CASE("every base fixture has a pm set (Lemma 4.1 flavor)") {
    for (const Triangulation& t : {make_Gn(4), make_Gn(5), make_Gn(6), make_Gn(7), make_J(),
                                   make_Fn(1), make_Fn(2), make_Fn(3), make_Fn(4)}) {
        SearchConstraint c;
        c.flavor = Flavor::Pm;
        c.limit = 1;
        auto r = enumerate_hamiltonian_sets(t, c);
        CHECK(!r.sets.empty());
    }
}
