#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "barnette/bases.hpp"
#include "barnette/build.hpp"
#include "barnette/canonical.hpp"
#include "barnette/family.hpp"
#include "barnette/ops.hpp"

using namespace barnette;

TEST_CASE("K4 levels and membership") {
    auto t = make_k4();
    auto ls = bfs_levels(t);
    CHECK(ls.height == 1);
    CHECK(ls.level.at(t.g) == 0);
    auto fc = check_family_membership(t);
    CHECK(fc.member);
    CHECK(fc.stratum == 0);  // top level is the 3-cycle
}

TEST_CASE("icosahedron: height 3, level sizes 1/5/5/1, stratum path of one vertex") {
    auto t = make_icosahedron();
    auto ls = bfs_levels(t);
    CHECK(ls.height == 3);
    std::map<int, int> sizes;
    for (const auto& [v, d] : ls.level) sizes[d]++;
    CHECK(sizes[0] == 1);
    CHECK(sizes[1] == 5);
    CHECK(sizes[2] == 5);
    CHECK(sizes[3] == 1);
    auto fc = check_family_membership(t);
    CHECK(fc.member);
    CHECK(fc.stratum == 1);  // single antipodal vertex: path of length 0
}

TEST_CASE("degree-7 stacked vertex breaks membership") {
    auto t = make_octahedron();
    std::vector<std::array<VertexId, 3>> faces;
    for (const auto& f : t.graph.trace_all_faces()) {
        std::array<VertexId, 3> a{f[0], f[1], f[2]};
        std::multiset<VertexId> key(f.begin(), f.end());
        if (key == std::multiset<VertexId>{1, 2, 4}) {
            faces.push_back({7, 1, 2});
            faces.push_back({7, 2, 4});
            faces.push_back({7, 1, 4});
        } else if (key == std::multiset<VertexId>{2, 4, 5}) {
            faces.push_back({8, 2, 4});
            faces.push_back({8, 4, 5});
            faces.push_back({8, 2, 5});
        } else if (key == std::multiset<VertexId>{4, 5, 6}) {
            faces.push_back({9, 4, 5});
            faces.push_back({9, 5, 6});
            faces.push_back({9, 4, 6});
        } else {
            faces.push_back(a);
        }
    }
    Triangulation s = from_faces(faces, {1, 2, 3}, 1);
    CHECK(s.degree(4) == 7);
    CHECK_FALSE(check_family_membership(s).member);
}

TEST_CASE("layer cycles of the icosahedron") {
    auto t = make_icosahedron();
    auto c1 = layer_cycle(t, 1);
    CHECK(c1.kind == LayerCycle::Cycle);
    CHECK(c1.seq.size() == 5);
    auto c2 = layer_cycle(t, 2);
    CHECK(c2.kind == LayerCycle::Cycle);
    CHECK(c2.seq.size() == 5);
    auto c3 = layer_cycle(t, 3);
    CHECK(c3.kind == LayerCycle::Path);
    CHECK(c3.seq.size() == 1);
}

TEST_CASE("G_n bases: strip structure and mirror classification") {
    for (int n = 3; n <= 9; ++n) {
        auto g = make_Gn(n);
        CHECK(g.size() == static_cast<std::size_t>(n + 1));
        CHECK(g.height() == 1);
        CHECK(check_family_membership(g).member);
    }
    CHECK(op_equivalent(make_Gn(3), make_k4()));
    CHECK(op_equivalent(mirror_reflect(make_Gn(4)), make_Gn(4)));
    CHECK(op_equivalent(mirror_reflect(make_Gn(5)), make_Gn(5)));
    CHECK(op_equivalent(mirror_reflect(make_Gn(7)), make_Gn(7)));
    CHECK(op_equivalent(mirror_reflect(make_Gn(9)), make_Gn(9)));
    CHECK_FALSE(op_equivalent(mirror_reflect(make_Gn(6)), make_Gn(6)));
    CHECK_FALSE(op_equivalent(mirror_reflect(make_Gn(8)), make_Gn(8)));
}

TEST_CASE("J is B-terminal and distinct from the strips") {
    auto j = make_J();
    CHECK(j.size() == 7);
    CHECK(j.height() == 1);
    CHECK(check_family_membership(j).member);
    CHECK(op_sites(j, OpKind::B).empty());
    CHECK_FALSE(op_equivalent(j, make_Gn(6)));
    CHECK_FALSE(op_equivalent(j, mirror_reflect(make_Gn(6))));
}

TEST_CASE("F_n bases: height 2, top path of n vertices, outer degrees") {
    for (int n = 1; n <= 7; ++n) {
        auto f = make_Fn(n);
        CHECK(check_family_membership(f).member);
        CHECK(f.height() == 2);
        auto fc = check_family_membership(f);
        CHECK(fc.stratum == n);
        if (n >= 3) {
            CHECK(f.size() == static_cast<std::size_t>(3 * n - 1));
            for (VertexId v : f.outer_cycle_without_g()) CHECK(f.degree(v) == 5);
        }
        CHECK(op_equivalent(mirror_reflect(f), f));
    }
}

TEST_CASE("peel inverts A") {
    for (const Triangulation& g :
         {make_k4(), make_Gn(5), make_J(), make_Fn(1), make_Fn(3), make_icosahedron()}) {
        auto a = apply_A(g);
        CHECK(check_family_membership(a).member);
        CHECK(a.height() == g.height() + 1);
        auto back = peel(a);
        CHECK(op_equivalent(back, g));
    }
}

TEST_CASE("peel rejects height-1 graphs") {
    CHECK_THROWS_AS(peel(make_k4()), Error);
}

TEST_CASE("peel of the icosahedron lands in the family at 7 vertices") {
    auto p = peel(make_icosahedron());
    CHECK(p.size() == 7);
    CHECK(check_family_membership(p).member);
}

TEST_CASE("Lemma 2.1 trichotomy on all-degree-5 outer cycles") {
    for (int n = 3; n <= 6; ++n) {
        auto f = make_Fn(n);
        CHECK_THROWS_AS(peel(f), Error);
    }
    auto a = apply_A(make_Fn(3));
    bool all5 = true;
    for (VertexId v : a.outer_cycle_without_g())
        if (a.degree(v) != 5) all5 = false;
    CHECK(all5);
    CHECK(op_equivalent(peel(a), make_Fn(3)));
}
