#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "barnette/build.hpp"
#include "barnette/canonical.hpp"
#include "barnette/graph.hpp"

using namespace barnette;

namespace {

Triangulation relabel(const Triangulation& t, const std::map<VertexId, VertexId>& m) {
    Triangulation out;
    out.g = m.at(t.g);
    out.outer = {m.at(t.outer[0]), m.at(t.outer[1]), m.at(t.outer[2])};
    for (const auto& [v, nb] : t.graph.rot) {
        std::vector<VertexId> nn;
        for (VertexId u : nb) nn.push_back(m.at(u));
        out.graph.rot[m.at(v)] = std::move(nn);
    }
    return out;
}

std::map<VertexId, VertexId> random_permutation(const Triangulation& t, std::mt19937& rng) {
    auto vs = t.graph.vertices();
    std::vector<VertexId> to = vs;
    std::shuffle(to.begin(), to.end(), rng);
    std::map<VertexId, VertexId> m;
    for (std::size_t i = 0; i < vs.size(); ++i) m[vs[i]] = to[i] + 100;
    return m;
}

}  // namespace

TEST_CASE("K4 parses with 4 faces and 6 edges") {
    std::string text =
        "triangulation v1\n"
        "g=1\n"
        "outer=1 2 3\n"
        "1: 2 4 3\n"
        "2: 1 3 4\n"
        "3: 1 4 2\n"
        "4: 1 2 3\n";
    Triangulation t = parse_triangulation(text);
    CHECK(t.size() == 4);
    CHECK(t.graph.edge_count() == 6);
    CHECK(trace_faces(t).faces.size() == 4);
    CHECK(serialize_triangulation(t).find("g=1") != std::string::npos);
    // rebuilt from faces it must agree
    CHECK(op_equivalent(t, make_k4()));
}

TEST_CASE("octahedron: 8 faces, 12 edges, all degrees 4") {
    Triangulation t = make_octahedron();
    CHECK(t.size() == 6);
    CHECK(t.graph.edge_count() == 12);
    CHECK(trace_faces(t).faces.size() == 8);
    for (VertexId v : t.graph.vertices()) CHECK(t.degree(v) == 4);
    // every edge lies in exactly two faces (each direction once)
    auto fs = t.graph.trace_all_faces();
    std::map<std::pair<VertexId, VertexId>, int> count;
    for (const auto& f : fs)
        for (int k = 0; k < 3; ++k) count[{f[k], f[(k + 1) % 3]}]++;
    for (const auto& [e, c] : count) CHECK(c == 1);
}

TEST_CASE("icosahedron traces 20 triangles") {
    Triangulation t = make_icosahedron();
    CHECK(t.size() == 12);
    CHECK(trace_faces(t).faces.size() == 20);
    for (VertexId v : t.graph.vertices()) CHECK(t.degree(v) == 5);
}

TEST_CASE("corrupt rotation is reported as a bad face trace") {
    std::string text =
        "triangulation v1\n"
        "g=1\n"
        "outer=1 2 3\n"
        "1: 2 4 3\n"
        "2: 1 4 3\n"  // reversed rotation
        "3: 1 4 2\n"
        "4: 1 2 3\n";
    CHECK_THROWS_AS(parse_triangulation(text), Error);
}

TEST_CASE("parse failures carry diagnostics") {
    CHECK_THROWS_AS(parse_triangulation("nonsense"), Error);
    CHECK_THROWS_AS(parse_triangulation("triangulation v1\ng=1\n"), Error);
    // g off the outer face
    std::string text =
        "triangulation v1\n"
        "g=4\n"
        "outer=1 2 3\n"
        "1: 2 4 3\n"
        "2: 1 3 4\n"
        "3: 1 4 2\n"
        "4: 1 2 3\n";
    CHECK_THROWS_AS(parse_triangulation(text), Error);
}

TEST_CASE("dual of K4 is the tetrahedron graph; octahedron dualizes to the cube") {
    auto d4 = dual_graph(make_k4());
    CHECK(d4.graph.vertex_count() == 4);
    for (VertexId v : d4.graph.vertices()) CHECK(d4.graph.degree(v) == 3);

    auto cube = dual_graph(make_octahedron());
    CHECK(cube.graph.vertex_count() == 8);
    for (VertexId v : cube.graph.vertices()) CHECK(cube.graph.degree(v) == 3);
    for (const auto& f : cube.graph.trace_all_faces()) CHECK(f.size() == 4);

    auto dod = dual_graph(make_icosahedron());
    CHECK(dod.graph.vertex_count() == 20);
    for (const auto& f : dod.graph.trace_all_faces()) CHECK(f.size() == 5);
}

TEST_CASE("dual face sizes equal primal degrees") {
    for (const Triangulation& t : {make_k4(), make_octahedron(), make_icosahedron()}) {
        auto d = dual_graph(t);
        std::multiset<std::size_t> dual_faces, degrees;
        for (const auto& f : d.graph.trace_all_faces()) dual_faces.insert(f.size());
        for (VertexId v : t.graph.vertices()) degrees.insert(static_cast<std::size_t>(t.degree(v)));
        CHECK(dual_faces == degrees);
    }
}

TEST_CASE("mirror is an involution up to op-equivalence") {
    for (const Triangulation& t : {make_k4(), make_octahedron(), make_icosahedron()}) {
        CHECK(op_equivalent(mirror_reflect(mirror_reflect(t)), t));
    }
}

TEST_CASE("canonical code is invariant under relabeling") {
    std::mt19937 rng(20240817);
    for (const Triangulation& t : {make_k4(), make_octahedron(), make_icosahedron()}) {
        std::string code = canonical_code(t);
        for (int i = 0; i < 8; ++i) {
            auto m = random_permutation(t, rng);
            CHECK(canonical_code(relabel(t, m)) == code);
        }
    }
}

TEST_CASE("op-equivalence is reflexive/symmetric on fixtures") {
    auto a = make_octahedron();
    auto b = make_icosahedron();
    CHECK(op_equivalent(a, a));
    CHECK(op_equivalent(b, b));
    CHECK_FALSE(op_equivalent(a, b));
    CHECK(op_equivalent(a, b) == op_equivalent(b, a));
}

TEST_CASE("directed edges partition into face traces") {
    for (const Triangulation& t : {make_k4(), make_octahedron(), make_icosahedron()}) {
        auto faces = t.graph.trace_all_faces();
        std::size_t total = 0;
        for (const auto& f : faces) total += f.size();
        CHECK(total == 2 * t.graph.edge_count());
    }
}

TEST_CASE("outer cycle of G - g is the link of g") {
    auto t = make_icosahedron();
    auto c = t.outer_cycle_without_g();
    CHECK(c.size() == 5);
    for (VertexId v : c) CHECK(t.graph.adjacent(v, t.g));
}
