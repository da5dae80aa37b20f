#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "barnette/bases.hpp"
#include "barnette/build.hpp"
#include "barnette/canonical.hpp"
#include "barnette/ops.hpp"
#include "barnette/pattern.hpp"

using namespace barnette;

TEST_CASE("op target patterns validate") {
    for (OpKind k : {OpKind::B, OpKind::C, OpKind::Bbar, OpKind::Cbar}) {
        const Pattern& p = op_target_pattern(k);
        CHECK_NOTHROW(p.validate());
    }
    CHECK(op_target_pattern(OpKind::B).body.interior().size() == 1);
    CHECK(op_target_pattern(OpKind::C).body.interior().size() == 1);
    CHECK(op_target_pattern(OpKind::Bbar).body.interior().size() == 2);
    CHECK(op_target_pattern(OpKind::Cbar).body.interior().size() == 2);
}

TEST_CASE("extraction cuts the expected region") {
    auto t = make_icosahedron();
    // quad over a level-2 vertex: site sigma via the op machinery
    auto sites = op_sites(t, OpKind::C);
    REQUIRE(!sites.empty());
    auto sigma = op_site_sigma(t, OpKind::C, sites[0].first, sites[0].second);
    auto m = extract_configuration(t.graph, sigma);
    CHECK(m.sigma.size() == 4);
    CHECK(m.interior.empty());
    CHECK(m.faces.size() == 2);
    CHECK(m.chords.size() == 1);
    auto p = m.as_pattern(t.graph, t.g, {});
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("self-replacement is the identity up to op-equivalence") {
    auto t = make_icosahedron();
    auto sites = op_sites(t, OpKind::C);
    auto sigma = op_site_sigma(t, OpKind::C, sites[0].first, sites[0].second);
    auto m = extract_configuration(t.graph, sigma);
    Pattern self = m.as_pattern(t.graph, t.g, {});
    Replacement rep{m, t.g, &self};
    auto [out, w] = replace_patterns(t, {}, {rep});
    CHECK(op_equivalent(out, t));
    CHECK(w.empty());
}

TEST_CASE("empty replacement list is the identity") {
    auto t = make_octahedron();
    auto [out, w] = replace_patterns(t, {2, 4}, {});
    CHECK(op_equivalent(out, t));
    CHECK(w == VertexSet{2, 4});
}

TEST_CASE("sigma compatibility: marks and chords") {
    const Pattern& d2 = op_target_pattern(OpKind::C);
    Pattern marked = d2;
    marked.D = {d2.body.sigma[1]};
    CHECK_FALSE(sigma_compatible(marked, d2));  // boundary marks differ
    CHECK(sigma_compatible(d2, d2));
    // a quad with the diagonal is sigma-compatible with the bare quad in
    // one direction only
    Pattern quad_chord;
    quad_chord.body = semi_from_faces({{0, 1, 2, 3}, {0, 1, 2}, {0, 2, 3}}, {0, 1, 2, 3});
    quad_chord.d = 0;
    CHECK_FALSE(sigma_compatible(quad_chord, d2));  // chord 0-2 has no image
    CHECK(sigma_compatible(d2, quad_chord));
}

TEST_CASE("pattern equality detects mark mismatches") {
    const Pattern& d1 = op_target_pattern(OpKind::B);
    Pattern a = d1, b = d1;
    a.D = {3};
    CHECK_FALSE(pattern_equal(a, b).has_value());
    b.D = {3};
    CHECK(pattern_equal(a, b).has_value());
}

TEST_CASE("match_configuration returns the unique match or none") {
    auto t = make_icosahedron();
    auto sites = op_sites(t, OpKind::C);
    auto sigma = op_site_sigma(t, OpKind::C, sites[0].first, sites[0].second);
    auto m = extract_configuration(t.graph, sigma);
    Pattern self = m.as_pattern(t.graph, t.g, {});
    CHECK(match_configuration(t, self, t.g, sigma).has_value());
    CHECK_FALSE(match_configuration(t, op_target_pattern(OpKind::Cbar), t.g, sigma).has_value());
}
