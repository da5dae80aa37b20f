#include "barnette/bases.hpp"

#include "barnette/build.hpp"
#include "barnette/family.hpp"
#include "barnette/ops.hpp"

namespace barnette {

Triangulation make_Gn(int n) {
    if (n < 3) throw Error(ErrorKind::Precondition, "G_n needs n >= 3");
    std::vector<std::array<VertexId, 3>> faces;
    for (int i = 1; i + 2 <= n; ++i) faces.push_back({i, i + 1, i + 2});
    // Boundary of the strip: (1,2), (n-1,n) and the chords (i,i+2).
    std::vector<std::pair<VertexId, VertexId>> boundary;
    boundary.push_back({1, 2});
    for (int i = 1; i + 2 <= n; ++i) boundary.push_back({i, i + 2});
    boundary.push_back({n - 1, n});
    if (n == 3) boundary = {{1, 2}, {2, 3}, {1, 3}};
    for (auto [a, b] : boundary) faces.push_back({0, a, b});
    return from_faces(faces, {0, 1, 2}, 0);
}

Triangulation make_J() {
    Triangulation g5 = make_Gn(5);
    // J = G_5 with the extra ear over the chord (2,4).
    auto c = g5.outer_cycle_without_g();
    for (std::size_t i = 0; i < c.size(); ++i) {
        VertexId a = c[i], b = c[(i + 1) % c.size()];
        if ((a == 2 && b == 4) || (a == 4 && b == 2)) return apply_edge_op(g5, OpKind::B, a, b);
    }
    throw Error(ErrorKind::Invariant, "J construction lost its site");
}

Triangulation make_Fn(int n) {
    if (n < 1) throw Error(ErrorKind::Precondition, "F_n needs n >= 1");
    if (n == 1) {
        return from_faces(
            {{1, 2, 4}, {2, 3, 4}, {1, 3, 4}, {0, 1, 2}, {0, 2, 3}, {0, 1, 3}}, {0, 1, 2}, 0);
    }
    if (n == 2) {
        // Outer triangle 1,2,3 (degrees 5,4,5), inner path 4-5.
        return from_faces({{1, 2, 4},
                           {2, 3, 4},
                           {1, 4, 5},
                           {3, 4, 5},
                           {1, 3, 5},
                           {0, 1, 2},
                           {0, 2, 3},
                           {0, 1, 3}},
                          {0, 1, 2}, 0);
    }
    int m = 2 * n - 2;  // outer cycle length
    std::vector<VertexId> x(m), w(m);
    for (int i = 0; i < m; ++i) x[i] = 1 + i;
    // The level-2 walk runs along the path and back: p_1 ... p_n ... p_2.
    for (int i = 0; i < m; ++i) w[i] = m + (i < n ? i + 1 : 2 * n - i - 1);
    std::vector<std::array<VertexId, 3>> faces;
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        faces.push_back({x[i], x[j], w[i]});   // x_i x_{i+1} w_i
        faces.push_back({w[i], w[j], x[j]});   // w_i w_{i+1} x_{i+1}
        faces.push_back({0, x[i], x[j]});
    }
    return from_faces(faces, {0, 1, 2}, 0);
}

namespace {

// Apply C over every level-2 vertex of a height-2 graph whose outer
// vertices all have degree 5 (the P/Q construction from A(G_3), A(F_1)).
Triangulation saturate_with_C(const Triangulation& base) {
    Triangulation cur = base;
    auto original_sites = op_sites(base, OpKind::C);
    for (auto [a, b] : original_sites) {
        cur = apply_edge_op(cur, OpKind::C, a, b);
    }
    return cur;
}

}  // namespace

Triangulation make_P() { return saturate_with_C(apply_A(make_Gn(3))); }

Triangulation make_Q() { return saturate_with_C(apply_A(make_Fn(1))); }

}  // namespace barnette
