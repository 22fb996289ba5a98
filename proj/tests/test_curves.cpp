#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "curveglue/embed.hpp"

using namespace curveglue;

namespace {

Rational q(int n, int d = 1) { return Rational(n, d); }

// single P^1 with marks 1..n at the given parameters
MarkedCurve corolla(std::vector<int> params) {
    std::vector<PointRef> marks;
    for (int p : params) marks.push_back({0, q(p)});
    return MarkedCurve(1, {}, std::move(marks));
}

// (0,4): two P^1 components meeting in one node at t = 2 on both sides,
// marks 1,2 at 0,1 on the first and 3,4 at 0,1 on the second
MarkedCurve two_comp_04() {
    std::vector<Node> nodes{make_node({0, q(2)}, {1, q(2)})};
    std::vector<PointRef> marks{{0, q(0)}, {0, q(1)}, {1, q(0)}, {1, q(1)}};
    return MarkedCurve(2, std::move(nodes), std::move(marks));
}

// (1,1): irreducible with a self-node joining t = 0 and t = 1, mark at t = 5
MarkedCurve nodal_11() {
    std::vector<Node> nodes{make_node({0, q(0)}, {0, q(1)})};
    return MarkedCurve(1, std::move(nodes), {{0, q(5)}});
}

// (2,0): two components joined along three nodes at parameters 0, 1, 2
MarkedCurve theta_20() {
    std::vector<Node> nodes{make_node({0, q(0)}, {1, q(0)}), make_node({0, q(1)}, {1, q(1)}),
                            make_node({0, q(2)}, {1, q(2)})};
    return MarkedCurve(2, std::move(nodes), {});
}

// dot product of a coefficient row with a lambda functional row
Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// every basis row satisfies the node matching condition, rechecked from the
// lambda values directly rather than through the kernel computation
void check_matching(const MarkedCurve& c, const SectionBasis& B) {
    Rational sgn = (B.layout.k % 2 == 0) ? 1 : -1;
    for (std::size_t r = 0; r < B.basis.rows(); ++r) {
        std::vector<Rational> row = B.basis.row(r);
        for (const Node& e : c.nodes()) {
            Rational lp = lambda_value(B.layout, e.first.comp, e.first.param, row);
            Rational lq = lambda_value(B.layout, e.second.comp, e.second.param, row);
            CHECK(lp == sgn * lq);
        }
    }
}

}  // namespace

TEST_CASE("marked curve validation") {
    CHECK_NOTHROW(corolla({0, 1, -1}));
    CHECK_THROWS_AS(MarkedCurve(1, {}, {{0, q(0)}, {0, q(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(MarkedCurve(1, {}, {{0, q(0)}, {0, q(1)}, {0, q(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(MarkedCurve(1, {}, {{0, q(0)}, {0, q(1)}, {1, q(2)}}), std::invalid_argument);
    CHECK_THROWS_AS(MarkedCurve(0, {}, {}), std::invalid_argument);
    // a node may not join a point to itself
    CHECK_THROWS_AS(MarkedCurve(1, {make_node({0, q(0)}, {0, q(0)})}, {{0, q(1)}, {0, q(2)}}),
                    std::invalid_argument);
    // node branch counts as a special point, including for distinctness
    CHECK_THROWS_AS(MarkedCurve(2, {make_node({0, q(0)}, {1, q(2)})},
                                {{0, q(0)}, {0, q(1)}, {1, q(0)}, {1, q(1)}}),
                    std::invalid_argument);
    CHECK_NOTHROW(two_comp_04());
    CHECK_NOTHROW(nodal_11());
    CHECK_NOTHROW(theta_20());
}

TEST_CASE("genus and connectivity bookkeeping") {
    CHECK(corolla({0, 1, -1}).total_genus() == 0);
    CHECK(two_comp_04().total_genus() == 0);
    CHECK(nodal_11().total_genus() == 1);
    CHECK(theta_20().total_genus() == 2);
    CHECK(two_comp_04().is_connected());
    CHECK(theta_20().is_connected());

    // disjoint union of two corollas: two pieces, genus additive with g-1
    CanonicalizedCurve du = disjoint_union_marked(corolla({0, 1, 2}), corolla({0, 1, 2}), 3);
    CHECK(du.curve.n_connected_pieces() == 2);
    CHECK_FALSE(du.curve.is_connected());
    CHECK(du.curve.total_genus() == -1);
    CHECK(du.curve.piece_genera() == std::vector<int>{0, 0});
    CHECK_THROWS_AS(du.curve.dual_graph(), std::invalid_argument);

    CanonicalizedCurve glued = glue_marks(du.curve, 1, 4);
    CHECK(glued.curve.is_connected());
    CHECK(glued.curve.total_genus() == 0);
    CHECK(glued.curve.n_marks() == 4);
}

TEST_CASE("special points are collected sorted") {
    MarkedCurve c = nodal_11();
    CHECK(c.special_points(0) == std::vector<Rational>{q(0), q(1), q(5)});
    CHECK(c.mark(1) == PointRef{0, q(5)});
    CHECK_THROWS_AS(c.mark(0), std::invalid_argument);
    CHECK_THROWS_AS(c.mark(2), std::invalid_argument);
}

TEST_CASE("canonical component order") {
    // marks 1,2 on one component and 3,4 on the other: the component carrying
    // mark 1 must come first
    std::vector<Node> nodes{make_node({0, q(2)}, {1, q(2)})};
    std::vector<PointRef> swapped{{1, q(0)}, {1, q(1)}, {0, q(0)}, {0, q(1)}};
    CHECK_THROWS_AS(MarkedCurve(2, nodes, swapped), std::invalid_argument);
    CanonicalizedCurve cc = canonicalize_curve(2, nodes, swapped);
    CHECK(cc.curve == two_comp_04());
    CHECK(cc.comp_map == std::vector<int>{1, 0});

    // marked components precede unmarked ones
    std::vector<Node> nodes2{make_node({0, q(0)}, {1, q(0)}), make_node({0, q(1)}, {1, q(1)}),
                             make_node({0, q(2)}, {1, q(2)})};
    std::vector<PointRef> marks2{{1, q(3)}};
    CanonicalizedCurve cc2 = canonicalize_curve(2, nodes2, marks2);
    CHECK(cc2.comp_map == std::vector<int>{1, 0});
    CHECK(cc2.curve.mark(1).comp == 0);
}

TEST_CASE("dual graph of a marked curve") {
    DualGraph g = two_comp_04().dual_graph();
    CHECK(g == DualGraph({0, 0}, {{0, 1}}, {0, 0, 1, 1}));
    CHECK(g.total_genus() == 0);
    DualGraph h = theta_20().dual_graph();
    CHECK(h.total_genus() == 2);
    DualGraph l = nodal_11().dual_graph();
    CHECK(l == DualGraph({0}, {{0, 0}}, {0}));
    CHECK(l.total_genus() == 1);
}

TEST_CASE("glue_marks relabels the remaining marks in order") {
    MarkedCurve c = corolla({0, 1, 2, 3});
    CanonicalizedCurve g = glue_marks(c, 1, 4);
    CHECK(g.curve.n_marks() == 2);
    CHECK(g.curve.mark(1) == PointRef{0, q(1)});
    CHECK(g.curve.mark(2) == PointRef{0, q(2)});
    CHECK(g.curve.nodes() == std::vector<Node>{make_node({0, q(0)}, {0, q(3)})});
    CHECK(g.curve.total_genus() == 1);
    CHECK_THROWS_AS(glue_marks(c, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(glue_marks(c, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(glue_marks(c, 1, 5), std::invalid_argument);
}

TEST_CASE("disjoint union splices mark labels") {
    MarkedCurve a = corolla({0, 1, 2});     // labels 1,2,3
    MarkedCurve b = corolla({5, 6, 7});     // labels 1,2,3
    CanonicalizedCurve du = disjoint_union_marked(a, b, 1);
    REQUIRE(du.curve.n_marks() == 6);
    // after splicing at position 1: a1, b1, b2, b3, a2, a3
    int ca = du.comp_map[0], cb = du.comp_map[1];
    CHECK(du.curve.mark(1) == PointRef{ca, q(0)});
    CHECK(du.curve.mark(2) == PointRef{cb, q(5)});
    CHECK(du.curve.mark(3) == PointRef{cb, q(6)});
    CHECK(du.curve.mark(4) == PointRef{cb, q(7)});
    CHECK(du.curve.mark(5) == PointRef{ca, q(1)});
    CHECK(du.curve.mark(6) == PointRef{ca, q(2)});
    // component carrying the lowest label comes first
    CHECK(ca == 0);
    CHECK(cb == 1);
    CHECK_THROWS_AS(disjoint_union_marked(a, b, -1), std::invalid_argument);
    CHECK_THROWS_AS(disjoint_union_marked(a, b, 4), std::invalid_argument);
}

TEST_CASE("relabel_marks permutes labels") {
    MarkedCurve c = corolla({0, 1, 2});
    // rho = cycle (1 2 3): mark l gets label rho(l)
    CanonicalizedCurve r = relabel_marks(c, Permutation::cycle(3));
    CHECK(r.curve.mark(2) == PointRef{0, q(0)});
    CHECK(r.curve.mark(3) == PointRef{0, q(1)});
    CHECK(r.curve.mark(1) == PointRef{0, q(2)});
    CHECK_THROWS_AS(relabel_marks(c, Permutation::identity(4)), std::invalid_argument);

    // swapping the mark blocks of a two-component curve swaps the components
    MarkedCurve d = two_comp_04();
    CanonicalizedCurve s = relabel_marks(d, Permutation({3, 4, 1, 2}));
    CHECK(s.comp_map == std::vector<int>{1, 0});
    CHECK(s.curve == d);  // symmetric data: same curve after canonicalization
}

TEST_CASE("expected dimension and degree") {
    CHECK(h0_expected(0, 3, 1) == 2);
    CHECK(h0_expected(1, 1, 5) == 5);
    CHECK(h0_expected(2, 0, 5) == 9);
    CHECK(degree_total(0, 3, 1) == 1);
    CHECK(degree_total(0, 4, 2) == 4);
    CHECK(degree_total(1, 1, 5) == 5);
    CHECK_THROWS_AS(h0_expected(0, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(h0_expected(1, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(h0_expected(1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(h0_expected(-1, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(h0_expected(0, 3, 0), std::invalid_argument);
}

TEST_CASE("leading coefficient functional") {
    MarkedCurve c = corolla({0, 1, -1});
    SectionLayout L = make_layout(c, 1);
    REQUIRE(L.total == 2);  // numerators of degree <= 1
    // f = 1 / (t (t-1)(t+1)): coefficient vector (1, 0)
    std::vector<Rational> f{q(1), q(0)};
    CHECK(lambda_value(L, 0, q(0), f) == q(-1));
    CHECK(lambda_value(L, 0, q(1), f) == q(1, 2));
    CHECK(lambda_value(L, 0, q(-1), f) == q(1, 2));
    // g = t / (t (t-1)(t+1)): vanishing leading coefficient at t = 0
    std::vector<Rational> g{q(0), q(1)};
    CHECK(lambda_value(L, 0, q(0), g) == q(0));
    CHECK(lambda_value(L, 0, q(1), g) == q(1, 2));
    CHECK(lambda_value(L, 0, q(-1), g) == q(-1, 2));
    CHECK_THROWS_AS(lambda_row(L, 0, q(7)), std::invalid_argument);
}

TEST_CASE("section space of the three-marked line") {
    MarkedCurve c = corolla({0, 1, -1});
    SectionBasis B = section_space(c, 1);
    CHECK(B.basis == Matrix::identity(2));  // basis 1, t
    CHECK(B.layout.special[0] == std::vector<Rational>{q(-1), q(0), q(1)});
}

TEST_CASE("section space dimensions match the count") {
    struct Case {
        MarkedCurve c;
        int g, n;
    };
    std::vector<Case> cases{{corolla({0, 1, -1}), 0, 3},
                            {corolla({0, 1, 2, 3}), 0, 4},
                            {two_comp_04(), 0, 4},
                            {nodal_11(), 1, 1},
                            {theta_20(), 2, 0}};
    for (const Case& cs : cases) {
        REQUIRE(cs.c.total_genus() == cs.g);
        REQUIRE(cs.c.n_marks() == cs.n);
        for (int k = 1; k <= 5; ++k) {
            if (k == 1 && cs.g > 0) continue;
            SectionBasis B = section_space(cs.c, k);
            CHECK(static_cast<int>(B.basis.rows()) == h0_expected(cs.g, cs.n, k));
            CHECK(rank(B.basis) == B.basis.rows());
            check_matching(cs.c, B);
        }
    }
}

TEST_CASE("node matching on the disconnected union holds too") {
    CanonicalizedCurve du = disjoint_union_marked(two_comp_04(), corolla({0, 1, 2}), 2);
    for (int k = 1; k <= 3; ++k) {
        SectionBasis B = section_space(du.curve, k);
        // g - 1 additive over pieces: g = -1 here
        CHECK(static_cast<int>(B.basis.rows()) == (2 * k - 1) * (-2) + k * 7);
        check_matching(du.curve, B);
    }
}

TEST_CASE("embedding the three-marked line is the identity chart") {
    EmbeddedCurve e = embed(corolla({0, 1, -1}), 1);
    CHECK(e.coeffs == Matrix::identity(2));
    // t maps to [1 : t]
    for (int t : {2, 3, 7, -5}) {
        CHECK(point_at(e, 0, q(t)) == std::vector<Rational>{q(1), q(t)});
    }
    CHECK(point_at(e, 0, q(0)) == std::vector<Rational>{q(1), q(0)});
    CHECK(point_at(e, 0, q(1)) == std::vector<Rational>{q(1), q(1)});
    CHECK(point_at(e, 0, q(-1)) == std::vector<Rational>{q(1), q(-1)});
    CHECK(point_at_infinity(e, 0) == std::vector<Rational>{q(0), q(1)});
    CHECK(e.mark_images[0] == std::vector<Rational>{q(1), q(0)});
    CHECK(e.mark_images[1] == std::vector<Rational>{q(1), q(1)});
    CHECK(e.mark_images[2] == std::vector<Rational>{q(1), q(-1)});
    CHECK(forget(e) == corolla({0, 1, -1}));
}

TEST_CASE("embedding validation") {
    CHECK_THROWS_AS(embed(corolla({0, 1, -1}), 0), std::invalid_argument);
    CHECK_THROWS_AS(embed(nodal_11(), 1), std::invalid_argument);
    CHECK_NOTHROW(embed(nodal_11(), 2));
    CHECK_NOTHROW(embed(theta_20(), 2));
}

TEST_CASE("embedded node branches agree and mark images are distinct here") {
    for (int k : {1, 2}) {
        EmbeddedCurve e = embed(two_comp_04(), k);
        CHECK(e.n_coords() == h0_expected(0, 4, k));
        // the embed constructor already asserts node image consistency; check
        // via the public evaluators as well
        CHECK(point_at(e, 0, q(2)) == point_at(e, 1, q(2)));
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) CHECK(e.mark_images[a] != e.mark_images[b]);
    }
}

TEST_CASE("relabel keeps coordinates when the component order is fixed") {
    EmbeddedCurve e = embed(corolla({0, 1, -1}), 2);
    EmbeddedCurve r = relabel(e, Permutation::cycle(3));
    CHECK(r.coeffs == e.coeffs);
    CHECK(r.mark_images[Permutation::cycle(3)(1) - 1] == e.mark_images[0]);
    CHECK(r.mark_images[Permutation::cycle(3)(2) - 1] == e.mark_images[1]);
    CHECK(r.mark_images[Permutation::cycle(3)(3) - 1] == e.mark_images[2]);
    EmbeddedCurve back = relabel(r, Permutation::cycle(3).inverse());
    CHECK(back == e);
}

TEST_CASE("relabel moves coordinate blocks with their components") {
    EmbeddedCurve e = embed(two_comp_04(), 2);
    Permutation rho({3, 4, 1, 2});
    EmbeddedCurve r = relabel(e, rho);
    CHECK(r.marked == relabel_marks(e.marked, rho).curve);
    // row spaces agree after moving the blocks by hand
    SectionLayout L = r.layout;
    Matrix moved(e.coeffs.rows(), L.total);
    std::vector<int> comp_map = relabel_marks(e.marked, rho).comp_map;
    for (int c = 0; c < e.marked.n_components(); ++c) {
        auto oc = static_cast<std::size_t>(c);
        auto nc = static_cast<std::size_t>(comp_map[oc]);
        for (std::size_t row = 0; row < e.coeffs.rows(); ++row)
            for (std::size_t w = 0; w < e.layout.width[oc]; ++w)
                moved.at(row, L.offset[nc] + w) = e.coeffs.at(row, e.layout.offset[oc] + w);
    }
    CHECK(subspace_equal(row_space(moved), row_space(r.coeffs)));
    // mark images are intrinsic up to the coordinate change; in the moved
    // coordinates they must match the recomputed ones exactly
    CHECK(r.mark_images == compute_mark_images(r.marked, r.layout, r.coeffs));
}

TEST_CASE("pole orders are bounded by k at special points") {
    // embed (1,1) at k = 2: coordinates have numerator degree <= k(m-2) = 2
    EmbeddedCurve e = embed(nodal_11(), 2);
    for (std::size_t r = 0; r < e.coeffs.rows(); ++r)
        CHECK(e.numerator(r, 0).degree() <= 2);
    // the section property: (t - p)^k f stays finite at each special point;
    // equivalently every lambda value is well defined, which lambda_row
    // guarantees by construction. Check the node matching again directly.
    Rational lp = lambda_value(e.layout, 0, q(0), e.coeffs.row(0));
    Rational lq = lambda_value(e.layout, 0, q(1), e.coeffs.row(0));
    CHECK(lp == lq);  // k even
}
