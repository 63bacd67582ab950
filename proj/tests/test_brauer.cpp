#include "doctest.h"

#include "skewcov/brauer.hpp"

using namespace skewcov;

namespace {

// FIX-BG1: single half-edge h, iota = id, sigma = id, m = 1, d(h) = 0.
SkewBrauerGraph bg1() {
    SkewBrauerGraph g;
    g.half_edges = {"h"};
    g.iota = {0};
    g.sigma = {0};
    g.mult = {1};
    return g;
}

// FIX-BG2: loop H = {h1, h2}, iota = (h1 h2), sigma = (h1 h2), m = 1.
SkewBrauerGraph bg2() {
    SkewBrauerGraph g;
    g.half_edges = {"h1", "h2"};
    g.iota = {1, 0};
    g.sigma = {1, 0};
    g.mult = {1, 1};
    return g;
}

} // namespace

TEST_CASE("graph validation") {
    auto g = bg2();
    g.validate();
    CHECK(g.is_ordinary());
    CHECK(bg1().fixed_half_edges() == std::vector<uint32_t>{0});
    SUBCASE("iota^2 != id is rejected") {
        SkewBrauerGraph bad;
        bad.half_edges = {"a", "b", "c"};
        bad.iota = {1, 2, 0};   // a 3-cycle
        bad.sigma = {0, 1, 2};
        bad.mult = {1, 1, 1};
        CHECK_THROWS_AS(bad.validate(), ValidationError);
    }
    SUBCASE("multiplicity must be sigma-constant") {
        SkewBrauerGraph bad = bg2();
        bad.mult = {1, 2};
        CHECK_THROWS_AS(bad.validate(), ValidationError);
    }
}

TEST_CASE("double cover permutation data, frozen from the formula oracle") {
    SUBCASE("FIX-BG1: one edge joining two o-vertices") {
        // oracle by the four displayed formulas: iota_d = (h0 h1) since h is
        // iota-fixed; sigma_d = id since sigma = id and d = 0
        auto c = double_cover(bg1(), Grading{{0}});
        REQUIRE(c.size() == 2);
        CHECK(c.iota == std::vector<uint32_t>{1, 0});
        CHECK(c.sigma == std::vector<uint32_t>{0, 1});
        CHECK(c.mult == std::vector<uint32_t>{1, 1});
        CHECK(c.sigma_orbits().size() == 2);
        CHECK(c.edges().size() == 1);
        CHECK(c.is_ordinary());
    }
    SUBCASE("FIX-BG2 with d = 1: permutation composition oracle") {
        // sigma_d(h_i) = (sigma h)_{i + d(h)}: indices 2h + i, so
        // h1_0 -> h2_1, h2_1 -> h1_0, h1_1 -> h2_0, h2_0 -> h1_1:
        // two 2-cycles (each sigma-orbit splits, as 0-homogeneity forces);
        // iota_d moves levels along iota: (h1_0 h2_0)(h1_1 h2_1)
        auto c = double_cover(bg2(), Grading{{1, 1}});
        REQUIRE(c.size() == 4);
        CHECK(c.sigma == std::vector<uint32_t>{3, 2, 1, 0});
        CHECK(c.iota == std::vector<uint32_t>{2, 3, 0, 1});
        CHECK(c.sigma_orbits().size() == 2);
        CHECK(c.edges().size() == 2);
    }
    SUBCASE("inhomogeneous gradings are rejected") {
        CHECK_THROWS_AS(double_cover(bg2(), Grading{{1, 0}}), NotHomogeneous);
    }
    SUBCASE("d = 0 on an ordinary graph gives two disjoint relabeled copies") {
        auto c = double_cover(bg2(), Grading{{0, 0}});
        auto comps = brauer_components(c);
        REQUIRE(comps.size() == 2);
        for (auto& comp : comps)
            CHECK(brauer_isomorphic(brauer_subgraph(c, comp), bg2()));
    }
    SUBCASE("cover invariants") {
        for (auto& [g, d] : std::vector<std::pair<SkewBrauerGraph, Grading>>{
                 {bg1(), Grading{{0}}}, {bg2(), Grading{{1, 1}}}, {bg2(), Grading{{0, 0}}}}) {
            auto c = double_cover(g, d);
            CHECK(c.size() == 2 * g.size());
            CHECK(c.edges().size() == c.size() / 2);
            for (uint32_t h = 0; h < g.size(); ++h)
                for (uint32_t i = 0; i < 2; ++i) CHECK(c.mult[2 * h + i] == g.mult[h]);
        }
    }
}

TEST_CASE("Brauer graph algebras") {
    FieldSpec F(32003);
    SUBCASE("single edge, both multiplicities 1: K[x]/(x^2)") {
        auto c = double_cover(bg1(), Grading{{0}});
        auto data = bg_algebra(F, c);
        CHECK(data.single_edge_special_case);
        CHECK(data.bqa.alg->dim() == 2);
        CHECK(is_special_biserial(data.bqa).ok);
        CHECK(is_symmetric(*data.bqa.alg, 0, 64));
    }
    SUBCASE("FIX-BG2 itself is an ordinary Brauer graph: the commutative square") {
        auto data = bg_algebra(F, bg2());
        CHECK(data.bqa.alg->dim() == 4);
        CHECK(data.bqa.quiver.vertices.size() == 1);
        CHECK(data.bqa.quiver.arrows.size() == 2);
        CHECK(is_special_biserial(data.bqa).ok);
        CHECK(is_symmetric(*data.bqa.alg, 0, 64));
    }
    SUBCASE("FIX-BG2 cover with d = 1") {
        auto c = double_cover(bg2(), Grading{{1, 1}});
        auto data = bg_algebra(F, c);
        CHECK(data.bqa.quiver.vertices.size() == 2);
        CHECK(data.bqa.quiver.arrows.size() == 4);
        CHECK(data.bqa.alg->dim() == 8);
        CHECK(is_special_biserial(data.bqa).ok);
        CHECK(is_symmetric(*data.bqa.alg, 0, 64));
    }
    SUBCASE("skew graphs are rejected before covering") {
        CHECK_THROWS_AS(bg_algebra(F, bg1()), UnsupportedShape);
    }
    SUBCASE("a loop with multiplicity 2") {
        SkewBrauerGraph g = bg2();
        g.mult = {2, 2};
        auto data = bg_algebra(F, g);
        CHECK(is_special_biserial(data.bqa).ok);
        CHECK(is_symmetric(*data.bqa.alg, 0, 64));
    }
}

TEST_CASE("special biserial and symmetric checks stand alone") {
    FieldSpec F(32003);
    SUBCASE("A2 is special biserial but not symmetric") {
        Quiver q;
        q.vertices = {"1", "2"};
        q.arrows = {{"a", 0, 1}};
        auto B = path_basis(F, q, RelationSet{{}, 2});
        CHECK(is_special_biserial(B).ok);
        CHECK_FALSE(is_symmetric(*B.alg, 0, 64));   // Gram rank deficiency at the arrow
    }
    SUBCASE("three arrows out of one vertex fails with a witness") {
        Quiver q;
        q.vertices = {"1", "2"};
        q.arrows = {{"a", 0, 1}, {"b", 0, 1}, {"c", 0, 1}};
        auto B = path_basis(F, q, RelationSet{{}, 2});
        auto rep = is_special_biserial(B);
        CHECK_FALSE(rep.ok);
        CHECK(rep.witness.find("vertex 1") != std::string::npos);
    }
    SUBCASE("a product of fields is symmetric") {
        Quiver q;
        q.vertices = {"1", "2"};
        auto B = path_basis(F, q, RelationSet{{}, 2});
        CHECK(is_symmetric(*B.alg, 0, 64));
    }
}

TEST_CASE("level-swap action and the skew corner") {
    FieldSpec F(32003);
    SUBCASE("FIX-BG1: levels of the fixed edge swap inside the corner") {
        auto r = skew_bg_algebra(F, bg1(), Grading{{0}});
        CHECK(r.bundle.full->dim() == 4);
        CHECK(r.corner.alg->dim() == 4);   // f = 1 here
        REQUIRE(r.seeds.size() == 2);
        CHECK(r.seeds[0].comp == 0);
        CHECK(r.seeds[1].comp == 1);
        auto rep = validate_ghat_formulas(r, Grading{{0}});
        CHECK(rep.ok());
        CHECK(rep.arrows_checked == 2);   // the two loop components ^i x ^i
    }
    SUBCASE("FIX-BG2 with d = 1") {
        auto r = skew_bg_algebra(F, bg2(), Grading{{1, 1}});
        CHECK(r.bundle.full->dim() == 16);
        // brute-force oracle for dim f (B_d G) f
        const auto& A = *r.bundle.full;
        RowSpan span(F, A.dim());
        for (size_t b = 0; b < A.dim(); ++b) {
            std::vector<uint32_t> eb(A.dim(), 0);
            eb[b] = 1;
            span.insert(A.mul(r.f, A.mul(eb, r.f)));
        }
        CHECK(span.dim() == 4);
        CHECK(r.corner.alg->dim() == 4);
        auto rep = validate_ghat_formulas(r, Grading{{1, 1}});
        CHECK(rep.ok());
    }
    SUBCASE("d = 0 cover: skewing the disjoint double recovers one copy's dimension") {
        auto r = skew_bg_algebra(F, bg2(), Grading{{0, 0}});
        auto plain = bg_algebra(F, bg2());
        CHECK(r.corner.alg->dim() == plain.bqa.alg->dim());
        auto rep = validate_ghat_formulas(r, Grading{{0, 0}});
        CHECK(rep.ok());
    }
    SUBCASE("level action has order two and swaps lifted edges") {
        auto c = double_cover(bg2(), Grading{{1, 1}});
        auto data = bg_algebra(F, c);
        auto act = bd_group_action(data, c);
        CHECK(mat_mul(F, act.mats[1], act.mats[1]) == Mat::identity(data.bqa.alg->dim()));
        // the vertex permutation is the level swap on every edge
        for (size_t e = 0; e < data.edge_list.size(); ++e) {
            uint32_t h = data.edge_list[e][0];
            size_t partner_edge = 0;
            for (size_t e2 = 0; e2 < data.edge_list.size(); ++e2)
                for (uint32_t hh : data.edge_list[e2])
                    if (hh == (h ^ 1u)) partner_edge = e2;
            CHECK(act.idem_perm[1][e] == partner_edge);
        }
    }
}
