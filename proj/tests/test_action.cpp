#include "doctest.h"

#include "skewcov/action.hpp"

using namespace skewcov;

namespace {

// FIX-SWAP: Lambda = K x K, Z2 swapping the two vertices.
BoundQuiverAlgebra swap_lambda(const FieldSpec& F) {
    Quiver q;
    q.vertices = {"1", "2"};
    return path_basis(F, q, RelationSet{{}, 2});
}

AlgebraAction swap_action(const BoundQuiverAlgebra& B) {
    QuiverAction qa;
    qa.gens.push_back({{1, 0}, {}});
    return make_quiver_action(B, FiniteAbelianGroup({2}), qa);
}

// FIX-KRON: Kronecker quiver, Z2 fixing vertices and swapping the arrows.
BoundQuiverAlgebra kron_lambda(const FieldSpec& F) {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"al", 0, 1}, {"be", 0, 1}};
    return path_basis(F, q, RelationSet{{}, 2});
}

AlgebraAction kron_action(const BoundQuiverAlgebra& B) {
    QuiverAction qa;
    qa.gens.push_back({{0, 1}, {{1, 1}, {1, 0}}});
    return make_quiver_action(B, FiniteAbelianGroup({2}), qa);
}

} // namespace

TEST_CASE("trivial group skew recovers the algebra") {
    FieldSpec F(32003);
    auto B = kron_lambda(F);
    QuiverAction qa;
    qa.gens.push_back({{0, 1}, {{1, 0}, {1, 1}}});
    auto act = make_quiver_action(B, FiniteAbelianGroup({1}), qa);
    auto bundle = skew_algebra(B.alg, act);
    REQUIRE(bundle.full->dim() == B.alg->dim());
    // table equal under b (x) e -> b
    for (size_t i = 0; i < B.alg->dim(); ++i)
        for (size_t j = 0; j < B.alg->dim(); ++j)
            CHECK(bundle.full->table[i][j] == B.alg->table[i][j]);
    CHECK(bundle.corner.alg->dim() == B.alg->dim());
}

TEST_CASE("FIX-SWAP bundle against the hand-expanded table") {
    FieldSpec F(32003);
    auto B = swap_lambda(F);
    auto act = swap_action(B);
    auto bundle = skew_algebra(B.alg, act);
    REQUIRE(bundle.full->dim() == 4);

    // hand oracle: index (i, g) = 2i + g, swap(e1) = e2
    // (e_i (x) g)(e_j (x) h) = e_i g(e_j) (x) gh
    auto idx = [](size_t i, uint32_t g) { return 2 * i + g; };
    for (size_t i = 0; i < 2; ++i)
        for (uint32_t g = 0; g < 2; ++g)
            for (size_t j = 0; j < 2; ++j)
                for (uint32_t h = 0; h < 2; ++h) {
                    size_t gj = g ? 1 - j : j;   // g(e_j)
                    LinComb expect;
                    if (gj == i) expect = {{(uint32_t)idx(i, g ^ h), 1u}};
                    CHECK(bundle.full->table[idx(i, g)][idx(j, h)] == expect);
                }

    // I~ = {1}, trivial stabilizer, corner = K
    CHECK(bundle.orbit_reps == std::vector<size_t>{0});
    CHECK_FALSE(bundle.rep_stab_full[0]);
    CHECK(bundle.corner_vertices.size() == 1);
    CHECK(bundle.corner.alg->dim() == 1);
    CHECK(bundle.gabriel.vertices == 1);
    CHECK(bundle.gabriel.multiplicity.is_zero());
    // ebar = e1 (x) 1
    std::vector<uint32_t> expect_ebar = {1, 0, 0, 0};
    CHECK(bundle.ebar == expect_ebar);
}

TEST_CASE("FIX-KRON bundle: corner vertices and the bipartite square") {
    FieldSpec F(32003);
    auto B = kron_lambda(F);
    auto act = kron_action(B);
    auto bundle = skew_algebra(B.alg, act);
    REQUIRE(bundle.full->dim() == 8);
    CHECK(bundle.corner.alg->dim() == 8);   // ebar = 1 here
    REQUIRE(bundle.corner_vertices.size() == 4);
    // corner vertex labels (i0, rho): (1,+), (1,-), (2,+), (2,-)
    CHECK(bundle.corner_vertices[0].orbit_rep == 0);
    CHECK(bundle.corner_vertices[1].orbit_rep == 0);
    CHECK(bundle.corner_vertices[2].orbit_rep == 1);
    CHECK(bundle.corner_vertices[3].orbit_rep == 1);

    // Gabriel quiver: 4 vertices, 4 arrows forming the bipartite square
    CHECK(bundle.gabriel.vertices == 4);
    size_t arrows = 0;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) arrows += bundle.gabriel.multiplicity.at(i, j);
    CHECK(arrows == 4);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 2; j < 4; ++j) CHECK(bundle.gabriel.multiplicity.at(i, j) == 1);

    // independent oracle: brute-force corner dimensions of rad/rad^2 from
    // structure constants (rad^2 = 0 here), cross-checked with the spans of
    // the symmetric/antisymmetric arrow combinations al +- be
    const auto& full = *bundle.full;
    const auto& corner = *bundle.corner.alg;
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 2; j < 4; ++j) {
            RowSpan s(F, corner.dim());
            for (auto& r : corner.radical)
                s.insert(corner.mul(corner.idempotents[i], corner.mul(r, corner.idempotents[j])));
            CHECK(s.dim() == 1);
        }
    // al + be spans the chi-trivial weight: g(al+be) = al+be
    std::vector<uint32_t> apb(full.dim(), 0);
    apb[bundle.full_index(2, 0)] = 1;   // al (x) 1
    apb[bundle.full_index(3, 0)] = 1;   // be (x) 1
    auto img = row_times_mat(F, apb, dual_action_full(bundle).mats[0]);
    CHECK(img == apb);
}

TEST_CASE("dual action on the full skew algebra") {
    FieldSpec F(32003);
    auto B = kron_lambda(F);
    auto act = kron_action(B);
    auto bundle = skew_algebra(B.alg, act);
    auto dual = dual_action_full(bundle);   // validated multiplicative on all 64 pairs inside
    // trivial character acts as the identity
    CHECK(dual.mats[0] == Mat::identity(8));
    // sign character fixes b (x) 1 and negates b (x) g
    for (size_t i = 0; i < 4; ++i) {
        CHECK(dual.mats[1].at(bundle.full_index(i, 0), bundle.full_index(i, 0)) == 1);
        CHECK(dual.mats[1].at(bundle.full_index(i, 1), bundle.full_index(i, 1)) == F.p - 1);
    }
    // composition of characters equals the action of their product
    const auto& G = bundle.act.group;
    for (uint32_t c1 = 0; c1 < 2; ++c1)
        for (uint32_t c2 = 0; c2 < 2; ++c2)
            CHECK(mat_mul(F, dual.mats[c1], dual.mats[c2]) == dual.mats[G.mul(c1, c2)]);
}

TEST_CASE("double skew recovers the dimension data of Lambda") {
    FieldSpec F(32003);
    SUBCASE("FIX-SWAP") {
        auto B = swap_lambda(F);
        auto bundle = skew_algebra(B.alg, swap_action(B));
        auto dual = dual_action_corner(bundle);
        auto twice = skew_algebra(bundle.corner.alg, dual);
        CHECK(twice.corner.alg->dim() == B.alg->dim());
        CHECK(twice.corner_vertices.size() == B.alg->idempotents.size());
    }
    SUBCASE("FIX-KRON") {
        auto B = kron_lambda(F);
        auto bundle = skew_algebra(B.alg, kron_action(B));
        auto dual = dual_action_corner(bundle);
        auto twice = skew_algebra(bundle.corner.alg, dual);
        CHECK(twice.corner.alg->dim() == 4);
        CHECK(twice.corner_vertices.size() == 2);
        // and the double arrow of the Kronecker quiver is recovered
        auto g2 = twice.gabriel;
        size_t total = 0, max_mult = 0;
        for (size_t i = 0; i < g2.vertices; ++i)
            for (size_t j = 0; j < g2.vertices; ++j) {
                total += g2.multiplicity.at(i, j);
                max_mult = std::max<size_t>(max_mult, g2.multiplicity.at(i, j));
            }
        CHECK(total == 2);
        CHECK(max_mult == 2);
    }
}

TEST_CASE("invalid actions are rejected") {
    FieldSpec F(32003);
    auto B = kron_lambda(F);
    SUBCASE("breaking incidence") {
        QuiverAction qa;
        qa.gens.push_back({{1, 0}, {{1, 0}, {1, 1}}});   // swaps vertices but fixes arrows
        CHECK_THROWS_AS(make_quiver_action(B, FiniteAbelianGroup({2}), qa), ActionInvalid);
    }
    SUBCASE("wrong generator order") {
        QuiverAction qa;
        qa.gens.push_back({{0, 1}, {{2, 0}, {1, 1}}});   // al -> 2*al is not an involution
        CHECK_THROWS_AS(make_quiver_action(B, FiniteAbelianGroup({2}), qa), ActionInvalid);
    }
    SUBCASE("field incompatibility: Z4 over GF(32003)") {
        QuiverAction qa;
        qa.gens.push_back({{0, 1}, {{1, 1}, {1, 0}}});
        CHECK_THROWS_AS(make_quiver_action(B, FiniteAbelianGroup({4}), qa), FieldIncompatible);
    }
    SUBCASE("relation image leaving the ideal span") {
        // loop algebra K[x]/(x^2) with x -> 2x: fine for the relation, but
        // order 2 fails; with scalar -1 the relation x.x keeps its span
        Quiver q;
        q.vertices = {"v"};
        q.arrows = {{"x", 0, 0}};
        Relation r{{{1u, Path{0, {0, 0}}}}};
        auto L = path_basis(F, q, RelationSet{{r}, 3});
        QuiverAction qa;
        qa.gens.push_back({{0}, {{F.p - 1, 0}}});   // x -> -x
        auto act = make_quiver_action(L, FiniteAbelianGroup({2}), qa);
        auto bundle = skew_algebra(L.alg, act);
        CHECK(bundle.full->dim() == 4);
        CHECK(bundle.corner.alg->dim() == 4);   // vertices stable, ebar = 1
    }
}
