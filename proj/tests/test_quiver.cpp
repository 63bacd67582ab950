#include "doctest.h"

#include "skewcov/quiver.hpp"

using namespace skewcov;

namespace {

Quiver a2_quiver() {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}};
    return q;
}

Quiver kronecker() {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"al", 0, 1}, {"be", 0, 1}};
    return q;
}

} // namespace

TEST_CASE("A2 path algebra") {
    FieldSpec F(32003);
    auto B = path_basis(F, a2_quiver(), RelationSet{{}, 2});
    CHECK(B.alg->dim() == 3);
    CHECK(B.alg->basis_labels == std::vector<std::string>{"e_1", "e_2", "a"});
    CHECK(B.alg->idempotents.size() == 2);
    // e_1 * a = a, a * e_2 = a, a * e_1 = 0
    CHECK(B.alg->table[0][2] == LinComb{{2, 1}});
    CHECK(B.alg->table[2][1] == LinComb{{2, 1}});
    CHECK(B.alg->table[2][0].empty());
}

TEST_CASE("Kronecker quiver has dim 4") {
    FieldSpec F(32003);
    auto B = path_basis(F, kronecker(), RelationSet{{}, 2});
    CHECK(B.alg->dim() == 4);
}

TEST_CASE("loop modulo x^2") {
    // hand reduction oracle: paths e, x, xx; relation x.x kills length 2,
    // so the basis is {e, x}
    FieldSpec F(32003);
    Quiver q;
    q.vertices = {"v"};
    q.arrows = {{"x", 0, 0}};
    Relation r;
    r.terms = {{1u, Path{0, {0, 0}}}};
    auto B = path_basis(F, q, RelationSet{{r}, 3});
    CHECK(B.alg->dim() == 2);
    CHECK(B.alg->basis_labels == std::vector<std::string>{"e_v", "x"});
    CHECK(B.alg->table[1][1].empty());   // x * x = 0
    CHECK(B.in_ideal(Path{0, {0, 0}}));
}

TEST_CASE("inadmissible input is rejected") {
    FieldSpec F(32003);
    Quiver q;
    q.vertices = {"v"};
    q.arrows = {{"x", 0, 0}};
    CHECK_THROWS_AS(path_basis(F, q, RelationSet{{}, 3}), NotAdmissible);
}

TEST_CASE("commutativity relation mixes paths") {
    // Kronecker with al.be is not composable; use the commuting square instead:
    // two loops x, y with x^2, y^2, xy - yx: dim 4, basis e, x, y, xy
    FieldSpec F(32003);
    Quiver q;
    q.vertices = {"v"};
    q.arrows = {{"x", 0, 0}, {"y", 0, 0}};
    Relation rx{{{1u, Path{0, {0, 0}}}}};
    Relation ry{{{1u, Path{0, {1, 1}}}}};
    Relation rc{{{1u, Path{0, {0, 1}}}, {F.neg(1), Path{0, {1, 0}}}}};
    auto B = path_basis(F, q, RelationSet{{rx, ry, rc}, 3});
    CHECK(B.alg->dim() == 4);
    // normal form of y.x is the basis element for x.y
    auto red = B.reduce_path(Path{0, {1, 0}});
    REQUIRE(red.size() == 1);
    CHECK(B.basis_paths[red[0].first].arrows == std::vector<uint32_t>{0, 1});
    CHECK(red[0].second == 1);
}

TEST_CASE("relation-free path count equals dimension") {
    FieldSpec F(32003);
    // A3: 1 -> 2 -> 3, paths: 3 trivial + 2 arrows + 1 composite = 6
    Quiver q;
    q.vertices = {"1", "2", "3"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 2}};
    auto B = path_basis(F, q, RelationSet{{}, 3});
    CHECK(B.alg->dim() == 6);
    // multiplication table closes: products of basis elements stay in the span
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j)
            for (auto [k, c] : B.alg->table[i][j]) {
                CHECK(k < 6);
                CHECK(c != 0);
            }
}

TEST_CASE("gabriel quiver round trip") {
    FieldSpec F(32003);
    SUBCASE("A2 recovers A2") {
        auto B = path_basis(F, a2_quiver(), RelationSet{{}, 2});
        auto G = gabriel_quiver(*B.alg, B.alg->radical);
        CHECK(G.vertices == 2);
        CHECK(G.multiplicity.at(0, 1) == 1);
        CHECK(G.multiplicity.at(0, 0) == 0);
        CHECK(G.multiplicity.at(1, 0) == 0);
        CHECK(G.multiplicity.at(1, 1) == 0);
    }
    SUBCASE("semisimple algebra gives no arrows") {
        Quiver q;
        q.vertices = {"1", "2"};
        auto B = path_basis(F, q, RelationSet{{}, 2});
        auto G = gabriel_quiver(*B.alg, {});
        CHECK(G.vertices == 2);
        CHECK(G.multiplicity.is_zero());
    }
    SUBCASE("Kronecker keeps its double arrow") {
        auto B = path_basis(F, kronecker(), RelationSet{{}, 2});
        auto G = gabriel_quiver(*B.alg, B.alg->radical);
        CHECK(G.multiplicity.at(0, 1) == 2);
    }
}
