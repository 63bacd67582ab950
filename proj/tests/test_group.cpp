#include "doctest.h"

#include "skewcov/group.hpp"

using namespace skewcov;

TEST_CASE("abelian group arithmetic") {
    FiniteAbelianGroup G({2, 3});
    CHECK(G.size() == 6);
    CHECK(G.exponent() == 6);
    auto a = G.from_tuple({1, 2});
    auto b = G.from_tuple({1, 1});
    CHECK(G.tuple(G.mul(a, b)) == std::vector<uint32_t>{0, 0});
    CHECK(G.mul(a, G.inv(a)) == G.id());
    // abelian by construction
    for (uint32_t x = 0; x < G.size(); ++x)
        for (uint32_t y = 0; y < G.size(); ++y) CHECK(G.mul(x, y) == G.mul(y, x));
}

TEST_CASE("character table over GF(32003) for Z2") {
    FieldSpec F(32003);
    FiniteAbelianGroup G({2});
    CharacterTable chi(F, G);
    CHECK(chi.count() == 2);
    CHECK(chi.value(0, 0) == 1);
    CHECK(chi.value(0, 1) == 1);
    CHECK(chi.value(1, 0) == 1);
    CHECK(chi.value(1, 1) == F.p - 1);   // the sign character
}

TEST_CASE("character table for Z2 x Z2") {
    FieldSpec F(32003);
    FiniteAbelianGroup G({2, 2});
    CharacterTable chi(F, G);
    CHECK(chi.count() == 4);
    // orthogonality over GF(p): sum_g chi_t(g) chi_s(g^{-1}) = |G| delta_{ts}
    for (uint32_t t = 0; t < 4; ++t)
        for (uint32_t s = 0; s < 4; ++s) {
            uint32_t acc = 0;
            for (uint32_t g = 0; g < 4; ++g)
                acc = F.add(acc, F.mul(chi.value(t, g), chi.value(s, G.inv(g))));
            CHECK(acc == (t == s ? 4u : 0u));
        }
}

TEST_CASE("Z4 needs p = 1 mod 4") {
    FiniteAbelianGroup G({4});
    CHECK_THROWS_AS(CharacterTable(FieldSpec(32003), G), FieldIncompatible);
    FieldSpec F(32009);   // 32009 = 1 mod 4
    CharacterTable chi(F, G);
    uint32_t i = chi.value(1, 1);
    CHECK(F.mul(i, i) == F.p - 1);   // a primitive 4th root of unity
}
