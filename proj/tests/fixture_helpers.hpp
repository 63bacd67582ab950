#pragma once

// Shared in-code fixtures: FIX-SWAP, FIX-KRON and the A2 u A2 swap fixture.

#include "skewcov/module.hpp"

namespace skewcov::testfix {

inline BoundQuiverAlgebra swap_lambda(const FieldSpec& F) {
    Quiver q;
    q.vertices = {"1", "2"};
    return path_basis(F, q, RelationSet{{}, 2});
}

inline AlgebraAction swap_act(const BoundQuiverAlgebra& B) {
    QuiverAction qa;
    qa.gens.push_back({{1, 0}, {}});
    return make_quiver_action(B, FiniteAbelianGroup({2}), qa);
}

inline BoundQuiverAlgebra kron_lambda(const FieldSpec& F) {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"al", 0, 1}, {"be", 0, 1}};
    return path_basis(F, q, RelationSet{{}, 2});
}

inline AlgebraAction kron_act(const BoundQuiverAlgebra& B) {
    QuiverAction qa;
    qa.gens.push_back({{0, 1}, {{1, 1}, {1, 0}}});
    return make_quiver_action(B, FiniteAbelianGroup({2}), qa);
}

// A2 u A2 with the copy swap: vertices 1,2,3,4, arrows a: 1->2, b: 3->4.
inline BoundQuiverAlgebra gentle_lambda(const FieldSpec& F) {
    Quiver q;
    q.vertices = {"1", "2", "3", "4"};
    q.arrows = {{"a", 0, 1}, {"b", 2, 3}};
    return path_basis(F, q, RelationSet{{}, 2});
}

inline AlgebraAction gentle_act(const BoundQuiverAlgebra& B) {
    QuiverAction qa;
    qa.gens.push_back({{2, 3, 0, 1}, {{1, 1}, {1, 0}}});
    return make_quiver_action(B, FiniteAbelianGroup({2}), qa);
}

// A Kronecker representation (K => K) with both arrows acting by scalars.
inline FDModule kron_rep(const BoundQuiverAlgebra& B, uint32_t al, uint32_t be) {
    const FieldSpec& F = B.alg->field;
    Mat e1(2, 2), e2(2, 2), mal(2, 2), mbe(2, 2);
    e1.at(0, 0) = 1;
    e2.at(1, 1) = 1;
    mal.at(0, 1) = al;
    mbe.at(0, 1) = be;
    return make_module(B.alg, 2, {e1, e2, mal, mbe});
}

} // namespace skewcov::testfix
