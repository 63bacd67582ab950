#include "doctest.h"

#include "fixture_helpers.hpp"
#include "skewcov/functor.hpp"

using namespace skewcov;
using namespace skewcov::testfix;

namespace {

BoundQuiverAlgebra a2(const FieldSpec& F) {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}};
    return path_basis(F, q, RelationSet{{}, 2});
}

FPFunctor representable(const FDModule& m) {
    return theta(zero_morphism(zero_module(m.alg), m));
}

// Independent pointwise oracle for Nat(t, t) on a complete list of
// indecomposables: families (phi_X) commuting with every T(u), u: X -> Y.
size_t pointwise_nat_dim(const FPFunctor& t, const std::vector<FDModule>& indecs) {
    const FieldSpec& F = t.pres.src.alg->field;
    // T(X) coordinates: projection of Hom(X, N) coordinates
    struct Value {
        HomBasis hn;
        EvalResult ev;
    };
    std::vector<Value> vals;
    for (auto& X : indecs) vals.push_back({hom_space(X, t.pres.tgt), evaluate(t, X)});
    // T(u): T(Y) -> T(X) for u: X -> Y, via eta |-> u eta on representatives
    auto value_map = [&](size_t xi, size_t yi, const Mat& u) {
        const Value& VX = vals[xi];
        const Value& VY = vals[yi];
        Mat m(VY.ev.dim, VX.ev.dim);
        if (VY.ev.dim == 0 || VX.ev.dim == 0) return m;
        // for each hom basis eta of Hom(Y, N), its class in T(Y) is a column
        // of the projection; the map eta -> u eta descends to classes
        HomCoords ncx(F, vals[xi].hn.basis);
        Mat classes_y(VY.hn.dim(), VY.ev.dim);
        for (size_t k = 0; k < VY.hn.dim(); ++k) {
            std::vector<uint32_t> coord(VY.hn.dim(), 0);
            coord[k] = 1;
            auto cls = row_times_mat(F, coord, mat_transpose(VY.ev.projection));
            classes_y.set_row(k, cls);
        }
        // pick a basis of T(Y) from hom elements: rows of classes_y span T(Y)
        std::vector<size_t> picks;
        {
            RowSpan span(F, VY.ev.dim);
            for (size_t k = 0; k < VY.hn.dim(); ++k)
                if (span.insert(classes_y.row(k))) picks.push_back(k);
        }
        REQUIRE(picks.size() == VY.ev.dim);
        Mat pick_classes(VY.ev.dim, VY.ev.dim);
        for (size_t r = 0; r < picks.size(); ++r) pick_classes.set_row(r, classes_y.row(picks[r]));
        auto inv = mat_inverse(F, pick_classes);
        REQUIRE(inv.has_value());
        // map each picked representative through u and project in T(X)
        Mat mapped(VY.ev.dim, VX.ev.dim);
        for (size_t r = 0; r < picks.size(); ++r) {
            Mat eta = VY.hn.basis[picks[r]];
            auto cx = ncx.coords(mat_mul(F, u, eta));
            mapped.set_row(r, row_times_mat(F, cx, mat_transpose(VX.ev.projection)));
        }
        return mat_mul(F, *inv, mapped);
    };
    // unknowns: block matrices phi_X on T(X); constraints from all u: X -> Y
    std::vector<size_t> off(indecs.size() + 1, 0);
    for (size_t i = 0; i < indecs.size(); ++i) off[i + 1] = off[i] + vals[i].ev.dim * vals[i].ev.dim;
    size_t total = off.back();
    if (total == 0) return 0;
    std::vector<std::vector<uint32_t>> constraints;
    for (size_t xi = 0; xi < indecs.size(); ++xi)
        for (size_t yi = 0; yi < indecs.size(); ++yi)
            for (auto& u : hom_space(indecs[xi], indecs[yi]).basis) {
                Mat tu = value_map(xi, yi, u);   // T(Y) -> T(X)
                size_t dy = vals[yi].ev.dim, dx = vals[xi].ev.dim;
                // naturality: tu . phi_X = phi_Y . tu
                for (size_t r = 0; r < dy; ++r)
                    for (size_t c = 0; c < dx; ++c) {
                        std::vector<uint32_t> row(total, 0);
                        for (size_t k = 0; k < dx; ++k)
                            row[off[xi] + k * dx + c] =
                                F.add(row[off[xi] + k * dx + c], tu.at(r, k));
                        for (size_t k = 0; k < dy; ++k)
                            row[off[yi] + r * dy + k] = F.sub(
                                row[off[yi] + r * dy + k], tu.at(k, c));
                        constraints.push_back(std::move(row));
                    }
            }
    Mat sys(constraints.size(), total);
    for (size_t i = 0; i < constraints.size(); ++i) sys.set_row(i, constraints[i]);
    return total - rank_of(F, sys);
}

} // namespace

TEST_CASE("functor evaluation on the stated examples") {
    FieldSpec F(32003);
    auto A = a2(F);
    auto S1 = simple_module(A.alg, 0);
    auto S2 = simple_module(A.alg, 1);
    auto P1 = proj_module(A.alg, 0);
    SUBCASE("representable functor evaluates to hom dimensions") {
        auto t = representable(P1);
        CHECK(evaluate(t, S2).dim == hom_space(S2, P1).dim());
        CHECK(evaluate(t, P1).dim == 1);
    }
    SUBCASE("identity presentation gives the zero functor") {
        auto t = theta(identity_morphism(P1));
        CHECK(evaluate(t, S1).dim == 0);
        CHECK(evaluate(t, S2).dim == 0);
        CHECK(evaluate(t, P1).dim == 0);
    }
    SUBCASE("t = coker Hom(-, S2 >-> P1)") {
        auto t = theta(make_morphism(S2, P1, hom_space(S2, P1).basis[0]));
        CHECK(evaluate(t, S2).dim == 0);
        CHECK(evaluate(t, P1).dim == 1);
        CHECK(evaluate(t, S1).dim == 0);
    }
}

TEST_CASE("Yoneda: Nat between representables is Hom") {
    FieldSpec F(32003);
    auto A = a2(F);
    std::vector<FDModule> mods = {simple_module(A.alg, 0), simple_module(A.alg, 1),
                                  proj_module(A.alg, 0)};
    for (auto& m : mods)
        for (auto& n : mods)
            CHECK(nat_trans_space(representable(m), representable(n)).dim ==
                  hom_space(m, n).dim());
    SUBCASE("Nat(0, t) = 0") {
        auto zero_t = theta(identity_morphism(mods[2]));
        CHECK(nat_trans_space(zero_t, representable(mods[0])).dim == 0);
        CHECK(nat_trans_space(zero_t, zero_t).dim == 0);
    }
}

TEST_CASE("Nat(t, t) for the A2 cokernel functor, with the pointwise oracle") {
    FieldSpec F(32003);
    auto A = a2(F);
    auto S1 = simple_module(A.alg, 0);
    auto S2 = simple_module(A.alg, 1);
    auto P1 = proj_module(A.alg, 0);
    auto t = theta(make_morphism(S2, P1, hom_space(S2, P1).basis[0]));
    size_t via_presentations = nat_trans_space(t, t).dim;
    size_t via_pointwise = pointwise_nat_dim(t, {S1, S2, P1});
    CHECK(via_presentations == 1);
    CHECK(via_pointwise == via_presentations);
    // second cross-check: Nat of representables against the oracle
    auto r = representable(P1);
    CHECK(pointwise_nat_dim(r, {S1, S2, P1}) == nat_trans_space(r, r).dim);
}

TEST_CASE("phi on representables and the pointwise identity") {
    FieldSpec F(32003);
    auto K = kron_lambda(F);
    auto bun = skew_algebra(K.alg, kron_act(K));
    auto S1 = simple_module(K.alg, 0);
    auto S2 = simple_module(K.alg, 1);
    auto P1 = proj_module(K.alg, 0);
    std::vector<FDModule> xbars = {pushdown_full(bun, S1), pushdown_full(bun, P1),
                                   pushdown_full(bun, kron_rep(K, 1, 0))};
    SUBCASE("phi(Hom(-, M)) evaluates to Hom(-, F M)") {
        auto t = representable(S1);
        for (auto& xb : xbars)
            CHECK(evaluate(phi(bun, t), xb).dim ==
                  hom_space(xb, pushdown_full(bun, S1)).dim());
    }
    SUBCASE("zero functor pushes to zero") {
        auto t = theta(identity_morphism(P1));
        for (auto& xb : xbars) CHECK(evaluate(phi(bun, t), xb).dim == 0);
    }
    SUBCASE("pointwise phi identity: evaluate(phi t, xbar) = evaluate(t, restrict xbar)") {
        std::vector<FPFunctor> ts = {representable(S1), representable(P1),
                                     theta(make_morphism(S2, P1, hom_space(S2, P1).basis[0]))};
        for (auto& t : ts)
            for (auto& xb : xbars)
                CHECK(evaluate(phi(bun, t), xb).dim ==
                      evaluate(t, restrict_module(bun, xb)).dim);
    }
    SUBCASE("trivial group: phi(t) = t pointwise") {
        QuiverAction qa;
        qa.gens.push_back({{0, 1}, {{1, 0}, {1, 1}}});
        auto tb = skew_algebra(K.alg, make_quiver_action(K, FiniteAbelianGroup({1}), qa));
        auto t = representable(S1);
        for (auto* m : {&S1, &S2, &P1})
            CHECK(evaluate(phi(tb, t), pushdown_full(tb, *m)).dim == evaluate(t, *m).dim);
    }
}

TEST_CASE("phi_pointwise classification") {
    FieldSpec F(32003);
    auto K = kron_lambda(F);
    auto bun = skew_algebra(K.alg, kron_act(K));
    auto S1 = simple_module(K.alg, 0);
    auto S2 = simple_module(K.alg, 1);
    auto P1 = proj_module(K.alg, 0);
    std::vector<FDModule> catalog = {S1, S2, P1, kron_rep(K, 1, 0), kron_rep(K, 0, 1)};
    auto t = representable(S1);
    SUBCASE("xbar = F(S1): case 1 with value 2") {
        auto rep = phi_pointwise(bun, t, pushdown_full(bun, S1), catalog, 0, 64);
        CHECK(rep.case_kind == 1);
        CHECK(rep.v_case == 2);
        CHECK(rep.v_phi == 2);
        CHECK(rep.pass);
    }
    SUBCASE("proper summand of F(S1): case 2") {
        auto piece = summand_module(pushdown_full(bun, S1), 0, 64);
        REQUIRE(piece.dim == 1);
        auto rep = phi_pointwise(bun, t, piece, catalog, 0, 64);
        CHECK(rep.case_kind == 2);
        CHECK(rep.v_case == 1);
        CHECK(rep.pass);
    }
}

TEST_CASE("GCF branch identities") {
    FieldSpec F(32003);
    SUBCASE("FIX-KRON, T1 = T2 = Hom(-, S1): case IV, both sides 2") {
        auto K = kron_lambda(F);
        auto bun = skew_algebra(K.alg, kron_act(K));
        auto t = representable(simple_module(K.alg, 0));
        auto rep = verify_gcf(bun, t, t, 0, 64);
        CHECK(rep.gcf_case == 4);
        CHECK(rep.lhs == 2);
        REQUIRE(rep.rhs.size() == 1);
        CHECK(rep.rhs[0].second == 2);
        CHECK(rep.pass);
        CHECK(rep.sfm_agrees == 1);
    }
    SUBCASE("FIX-SWAP, T1 = Hom(-, S1), T2 = Hom(-, S2): both sides 1") {
        auto B = swap_lambda(F);
        auto bun = skew_algebra(B.alg, swap_act(B));
        auto t1 = representable(simple_module(B.alg, 0));
        auto t2 = representable(simple_module(B.alg, 1));
        auto rep = verify_gcf(bun, t1, t2, 0, 64);
        CHECK(rep.gcf_case == 3);
        CHECK(rep.lhs == 1);
        for (auto& [label, v] : rep.rhs) CHECK(v == 1);
        CHECK(rep.pass);
        CHECK(rep.sfm_agrees == 1);
    }
    SUBCASE("trivial group: trivial equality") {
        auto K = kron_lambda(F);
        QuiverAction qa;
        qa.gens.push_back({{0, 1}, {{1, 0}, {1, 1}}});
        auto bun = skew_algebra(K.alg, make_quiver_action(K, FiniteAbelianGroup({1}), qa));
        auto t = representable(proj_module(K.alg, 0));
        auto rep = verify_gcf(bun, t, t, 0, 64);
        CHECK(rep.pass);
    }
}

TEST_CASE("stabilizer transfer needs more than module-pair stability") {
    // Over the Kronecker fixture, Hom(S2, P1) is two-dimensional and the
    // twist exchanges the two socle embeddings.  For T = coker Hom(-, incl)
    // with a single embedding incl, the presentation is right minimal, both
    // presentation modules are stable, yet ^gT and T are not isomorphic:
    // the module-pair criterion detects stability only up to choosing f.
    FieldSpec F(32003);
    auto K = kron_lambda(F);
    auto bun = skew_algebra(K.alg, kron_act(K));
    auto S2 = simple_module(K.alg, 1);
    auto P1 = proj_module(K.alg, 0);
    auto incl = make_morphism(S2, P1, hom_space(S2, P1).basis[0]);
    auto t = theta(incl);
    CHECK(right_minimal(incl));
    CHECK(module_stabilizer(bun.act, S2, 0, 64).full(2));
    CHECK(module_stabilizer(bun.act, P1, 0, 64).full(2));
    auto st = functor_stabilizer(bun.act, t, 0, 64);
    REQUIRE_FALSE(st.inconclusive);
    CHECK_FALSE(st.full(2));
    // the GCF identity itself still holds on the honest branch
    auto rep = verify_gcf(bun, t, t, 0, 64);
    CHECK(rep.gcf_case == 3);
    CHECK(rep.pass);
    CHECK(rep.sfm_agrees == 0);
    // evaluation detail behind the obstruction: T(S2) = 2 - 1 = 1 here
    CHECK(evaluate(t, S2).dim == 1);
}

TEST_CASE("phi is exact and faithful on fixtures") {
    FieldSpec F(32003);
    auto K = kron_lambda(F);
    auto bun = skew_algebra(K.alg, kron_act(K));
    auto S1 = simple_module(K.alg, 0);
    auto S2 = simple_module(K.alg, 1);
    auto P1 = proj_module(K.alg, 0);
    std::vector<FPFunctor> ts = {representable(S1), representable(S2), representable(P1),
                                 theta(make_morphism(S2, P1, hom_space(S2, P1).basis[0])),
                                 theta(identity_morphism(S1))};
    std::vector<FDModule> xbars = {pushdown_full(bun, S1), pushdown_full(bun, S2),
                                   pushdown_full(bun, P1),
                                   summand_module(pushdown_full(bun, S1), 0, 64)};
    for (auto& t : ts)
        for (auto& xb : xbars) {
            auto row = phi_exactness_at(bun, t, xb);
            CHECK(row.exact);
        }
    for (auto& t1 : ts)
        for (auto& t2 : ts) {
            auto rep = phi_faithful_on_pair(bun, t1, t2);
            CHECK(rep.injective);
        }
}

TEST_CASE("Yoneda square") {
    FieldSpec F(32003);
    auto K = kron_lambda(F);
    auto bun = skew_algebra(K.alg, kron_act(K));
    auto S1 = simple_module(K.alg, 0);
    auto S2 = simple_module(K.alg, 1);
    auto P1 = proj_module(K.alg, 0);
    std::vector<FDModule> xbars = {pushdown_full(bun, S1), pushdown_full(bun, S2),
                                   pushdown_full(bun, P1)};
    SUBCASE("zero morphism: both sides are Hom(-, F N) pointwise") {
        auto f = zero_morphism(zero_module(K.alg), P1);
        for (auto& xb : xbars) {
            auto rep = verify_yoneda_square(bun, f, xb);
            CHECK(rep.ok());
            CHECK(rep.rhs_dim == hom_space(xb, pushdown_full(bun, P1)).dim());
        }
    }
    SUBCASE("identity morphism: both sides zero") {
        auto f = identity_morphism(S1);
        for (auto& xb : xbars) {
            auto rep = verify_yoneda_square(bun, f, xb);
            CHECK(rep.ok());
            CHECK(rep.rhs_dim == 0);
        }
    }
    SUBCASE("the inclusion S2 >-> P1") {
        auto f = make_morphism(S2, P1, hom_space(S2, P1).basis[0]);
        for (auto& xb : xbars) {
            auto rep = verify_yoneda_square(bun, f, xb);
            CHECK(rep.ok());
        }
    }
}
