#include "skewcov/functor.hpp"

namespace skewcov {

EvalResult evaluate(const FPFunctor& t, const FDModule& x) {
    if (t.pres.src.alg.get() != x.alg.get())
        throw AlgebraMismatch("evaluate: module is on the wrong side");
    const FieldSpec& F = x.alg->field;
    HomBasis HM = hom_space(x, t.pres.src);
    HomBasis HN = hom_space(x, t.pres.tgt);
    EvalResult out;
    out.hom_src = HM.dim();
    out.hom_tgt = HN.dim();
    if (HN.dim() == 0) {
        out.dim = 0;
        out.rank = 0;
        out.projection = Mat(0, 0);
        return out;
    }
    // post-composition u -> u * f in hom coordinates; coker_data wants the
    // column convention (source = columns, target = rows)
    HomCoords nc(F, HN.basis);
    Mat map(HN.dim(), HM.dim());
    for (size_t k = 0; k < HM.dim(); ++k) {
        auto c = nc.coords(mat_mul(F, HM.basis[k], t.pres.map));
        for (size_t r = 0; r < HN.dim(); ++r) map.at(r, k) = c[r];
    }
    auto ck = coker_data(F, map);
    out.dim = ck.dim;
    out.projection = ck.projection;
    out.rank = HN.dim() - ck.dim;
    return out;
}

FPFunctor phi(const SkewAlgebraBundle& B, const FPFunctor& t) {
    return FPFunctor{h_pushdown(B, t.pres)};
}

std::vector<uint32_t> NatSpace::class_coords(const Mat& b) const {
    auto resid = factor_span.reduce(b.a);
    auto c = class_solver->solve(resid);
    if (!c) throw ValidationError("NatSpace: class escaped the representative span");
    return *c;
}

NatSpace nat_trans_space(const FPFunctor& t1, const FPFunctor& t2) {
    if (t1.pres.src.alg.get() != t2.pres.src.alg.get())
        throw AlgebraMismatch("nat_trans_space: different sides");
    const FieldSpec& F = t1.pres.src.alg->field;
    const FDModule& N1 = t1.pres.tgt;
    const FDModule& M2 = t2.pres.src;
    const FDModule& N2 = t2.pres.tgt;
    HHomBasis hh = hhom_space(t1.pres, t2.pres);
    const size_t w = N1.dim * N2.dim;
    NatSpace out{F, 0, {}, RowSpan(F, w), nullptr};
    // factorization subspace V = {s * f2 : s in Hom(N1, M2)}
    for (auto& s : hom_space(N1, M2).basis)
        out.factor_span.insert(mat_mul(F, s, t2.pres.map).a);
    // representatives: hhom pairs whose V-reduced second components are independent
    RowSpan classes(F, w);
    std::vector<std::vector<uint32_t>> resid_rows;
    for (auto& pr : hh.basis) {
        auto resid = out.factor_span.reduce(pr.second.a);
        if (classes.insert(resid)) {
            out.reps.push_back(pr);
            resid_rows.push_back(out.factor_span.reduce(pr.second.a));
        }
    }
    out.dim = out.reps.size();
    Mat rows(resid_rows.size(), w);
    for (size_t i = 0; i < resid_rows.size(); ++i) rows.set_row(i, resid_rows[i]);
    out.class_solver = std::make_shared<SpanSolver>(F, rows);
    return out;
}

bool functor_is_zero(const FPFunctor& t) {
    NatSpace end = nat_trans_space(t, t);
    return end.dim == 0;
}

bool right_minimal(const MorphismObject& f) {
    const FieldSpec& F = f.src.alg->field;
    if (f.src.dim == 0) return true;
    HomBasis end = hom_space(f.src, f.src);
    // K = {a : a f = 0}
    std::vector<Mat> K;
    {
        Mat cols(f.src.dim * f.tgt.dim, end.dim());
        for (size_t k = 0; k < end.dim(); ++k) {
            Mat af = mat_mul(F, end.basis[k], f.map);
            for (size_t t = 0; t < af.a.size(); ++t) cols.at(t, k) = af.a[t];
        }
        for (auto& c : kernel_basis(F, cols)) {
            Mat a(f.src.dim, f.src.dim);
            for (size_t k = 0; k < end.dim(); ++k)
                if (c[k]) a = mat_add(F, a, mat_scale(F, c[k], end.basis[k]));
            K.push_back(std::move(a));
        }
    }
    // right minimal iff K sits inside the trace-form radical of End(src)
    for (auto& k : K)
        for (auto& y : end.basis) {
            Mat ky = mat_mul(F, k, y);
            uint32_t tr = 0;
            for (size_t i = 0; i < ky.rows; ++i) tr = F.add(tr, ky.at(i, i));
            if (tr) return false;
        }
    return true;
}

NatIsoResult nat_iso(const FPFunctor& t1, const FPFunctor& t2, uint64_t seed, int budget) {
    const FieldSpec& F = t1.pres.src.alg->field;
    NatIsoResult res;
    NatSpace n12 = nat_trans_space(t1, t2);
    NatSpace n21 = nat_trans_space(t2, t1);
    NatSpace e1 = nat_trans_space(t1, t1);
    NatSpace e2 = nat_trans_space(t2, t2);
    if (e1.dim == 0 || e2.dim == 0) {
        bool z1 = e1.dim == 0, z2 = e2.dim == 0;
        res.kind = (z1 && z2) ? NatIsoResult::Iso : NatIsoResult::NonIso;
        res.reason = "zero functor";
        return res;
    }
    if (n12.dim != n21.dim) {
        res.kind = NatIsoResult::NonIso;
        res.reason = "asymmetric Nat dimensions";
        return res;
    }
    if (n12.dim == 0) {
        res.kind = NatIsoResult::NonIso;
        res.reason = "no nonzero natural transformations";
        return res;
    }
    auto id1 = e1.class_coords(Mat::identity(t1.pres.tgt.dim));
    auto id2 = e2.class_coords(Mat::identity(t2.pres.tgt.dim));
    auto try_nu = [&](const std::pair<Mat, Mat>& nu) -> bool {
        // solve linearly for mu with [nu mu] = [id1] and [mu nu] = [id2]
        const size_t s = n21.dim;
        Mat sys(e1.dim + e2.dim, s);
        for (size_t j = 0; j < s; ++j) {
            Mat b1 = mat_mul(F, nu.second, n21.reps[j].second);   // nu then mu
            auto c1 = e1.class_coords(b1);
            Mat b2 = mat_mul(F, n21.reps[j].second, nu.second);   // mu then nu
            auto c2 = e2.class_coords(b2);
            for (size_t r = 0; r < e1.dim; ++r) sys.at(r, j) = c1[r];
            for (size_t r = 0; r < e2.dim; ++r) sys.at(e1.dim + r, j) = c2[r];
        }
        // solvability of sys * u = rhs via the transpose in row convention
        Mat aug(e1.dim + e2.dim, s + 1);
        for (size_t r = 0; r < e1.dim + e2.dim; ++r) {
            for (size_t j = 0; j < s; ++j) aug.at(r, j) = sys.at(r, j);
            aug.at(r, s) = r < e1.dim ? id1[r] : id2[r - e1.dim];
        }
        return rank_of(F, sys) == rank_of(F, aug);
    };
    for (auto& nu : n12.reps)
        if (try_nu(nu)) {
            res.kind = NatIsoResult::Iso;
            return res;
        }
    Rng rng(seed);
    for (int t = 0; t < budget; ++t) {
        std::pair<Mat, Mat> nu{Mat(t1.pres.src.dim, t2.pres.src.dim),
                               Mat(t1.pres.tgt.dim, t2.pres.tgt.dim)};
        for (auto& [a, b] : n12.reps) {
            uint32_t c = rng.below(F.p);
            nu.first = mat_add(F, nu.first, mat_scale(F, c, a));
            nu.second = mat_add(F, nu.second, mat_scale(F, c, b));
        }
        if (try_nu(nu)) {
            res.kind = NatIsoResult::Iso;
            return res;
        }
    }
    res.kind = NatIsoResult::Inconclusive;
    res.reason = "no invertible class found within budget";
    return res;
}

FPFunctor functor_twist(const AlgebraAction& act, uint32_t g, const FPFunctor& t) {
    return FPFunctor{h_twist(act, g, t.pres)};
}

StabilizerResult functor_stabilizer(const AlgebraAction& act, const FPFunctor& t,
                                    uint64_t seed, int budget) {
    StabilizerResult out;
    out.in_stab.assign(act.group.size(), false);
    for (uint32_t g = 0; g < act.group.size(); ++g) {
        if (g == act.group.id()) {
            out.in_stab[g] = true;
            continue;
        }
        NatIsoResult iso = nat_iso(functor_twist(act, g, t), t, seed, budget);
        if (iso.kind == NatIsoResult::Iso)
            out.in_stab[g] = true;
        else if (iso.kind == NatIsoResult::Inconclusive)
            out.inconclusive = true;
    }
    return out;
}

GcfReport verify_gcf(const SkewAlgebraBundle& B, const FPFunctor& t1, const FPFunctor& t2,
                     uint64_t seed, int budget) {
    GcfReport rep;
    const size_t n = B.act.group.size();
    StabilizerResult s1 = functor_stabilizer(B.act, t1, seed, budget);
    StabilizerResult s2 = functor_stabilizer(B.act, t2, seed, budget);
    if (s1.inconclusive || s2.inconclusive) {
        rep.stabilizer_inconclusive = true;
        return rep;
    }
    bool f1 = s1.full(n), f2 = s2.full(n);
    rep.gcf_case = f1 ? (f2 ? 4 : 2) : (f2 ? 1 : 3);

    // Lemma sfm: G_T = G iff G_{MN} = G, via the presentation module pair.
    // The lemma presumes a right-minimal presentation; a zero functor is
    // compared against its minimal presentation 0 -> 0 (stabilizer G).
    auto sfm_one = [&](const FPFunctor& t, bool stab_full) -> int {
        if (functor_is_zero(t)) return stab_full ? 1 : 0;
        if (!right_minimal(t.pres)) return -1;
        StabilizerResult sm = module_stabilizer(B.act, t.pres.src, seed, budget);
        StabilizerResult sn = module_stabilizer(B.act, t.pres.tgt, seed, budget);
        if (sm.inconclusive || sn.inconclusive) {
            rep.stabilizer_inconclusive = true;
            return -1;
        }
        return (sm.full(n) && sn.full(n)) == stab_full ? 1 : 0;
    };
    int a1 = sfm_one(t1, f1), a2 = sfm_one(t2, f2);
    rep.sfm_agrees = (a1 == -1 || a2 == -1) ? -1 : (a1 && a2 ? 1 : 0);

    rep.lhs = nat_trans_space(phi(B, t1), phi(B, t2)).dim;
    rep.pass = true;
    if (!f1) {
        size_t v = 0;
        for (uint32_t g = 0; g < n; ++g)
            v += nat_trans_space(functor_twist(B.act, g, t1), t2).dim;
        rep.rhs.emplace_back("sum_g Nat(^g T1, T2)", v);
        rep.pass = rep.pass && rep.lhs == v;
    }
    if (!f2) {
        size_t v = 0;
        for (uint32_t g = 0; g < n; ++g)
            v += nat_trans_space(t1, functor_twist(B.act, g, t2)).dim;
        rep.rhs.emplace_back("sum_g Nat(T1, ^g T2)", v);
        rep.pass = rep.pass && rep.lhs == v;
    }
    if (f1 && f2) {
        size_t v = n * nat_trans_space(t1, t2).dim;
        rep.rhs.emplace_back("|G| Nat(T1, T2)", v);
        rep.pass = rep.lhs == v;
    }
    return rep;
}

PhiPointReport phi_pointwise(const SkewAlgebraBundle& B, const FPFunctor& t, const FDModule& xbar,
                             const std::vector<FDModule>& lambda_catalog, uint64_t seed, int budget) {
    const FieldSpec& F = B.full->field;
    const size_t n = B.act.group.size();
    PhiPointReport rep;
    rep.v_phi = evaluate(phi(B, t), xbar).dim;
    rep.v_primary = evaluate(t, restrict_module(B, xbar)).dim;
    if (xbar.dim == 0) {
        // the zero module is the pushdown of the zero module
        rep.case_kind = 1;
        rep.v_case = 0;
        rep.pass = rep.v_phi == 0 && rep.v_primary == 0;
        return rep;
    }

    for (size_t mi = 0; mi < lambda_catalog.size() && rep.case_kind == 0; ++mi) {
        const FDModule& M = lambda_catalog[mi];
        if (M.dim == 0) continue;
        FDModule FM = pushdown_full(B, M);
        IsoResult iso = modules_isomorphic(xbar, FM, seed, budget);
        if (iso.kind == IsoResult::Iso) {
            rep.case_kind = 1;
            rep.catalog_index = mi;
            for (uint32_t g = 0; g < n; ++g)
                rep.v_case += evaluate(t, twist(B.act, g, M)).dim;
            break;
        }
        if (iso.kind == IsoResult::Inconclusive) rep.inconclusive = true;
        if (xbar.dim == 0 || xbar.dim >= FM.dim) continue;
        // proper-summand certificate: u v = id_xbar with u: xbar -> FM
        HomBasis uv = hom_space(xbar, FM), vu = hom_space(FM, xbar);
        if (uv.dim() == 0 || vu.dim() == 0) continue;
        Rng rng(seed ^ (0x9e37u + mi));
        bool found = false;
        for (int tAttempt = 0; tAttempt < budget && !found; ++tAttempt) {
            Mat u = random_combination(F, uv.basis, rng);
            Mat v = random_combination(F, vu.basis, rng);
            Mat w = mat_mul(F, u, v);
            if (mat_inverse(F, w)) found = true;
        }
        if (!found) continue;
        // the paper pins F^lambda(xbar) = M in this case; verify by witness
        IsoResult ri = modules_isomorphic(restrict_module(B, xbar), M, seed, budget);
        if (ri.kind != IsoResult::Iso) {
            if (ri.kind == IsoResult::Inconclusive) rep.inconclusive = true;
            continue;
        }
        rep.case_kind = 2;
        rep.catalog_index = mi;
        rep.v_case = evaluate(t, M).dim;
    }
    if (rep.case_kind == 0) {
        rep.inconclusive = true;
        return rep;
    }
    rep.pass = rep.v_phi == rep.v_primary && rep.v_phi == rep.v_case;
    return rep;
}

ExactnessRow phi_exactness_at(const SkewAlgebraBundle& B, const FPFunctor& t, const FDModule& xbar) {
    ExactnessRow row;
    EvalResult ev = evaluate(phi(B, t), xbar);
    row.hom_m = ev.hom_src;
    row.hom_n = ev.hom_tgt;
    row.rank = ev.rank;
    row.value = evaluate(t, restrict_module(B, xbar)).dim;
    row.exact = row.value + row.rank == row.hom_n;
    return row;
}

FaithfulReport phi_faithful_on_pair(const SkewAlgebraBundle& B, const FPFunctor& t1,
                                    const FPFunctor& t2) {
    const FieldSpec& F = B.full->field;
    FaithfulReport rep;
    NatSpace nat = nat_trans_space(t1, t2);
    rep.nat_dim = nat.dim;
    if (nat.dim == 0) {
        rep.injective = true;
        return rep;
    }
    NatSpace pushed = nat_trans_space(phi(B, t1), phi(B, t2));
    Mat images(nat.dim, pushed.dim);
    for (size_t k = 0; k < nat.dim; ++k) {
        Mat pb = pushdown_hom(B, nat.reps[k].second);
        images.set_row(k, pushed.class_coords(pb));
    }
    rep.image_rank = rank_of(F, images);
    rep.injective = rep.image_rank == rep.nat_dim;
    return rep;
}

YonedaReport verify_yoneda_square(const SkewAlgebraBundle& B, const MorphismObject& f,
                                  const FDModule& xbar) {
    const FieldSpec& F = B.full->field;
    const size_t n = B.act.group.size();
    YonedaReport rep;
    FPFunctor t = theta(f);
    FDModule res = restrict_module(B, xbar);
    rep.lhs_dim = evaluate(t, res).dim;
    rep.rhs_dim = evaluate(phi(B, t), xbar).dim;
    rep.dims_equal = rep.lhs_dim == rep.rhs_dim;

    // beta_M : Hom_Lambda(F^ xbar, M) -> Hom_skew(xbar, F M),
    // beta(u) has block column at g^{-1} equal to rho_xbar(1 (x) g) u
    std::vector<Mat> U(n);
    for (uint32_t g = 0; g < n; ++g) {
        std::vector<uint32_t> one_g(B.full->dim(), 0);
        for (size_t i = 0; i < B.lambda->dim(); ++i)
            one_g[B.full_index(i, g)] = B.lambda->unit[i];
        U[g] = xbar.act_of(one_g);
    }
    auto beta = [&](const Mat& u, size_t dM) {
        Mat out(xbar.dim, dM * n);
        for (uint32_t g = 0; g < n; ++g) {
            Mat blk = mat_mul(F, U[g], u);
            uint32_t gi = B.act.group.inv(g);
            for (size_t i = 0; i < xbar.dim; ++i)
                for (size_t j = 0; j < dM; ++j) out.at(i, gi * dM + j) = blk.at(i, j);
        }
        return out;
    };
    auto transport_iso = [&](const FDModule& M) -> std::optional<std::vector<Mat>> {
        HomBasis lhs = hom_space(res, M);
        HomBasis rhs = hom_space(xbar, pushdown_full(B, M));
        if (lhs.dim() != rhs.dim()) return std::nullopt;
        if (lhs.dim() == 0) return std::vector<Mat>{};
        HomCoords rc(F, rhs.basis);
        Mat coords(lhs.dim(), rhs.dim());
        std::vector<Mat> images;
        for (size_t k = 0; k < lhs.dim(); ++k) {
            Mat img = beta(lhs.basis[k], M.dim);
            images.push_back(img);
            try {
                coords.set_row(k, rc.coords(img));
            } catch (const ValidationError&) {
                return std::nullopt;   // beta(u) is not skew-linear: fail loudly
            }
        }
        if (rank_of(F, coords) != lhs.dim()) return std::nullopt;
        return images;
    };
    auto bm = transport_iso(f.src);
    auto bn = transport_iso(f.tgt);
    rep.beta_iso = bm.has_value() && bn.has_value();
    if (!rep.beta_iso) return rep;
    // the square: beta(u . f) = beta(u) . F(f) for every basis u
    rep.squares_commute = true;
    HomBasis lhs = hom_space(res, f.src);
    Mat pf = pushdown_hom(B, f.map);
    for (size_t k = 0; k < lhs.dim(); ++k) {
        Mat left = beta(mat_mul(F, lhs.basis[k], f.map), f.tgt.dim);
        Mat right = mat_mul(F, (*bm)[k], pf);
        if (!(left == right)) rep.squares_commute = false;
    }
    return rep;
}

} // namespace skewcov
