#include "skewcov/morphism.hpp"

namespace skewcov {

MorphismObject make_morphism(FDModule src, FDModule tgt, Mat map) {
    if (src.alg.get() != tgt.alg.get()) throw AlgebraMismatch("morphism: different algebras");
    const FieldSpec& F = src.alg->field;
    if (map.rows != src.dim || map.cols != tgt.dim)
        throw NotAHomomorphism("morphism: map shape mismatch");
    for (size_t b = 0; b < src.alg->dim(); ++b)
        if (!(mat_mul(F, src.action[b], map) == mat_mul(F, map, tgt.action[b])))
            throw NotAHomomorphism("morphism: map does not intertwine at " +
                                   src.alg->basis_labels[b]);
    return MorphismObject{std::move(src), std::move(tgt), std::move(map)};
}

MorphismObject identity_morphism(const FDModule& m) {
    return MorphismObject{m, m, Mat::identity(m.dim)};
}

MorphismObject zero_morphism(const FDModule& m, const FDModule& n) {
    if (m.alg.get() != n.alg.get()) throw AlgebraMismatch("zero_morphism: different algebras");
    return MorphismObject{m, n, Mat(m.dim, n.dim)};
}

MorphismObject h_direct_sum(const MorphismObject& a, const MorphismObject& b) {
    FDModule src = direct_sum(a.src, b.src);
    FDModule tgt = direct_sum(a.tgt, b.tgt);
    Mat map(src.dim, tgt.dim);
    for (size_t i = 0; i < a.src.dim; ++i)
        for (size_t j = 0; j < a.tgt.dim; ++j) map.at(i, j) = a.map.at(i, j);
    for (size_t i = 0; i < b.src.dim; ++i)
        for (size_t j = 0; j < b.tgt.dim; ++j)
            map.at(a.src.dim + i, a.tgt.dim + j) = b.map.at(i, j);
    return MorphismObject{std::move(src), std::move(tgt), std::move(map)};
}

HHomBasis hhom_space(const MorphismObject& f, const MorphismObject& h) {
    if (f.src.alg.get() != h.src.alg.get()) throw AlgebraMismatch("hhom_space: different algebras");
    const FieldSpec& F = f.src.alg->field;
    HomBasis HA = hom_space(f.src, h.src);
    HomBasis HB = hom_space(f.tgt, h.tgt);
    HHomBasis out;
    const size_t sa = HA.dim(), sb = HB.dim();
    if (sa + sb == 0) return out;
    // square constraint f b = a h, linear in the hom coordinates (u, v)
    const size_t w = f.src.dim * h.tgt.dim;
    Mat cols(w, sa + sb);
    for (size_t i = 0; i < sa; ++i) {
        Mat ah = mat_mul(F, HA.basis[i], h.map);
        for (size_t t = 0; t < w; ++t) cols.at(t, i) = F.neg(ah.a[t]);
    }
    for (size_t j = 0; j < sb; ++j) {
        Mat fb = mat_mul(F, f.map, HB.basis[j]);
        for (size_t t = 0; t < w; ++t) cols.at(t, sa + j) = fb.a[t];
    }
    for (auto& c : kernel_basis(F, cols)) {
        Mat a(f.src.dim, h.src.dim), b(f.tgt.dim, h.tgt.dim);
        for (size_t i = 0; i < sa; ++i)
            if (c[i]) a = mat_add(F, a, mat_scale(F, c[i], HA.basis[i]));
        for (size_t j = 0; j < sb; ++j)
            if (c[sa + j]) b = mat_add(F, b, mat_scale(F, c[sa + j], HB.basis[j]));
        out.basis.emplace_back(std::move(a), std::move(b));
    }
    return out;
}

MorphismObject h_pushdown(const SkewAlgebraBundle& B, const MorphismObject& f) {
    return make_morphism(pushdown_full(B, f.src), pushdown_full(B, f.tgt),
                         pushdown_hom(B, f.map));
}

MorphismObject h_twist(const AlgebraAction& act, uint32_t g, const MorphismObject& f) {
    // the carrier map is unchanged; only the actions twist
    return make_morphism(twist(act, g, f.src), twist(act, g, f.tgt), f.map);
}

MorphismObject h_restrict(const SkewAlgebraBundle& B, const MorphismObject& fbar) {
    return make_morphism(restrict_module(B, fbar.src), restrict_module(B, fbar.tgt), fbar.map);
}

HIsoResult h_iso(const MorphismObject& f, const MorphismObject& h, uint64_t seed, int budget) {
    const FieldSpec& F = f.src.alg->field;
    HIsoResult res;
    if (f.src.dimension_vector() != h.src.dimension_vector() ||
        f.tgt.dimension_vector() != h.tgt.dimension_vector()) {
        res.kind = HIsoResult::NonIso;
        res.reason = "component dimension vectors differ";
        return res;
    }
    HHomBasis fw = hhom_space(f, h), bw = hhom_space(h, f);
    if (fw.dim() != bw.dim()) {
        res.kind = HIsoResult::NonIso;
        res.reason = "asymmetric hhom dimensions";
        return res;
    }
    if (f.src.dim == 0 && f.tgt.dim == 0) {
        res.kind = HIsoResult::Iso;
        res.witness_a = Mat(0, 0);
        res.witness_b = Mat(0, 0);
        return res;
    }
    if (fw.dim() == 0) {
        res.kind = HIsoResult::NonIso;
        res.reason = "no nonzero H-morphisms";
        return res;
    }
    auto invertible_pair = [&](const Mat& a, const Mat& b) {
        return (a.rows == 0 || mat_inverse(F, a).has_value()) &&
               (b.rows == 0 || mat_inverse(F, b).has_value());
    };
    for (auto& [a, b] : fw.basis)
        if (invertible_pair(a, b)) {
            res.kind = HIsoResult::Iso;
            res.witness_a = a;
            res.witness_b = b;
            return res;
        }
    Rng rng(seed);
    for (int t = 0; t < budget; ++t) {
        Mat a(f.src.dim, h.src.dim), b(f.tgt.dim, h.tgt.dim);
        for (auto& [pa, pb] : fw.basis) {
            uint32_t c = rng.below(F.p);
            a = mat_add(F, a, mat_scale(F, c, pa));
            b = mat_add(F, b, mat_scale(F, c, pb));
        }
        if (invertible_pair(a, b)) {
            res.kind = HIsoResult::Iso;
            res.witness_a = a;
            res.witness_b = b;
            return res;
        }
    }
    res.kind = HIsoResult::Inconclusive;
    res.reason = "no invertible pair found within budget";
    return res;
}

IndecResult h_indecomposable(const MorphismObject& f, uint64_t seed, int budget) {
    if (f.src.dim == 0 && f.tgt.dim == 0)
        throw ValidationError("h_indecomposable: zero object");
    const FieldSpec& F = f.src.alg->field;
    HHomBasis end = hhom_space(f, f);
    IndecResult res;
    if (end.dim() == 1) {
        res.kind = IndecResult::Indecomposable;
        return res;
    }
    // embed End_H(f) as block diagonal matrices
    const size_t n = f.src.dim + f.tgt.dim;
    std::vector<Mat> basis;
    for (auto& [a, b] : end.basis) {
        Mat m(n, n);
        for (size_t i = 0; i < a.rows; ++i)
            for (size_t j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
        for (size_t i = 0; i < b.rows; ++i)
            for (size_t j = 0; j < b.cols; ++j) m.at(f.src.dim + i, f.src.dim + j) = b.at(i, j);
        basis.push_back(std::move(m));
    }
    SplitOutcome so = find_split(F, basis, seed, budget);
    switch (so.kind) {
        case SplitOutcome::Split:
            res.kind = IndecResult::SplitWitness;
            res.witness = so.idempotent;
            break;
        case SplitOutcome::Local:
            res.kind = IndecResult::Indecomposable;
            res.end_rad = so.rad_basis;
            break;
        default:
            res.kind = IndecResult::Inconclusive;
    }
    return res;
}

StabilizerResult h_stabilizer(const AlgebraAction& act, const MorphismObject& f,
                              uint64_t seed, int budget) {
    StabilizerResult out;
    out.in_stab.assign(act.group.size(), false);
    for (uint32_t g = 0; g < act.group.size(); ++g) {
        if (g == act.group.id()) {
            out.in_stab[g] = true;
            continue;
        }
        HIsoResult iso = h_iso(h_twist(act, g, f), f, seed, budget);
        if (iso.kind == HIsoResult::Iso)
            out.in_stab[g] = true;
        else if (iso.kind == HIsoResult::Inconclusive)
            out.inconclusive = true;
    }
    return out;
}

GstabReport verify_gstab(const SkewAlgebraBundle& B, const MorphismObject& f,
                         uint64_t seed, int budget) {
    GstabReport rep;
    const size_t n = B.act.group.size();
    MorphismObject pf = h_pushdown(B, f);
    rep.part1 = true;
    for (uint32_t g = 0; g < n; ++g) {
        HIsoResult iso = h_iso(h_pushdown(B, h_twist(B.act, g, f)), pf, seed, budget);
        if (iso.kind == HIsoResult::Inconclusive) rep.inconclusive = true;
        if (iso.kind != HIsoResult::Iso) rep.part1 = false;
    }
    // restrict o pushdown against the direct sum of all twists
    MorphismObject res = h_restrict(B, pf);
    MorphismObject sum = h_twist(B.act, 0, f);
    for (uint32_t g = 1; g < n; ++g) sum = h_direct_sum(sum, h_twist(B.act, g, f));
    HIsoResult iso2 = h_iso(res, sum, seed, budget);
    rep.part2 = iso2.kind == HIsoResult::Iso;
    if (iso2.kind == HIsoResult::Inconclusive) rep.inconclusive = true;
    return rep;
}

GstabPart3 verify_gstab_part3(const SkewAlgebraBundle& B, const MorphismObject& f1,
                              const MorphismObject& f2, uint64_t seed, int budget) {
    GstabPart3 out;
    HIsoResult pushed = h_iso(h_pushdown(B, f1), h_pushdown(B, f2), seed, budget);
    if (pushed.kind == HIsoResult::Inconclusive) {
        out.inconclusive = true;
        return out;
    }
    out.applicable = pushed.kind == HIsoResult::Iso;
    if (!out.applicable) return out;
    for (uint32_t g = 0; g < B.act.group.size(); ++g) {
        HIsoResult iso = h_iso(f1, h_twist(B.act, g, f2), seed, budget);
        if (iso.kind == HIsoResult::Iso) {
            out.pass = true;
            out.witness_g = g;
            return out;
        }
        if (iso.kind == HIsoResult::Inconclusive) out.inconclusive = true;
    }
    return out;
}

HgcmReport verify_hgcm(const SkewAlgebraBundle& B, const MorphismObject& f,
                       const MorphismObject& h, uint64_t seed, int budget) {
    HgcmReport rep;
    const size_t n = B.act.group.size();
    StabilizerResult sf = h_stabilizer(B.act, f, seed, budget);
    StabilizerResult sh = h_stabilizer(B.act, h, seed, budget);
    if (sf.inconclusive || sh.inconclusive) {
        rep.stabilizer_inconclusive = true;
        return rep;
    }
    bool ff = sf.full(n), fh = sh.full(n);
    rep.hgcm_case = ff ? (fh ? 4 : 2) : (fh ? 1 : 3);
    rep.lhs = hhom_space(h_pushdown(B, f), h_pushdown(B, h)).dim();
    rep.pass = true;
    if (!ff) {
        size_t v = 0;
        for (uint32_t g = 0; g < n; ++g) v += hhom_space(h_twist(B.act, g, f), h).dim();
        rep.rhs.emplace_back("sum_g H(^g f, h)", v);
        rep.pass = rep.pass && rep.lhs == v;
    }
    if (!fh) {
        size_t v = 0;
        for (uint32_t g = 0; g < n; ++g) v += hhom_space(f, h_twist(B.act, g, h)).dim();
        rep.rhs.emplace_back("sum_g H(f, ^g h)", v);
        rep.pass = rep.pass && rep.lhs == v;
    }
    if (ff && fh) {
        size_t v = n * hhom_space(f, h).dim();
        rep.rhs.emplace_back("|G| H(f, h)", v);
        rep.pass = rep.lhs == v;
    }
    return rep;
}

HadjReport h_adjunction_check(const SkewAlgebraBundle& B, const MorphismObject& f,
                              const MorphismObject& mbar, uint64_t seed) {
    const FieldSpec& F = B.full->field;
    const size_t n = B.act.group.size();
    HadjReport rep;
    MorphismObject pf = h_pushdown(B, f);
    MorphismObject rm = h_restrict(B, mbar);
    HHomBasis lhs = hhom_space(pf, mbar);
    HHomBasis rhs = hhom_space(f, rm);
    rep.lhs_dim = lhs.dim();
    rep.rhs_dim = rhs.dim();
    rep.dims_equal = rep.lhs_dim == rep.rhs_dim;
    rep.mono_pair = f.is_mono(F) && mbar.is_mono(F);
    if (rep.mono_pair)
        rep.mono_preserved = pf.is_mono(F) && rm.is_mono(F);
    if (!rep.dims_equal) {
        rep.note = "hhom dimensions differ";
        return rep;
    }
    if (lhs.dim() == 0) {
        rep.mutually_inverse = rep.natural = true;
        return rep;
    }
    // componentwise transport through the module-level unit maps
    Mat incl_x(f.src.dim, pf.src.dim), incl_y(f.tgt.dim, pf.tgt.dim);
    for (size_t i = 0; i < f.src.dim; ++i) incl_x.at(i, i) = 1;
    for (size_t i = 0; i < f.tgt.dim; ++i) incl_y.at(i, i) = 1;
    std::vector<Mat> Um(n), Un(n);
    for (uint32_t g = 0; g < n; ++g) {
        std::vector<uint32_t> one_g(B.full->dim(), 0);
        for (size_t i = 0; i < B.lambda->dim(); ++i)
            one_g[B.full_index(i, g)] = B.lambda->unit[i];
        Um[g] = mbar.src.act_of(one_g);
        Un[g] = mbar.tgt.act_of(one_g);
    }
    auto zeta = [&](const std::pair<Mat, Mat>& t) {
        return std::pair<Mat, Mat>{mat_mul(F, incl_x, t.first), mat_mul(F, incl_y, t.second)};
    };
    auto zeta_inv = [&](const std::pair<Mat, Mat>& s) {
        Mat Ta(pf.src.dim, mbar.src.dim), Tb(pf.tgt.dim, mbar.tgt.dim);
        for (uint32_t g = 0; g < n; ++g) {
            Mat blka = mat_mul(F, s.first, Um[g]);
            Mat blkb = mat_mul(F, s.second, Un[g]);
            for (size_t i = 0; i < f.src.dim; ++i)
                for (size_t j = 0; j < mbar.src.dim; ++j) Ta.at(g * f.src.dim + i, j) = blka.at(i, j);
            for (size_t i = 0; i < f.tgt.dim; ++i)
                for (size_t j = 0; j < mbar.tgt.dim; ++j) Tb.at(g * f.tgt.dim + i, j) = blkb.at(i, j);
        }
        return std::pair<Mat, Mat>{std::move(Ta), std::move(Tb)};
    };
    // coordinates in the pair spaces
    auto flatten = [&](const std::pair<Mat, Mat>& t) {
        std::vector<uint32_t> v;
        v.reserve(t.first.a.size() + t.second.a.size());
        v.insert(v.end(), t.first.a.begin(), t.first.a.end());
        v.insert(v.end(), t.second.a.begin(), t.second.a.end());
        return v;
    };
    auto make_solver = [&](const HHomBasis& hb) {
        size_t w = flatten(hb.basis[0]).size();
        Mat rows(hb.dim(), w);
        for (size_t i = 0; i < hb.dim(); ++i) rows.set_row(i, flatten(hb.basis[i]));
        return SpanSolver(F, rows);
    };
    SpanSolver ls = make_solver(lhs), rs = make_solver(rhs);
    const size_t s = lhs.dim();
    Mat zmat(s, s), zinv(s, s);
    for (size_t k = 0; k < s; ++k) {
        auto zc = rs.solve(flatten(zeta(lhs.basis[k])));
        auto ic = ls.solve(flatten(zeta_inv(rhs.basis[k])));
        if (!zc || !ic) {
            rep.note = "transported pair left the hhom span";
            return rep;
        }
        zmat.set_row(k, *zc);
        zinv.set_row(k, *ic);
    }
    rep.mutually_inverse = mat_mul(F, zmat, zinv) == Mat::identity(s) &&
                           mat_mul(F, zinv, zmat) == Mat::identity(s);
    // naturality against seeded H-endomorphisms on both sides
    HHomBasis endf = hhom_space(f, f), endm = hhom_space(mbar, mbar);
    Rng rng(seed);
    rep.natural = true;
    for (int t = 0; t < 5 && rep.natural; ++t) {
        std::pair<Mat, Mat> phi{Mat(f.src.dim, f.src.dim), Mat(f.tgt.dim, f.tgt.dim)};
        for (auto& [a, b] : endf.basis) {
            uint32_t c = rng.below(F.p);
            phi.first = mat_add(F, phi.first, mat_scale(F, c, a));
            phi.second = mat_add(F, phi.second, mat_scale(F, c, b));
        }
        std::pair<Mat, Mat> psi{Mat(mbar.src.dim, mbar.src.dim), Mat(mbar.tgt.dim, mbar.tgt.dim)};
        for (auto& [a, b] : endm.basis) {
            uint32_t c = rng.below(F.p);
            psi.first = mat_add(F, psi.first, mat_scale(F, c, a));
            psi.second = mat_add(F, psi.second, mat_scale(F, c, b));
        }
        Mat fphi_a = pushdown_hom(B, phi.first), fphi_b = pushdown_hom(B, phi.second);
        for (auto& T : lhs.basis) {
            std::pair<Mat, Mat> left{mat_mul(F, fphi_a, T.first), mat_mul(F, fphi_b, T.second)};
            auto zl = zeta(left);
            std::pair<Mat, Mat> right{mat_mul(F, phi.first, zeta(T).first),
                                      mat_mul(F, phi.second, zeta(T).second)};
            if (!(zl.first == right.first && zl.second == right.second)) rep.natural = false;
            std::pair<Mat, Mat> tp{mat_mul(F, T.first, psi.first), mat_mul(F, T.second, psi.second)};
            auto zt = zeta(tp);
            std::pair<Mat, Mat> zr{mat_mul(F, zeta(T).first, psi.first),
                                   mat_mul(F, zeta(T).second, psi.second)};
            if (!(zt.first == zr.first && zt.second == zr.second)) rep.natural = false;
        }
    }
    return rep;
}

} // namespace skewcov
