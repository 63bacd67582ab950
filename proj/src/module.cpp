#include "skewcov/module.hpp"

#include <algorithm>

namespace skewcov {

Mat FDModule::act_of(const std::vector<uint32_t>& elem) const {
    const FieldSpec& F = alg->field;
    Mat r(dim, dim);
    for (size_t k = 0; k < elem.size(); ++k)
        if (elem[k]) r = mat_add(F, r, mat_scale(F, elem[k], action[k]));
    return r;
}

std::vector<size_t> FDModule::dimension_vector() const {
    std::vector<size_t> dv;
    for (auto& e : alg->idempotents) dv.push_back(rank_of(alg->field, act_of(e)));
    return dv;
}

FDModule make_module(AlgebraPtr alg, size_t dim, std::vector<Mat> action) {
    const StructureConstantAlgebra& A = *alg;
    const FieldSpec& F = A.field;
    const size_t d = A.dim();
    if (action.size() != d) throw ValidationError("module: one action matrix per basis element");
    for (auto& m : action)
        if (m.rows != dim || m.cols != dim) throw ValidationError("module: action matrix shape");
    FDModule M{std::move(alg), dim, std::move(action)};
    if (M.act_of(A.unit) != Mat::identity(dim))
        throw ValidationError("module: unit does not act as the identity");
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            Mat lhs = mat_mul(F, M.action[i], M.action[j]);
            Mat rhs(dim, dim);
            for (auto [k, c] : A.table[i][j]) rhs = mat_add(F, rhs, mat_scale(F, c, M.action[k]));
            if (!(lhs == rhs))
                throw ValidationError("module: action is not multiplicative at pair (" +
                                      A.basis_labels[i] + "," + A.basis_labels[j] + ")");
        }
    size_t total = 0;
    for (size_t dv : M.dimension_vector()) total += dv;
    if (total != dim) throw ValidationError("module: dimension vector does not sum to total_dim");
    return M;
}

FDModule zero_module(AlgebraPtr alg) {
    std::vector<Mat> act(alg->dim(), Mat(0, 0));
    return FDModule{std::move(alg), 0, std::move(act)};
}

FDModule direct_sum(const FDModule& a, const FDModule& b) {
    if (a.alg.get() != b.alg.get()) throw AlgebraMismatch("direct_sum: different algebras");
    const size_t d = a.alg->dim(), n = a.dim + b.dim;
    std::vector<Mat> act(d, Mat(n, n));
    for (size_t k = 0; k < d; ++k) {
        for (size_t i = 0; i < a.dim; ++i)
            for (size_t j = 0; j < a.dim; ++j) act[k].at(i, j) = a.action[k].at(i, j);
        for (size_t i = 0; i < b.dim; ++i)
            for (size_t j = 0; j < b.dim; ++j) act[k].at(a.dim + i, a.dim + j) = b.action[k].at(i, j);
    }
    return FDModule{a.alg, n, std::move(act)};
}

FDModule proj_module(const AlgebraPtr& alg, size_t idem) {
    const StructureConstantAlgebra& A = *alg;
    const FieldSpec& F = A.field;
    const size_t d = A.dim();
    if (idem >= A.idempotents.size()) throw ValidationError("proj_module: no such idempotent");
    // carrier = e*A inside the regular module
    RowSpan span(F, d);
    std::vector<std::vector<uint32_t>> rows;
    for (size_t b = 0; b < d; ++b) {
        std::vector<uint32_t> eb(d, 0);
        eb[b] = 1;
        auto v = A.mul(A.idempotents[idem], eb);
        if (span.insert(v)) rows.push_back(v);
    }
    const size_t k = rows.size();
    Mat basis(k, d);
    for (size_t i = 0; i < k; ++i) basis.set_row(i, rows[i]);
    SpanSolver solver(F, basis);
    std::vector<Mat> act(d, Mat(k, k));
    for (size_t b = 0; b < d; ++b) {
        std::vector<uint32_t> eb(d, 0);
        eb[b] = 1;
        for (size_t i = 0; i < k; ++i) {
            auto c = solver.solve(A.mul(rows[i], eb));
            if (!c) throw ValidationError("proj_module: e*A is not right-stable");
            act[b].set_row(i, *c);
        }
    }
    return make_module(alg, k, std::move(act));
}

FDModule simple_module(const AlgebraPtr& alg, size_t idem) {
    const StructureConstantAlgebra& A = *alg;
    const FieldSpec& F = A.field;
    const size_t d = A.dim();
    if (idem >= A.idempotents.size()) throw ValidationError("simple_module: no such idempotent");
    // e*A / e*rad, computed in ambient coordinates
    RowSpan sub(F, d);   // e * rad
    for (auto& r : A.radical) sub.insert(A.mul(A.idempotents[idem], r));
    RowSpan all(F, d);
    for (auto& r : sub.rows) all.insert(r);
    std::vector<std::vector<uint32_t>> comp;   // completion of e*rad inside e*A
    for (size_t b = 0; b < d; ++b) {
        std::vector<uint32_t> eb(d, 0);
        eb[b] = 1;
        auto v = A.mul(A.idempotents[idem], eb);
        if (all.insert(v)) comp.push_back(v);
    }
    const size_t k = comp.size();
    // coordinates: reduce by e*rad first, then solve in the completion span
    Mat cbasis(k, d);
    for (size_t i = 0; i < k; ++i) cbasis.set_row(i, sub.reduce(comp[i]));
    SpanSolver solver(F, cbasis);
    std::vector<Mat> act(d, Mat(k, k));
    for (size_t b = 0; b < d; ++b) {
        std::vector<uint32_t> eb(d, 0);
        eb[b] = 1;
        for (size_t i = 0; i < k; ++i) {
            auto c = solver.solve(sub.reduce(A.mul(comp[i], eb)));
            if (!c) throw ValidationError("simple_module: quotient action escaped");
            act[b].set_row(i, *c);
        }
    }
    return make_module(alg, k, std::move(act));
}

HomBasis hom_space(const FDModule& m, const FDModule& n) {
    if (m.alg.get() != n.alg.get()) throw AlgebraMismatch("hom_space: different algebras");
    const FieldSpec& F = m.alg->field;
    const size_t dm = m.dim, dn = n.dim, w = dm * dn;
    HomBasis out;
    out.src_dim = dm;
    out.tgt_dim = dn;
    if (w == 0) {
        if (dm == 0 || dn == 0) return out;   // only the zero map
    }
    // start from the standard basis of all matrices, intersect kernels of
    // T -> action_m(b) T - T action_n(b), one algebra basis element at a time
    std::vector<Mat> cur;
    cur.reserve(w);
    for (size_t i = 0; i < dm; ++i)
        for (size_t j = 0; j < dn; ++j) {
            Mat e(dm, dn);
            e.at(i, j) = 1;
            cur.push_back(std::move(e));
        }
    for (size_t b = 0; b < m.alg->dim() && !cur.empty(); ++b) {
        Mat cols(w, cur.size());
        bool all_zero = true;
        for (size_t k = 0; k < cur.size(); ++k) {
            Mat img = mat_sub(F, mat_mul(F, m.action[b], cur[k]), mat_mul(F, cur[k], n.action[b]));
            for (size_t t = 0; t < w; ++t) {
                cols.at(t, k) = img.a[t];
                if (img.a[t]) all_zero = false;
            }
        }
        if (all_zero) continue;
        auto ker = kernel_basis(F, cols);
        std::vector<Mat> next;
        next.reserve(ker.size());
        for (auto& c : ker) {
            Mat t(dm, dn);
            for (size_t k = 0; k < cur.size(); ++k)
                if (c[k]) t = mat_add(F, t, mat_scale(F, c[k], cur[k]));
            next.push_back(std::move(t));
        }
        cur = std::move(next);
    }
    out.basis = std::move(cur);
    return out;
}

HomCoords::HomCoords(const FieldSpec& f, const std::vector<Mat>& hom_basis)
    : F(f), basis(hom_basis),
      solver(f, [&] {
          size_t w = hom_basis.empty() ? 0 : hom_basis[0].a.size();
          Mat rows(hom_basis.size(), w);
          for (size_t i = 0; i < hom_basis.size(); ++i)
              for (size_t j = 0; j < w; ++j) rows.at(i, j) = hom_basis[i].a[j];
          return rows;
      }()) {}

std::vector<uint32_t> HomCoords::coords(const Mat& h) const {
    auto c = solver.solve(h.a);
    if (!c) throw ValidationError("HomCoords: matrix is not in the hom span");
    return *c;
}

Mat HomCoords::from_coords(const std::vector<uint32_t>& c) const {
    if (basis.empty()) return Mat(0, 0);
    Mat r(basis[0].rows, basis[0].cols);
    for (size_t k = 0; k < basis.size(); ++k)
        if (c[k]) r = mat_add(F, r, mat_scale(F, c[k], basis[k]));
    return r;
}

FDModule twist(const AlgebraAction& act, uint32_t g, const FDModule& m) {
    if (act.alg.get() != m.alg.get()) throw NoActionAttached("twist: action is on a different algebra");
    const FieldSpec& F = m.alg->field;
    const size_t d = m.alg->dim();
    uint32_t gi = act.group.inv(g);
    std::vector<Mat> action(d, Mat(m.dim, m.dim));
    for (size_t b = 0; b < d; ++b) {
        for (size_t k = 0; k < d; ++k) {
            uint32_t c = act.mats[gi].at(b, k);
            if (c) action[b] = mat_add(F, action[b], mat_scale(F, c, m.action[k]));
        }
    }
    return make_module(m.alg, m.dim, std::move(action));
}

FDModule pushdown_full(const SkewAlgebraBundle& B, const FDModule& m) {
    if (m.alg.get() != B.lambda.get()) throw AlgebraMismatch("pushdown_full: module not over lambda");
    const FieldSpec& F = B.lambda->field;
    const size_t d = B.lambda->dim(), n = B.act.group.size();
    const size_t dm = m.dim, D = dm * n;
    std::vector<Mat> action(B.full->dim(), Mat(D, D));
    for (size_t b = 0; b < d; ++b)
        for (uint32_t h = 0; h < n; ++h) {
            Mat& M = action[B.full_index(b, h)];
            for (uint32_t g = 0; g < n; ++g) {
                uint32_t gh = B.act.group.mul(g, h);
                // block g -> block gh via action_m(g(b))
                Mat blk(dm, dm);
                for (size_t k = 0; k < d; ++k) {
                    uint32_t c = B.act.mats[g].at(b, k);
                    if (c) blk = mat_add(F, blk, mat_scale(F, c, m.action[k]));
                }
                for (size_t i = 0; i < dm; ++i)
                    for (size_t j = 0; j < dm; ++j)
                        M.at(g * dm + i, gh * dm + j) = blk.at(i, j);
            }
        }
    return make_module(B.full, D, std::move(action));
}

Mat pushdown_hom(const SkewAlgebraBundle& B, const Mat& f) {
    const size_t n = B.act.group.size();
    Mat r(f.rows * n, f.cols * n);
    for (size_t g = 0; g < n; ++g)
        for (size_t i = 0; i < f.rows; ++i)
            for (size_t j = 0; j < f.cols; ++j)
                r.at(g * f.rows + i, g * f.cols + j) = f.at(i, j);
    return r;
}

FDModule restrict_module(const SkewAlgebraBundle& B, const FDModule& mbar) {
    if (mbar.alg.get() != B.full.get()) throw AlgebraMismatch("restrict: module not over the skew algebra");
    const size_t d = B.lambda->dim();
    std::vector<Mat> action(d);
    for (size_t b = 0; b < d; ++b) action[b] = mbar.action[B.full_index(b, 0)];
    return make_module(B.lambda, mbar.dim, std::move(action));
}

namespace {

// Row-space basis of the image of an idempotent action, with read-off coords.
struct CutBasis {
    Mat rows;                    // RREF rows spanning im(rho(e))
    std::vector<size_t> pivots;
};

CutBasis cut_basis(const FieldSpec& F, const Mat& idem_action) {
    auto rr = rref(F, idem_action);
    CutBasis cb;
    cb.rows = Mat(rr.rank, idem_action.cols);
    for (size_t i = 0; i < rr.rank; ++i)
        for (size_t j = 0; j < idem_action.cols; ++j) cb.rows.at(i, j) = rr.reduced.at(i, j);
    cb.pivots = rr.pivot_cols;
    return cb;
}

// Express rows of v (inside the row space of cb) in cb coordinates.
Mat read_off(const FieldSpec& F, const CutBasis& cb, const Mat& v) {
    Mat c(v.rows, cb.rows.rows);
    for (size_t i = 0; i < v.rows; ++i) {
        std::vector<uint32_t> resid = v.row(i);
        for (size_t r = 0; r < cb.pivots.size(); ++r) {
            uint32_t f = resid[cb.pivots[r]];
            c.at(i, r) = f;
            if (!f) continue;
            for (size_t j = 0; j < v.cols; ++j)
                resid[j] = F.sub(resid[j], F.mul(f, cb.rows.at(r, j)));
        }
        for (uint32_t x : resid)
            if (x) throw ValidationError("corner cut: vector escaped the ebar image");
    }
    return c;
}

} // namespace

FDModule corner_module(const SkewAlgebraBundle& B, const FDModule& mbar) {
    if (mbar.alg.get() != B.full.get()) throw AlgebraMismatch("corner_module: module not over the skew algebra");
    const FieldSpec& F = B.full->field;
    Mat ebar_act = mbar.act_of(B.ebar);
    CutBasis cb = cut_basis(F, ebar_act);
    const size_t k = B.corner.alg->dim();
    std::vector<Mat> action(k);
    for (size_t c = 0; c < k; ++c) {
        Mat amb = mbar.act_of(B.corner.basis_rows.row(c));
        action[c] = read_off(F, cb, mat_mul(F, cb.rows, amb));
    }
    return make_module(B.corner.alg, cb.rows.rows, std::move(action));
}

FDModule pushdown_corner(const SkewAlgebraBundle& B, const FDModule& m) {
    return corner_module(B, pushdown_full(B, m));
}

Mat corner_hom(const SkewAlgebraBundle& B, const FDModule& mbar, const FDModule& nbar, const Mat& f) {
    const FieldSpec& F = B.full->field;
    CutBasis cm = cut_basis(F, mbar.act_of(B.ebar));
    CutBasis cn = cut_basis(F, nbar.act_of(B.ebar));
    return read_off(F, cn, mat_mul(F, cm.rows, f));
}

Mat random_combination(const FieldSpec& F, const std::vector<Mat>& basis, Rng& rng) {
    if (basis.empty()) return Mat(0, 0);
    Mat r(basis[0].rows, basis[0].cols);
    for (auto& b : basis) r = mat_add(F, r, mat_scale(F, rng.below(F.p), b));
    return r;
}

AdjunctionReport adjunction_check(const SkewAlgebraBundle& B, const FDModule& x,
                                  const FDModule& mbar, uint64_t seed) {
    const FieldSpec& F = B.full->field;
    const size_t n = B.act.group.size();
    AdjunctionReport rep;
    FDModule fx = pushdown_full(B, x);
    FDModule res = restrict_module(B, mbar);
    HomBasis lhs = hom_space(fx, mbar);     // Hom_skew(F x, mbar)
    HomBasis rhs = hom_space(x, res);       // Hom_lambda(x, F^ mbar)
    rep.lhs_dim = lhs.dim();
    rep.rhs_dim = rhs.dim();
    rep.dims_equal = rep.lhs_dim == rep.rhs_dim;
    if (!rep.dims_equal) {
        rep.note = "hom dimensions differ";
        return rep;
    }
    if (lhs.dim() == 0) {
        rep.mutually_inverse = rep.natural = true;
        return rep;
    }
    // eta(T) = inclusion at the identity block, then T
    Mat incl(x.dim, fx.dim);
    for (size_t i = 0; i < x.dim; ++i) incl.at(i, i) = 1;
    // eta^{-1}(S) has block row g equal to S * rho_mbar(1 (x) g)
    std::vector<Mat> U(n);
    for (uint32_t g = 0; g < n; ++g) {
        std::vector<uint32_t> one_g(B.full->dim(), 0);
        for (size_t i = 0; i < B.lambda->dim(); ++i)
            one_g[B.full_index(i, g)] = B.lambda->unit[i];
        U[g] = mbar.act_of(one_g);
    }
    auto eta = [&](const Mat& T) { return mat_mul(F, incl, T); };
    auto eta_inv = [&](const Mat& S) {
        Mat T(fx.dim, mbar.dim);
        for (uint32_t g = 0; g < n; ++g) {
            Mat blk = mat_mul(F, S, U[g]);
            for (size_t i = 0; i < x.dim; ++i)
                for (size_t j = 0; j < mbar.dim; ++j) T.at(g * x.dim + i, j) = blk.at(i, j);
        }
        return T;
    };
    HomCoords lc(F, lhs.basis), rc(F, rhs.basis);
    const size_t s = lhs.dim();
    Mat eta_mat(s, s), inv_mat(s, s);
    try {
        for (size_t k = 0; k < s; ++k) {
            eta_mat.set_row(k, rc.coords(eta(lhs.basis[k])));
            inv_mat.set_row(k, lc.coords(eta_inv(rhs.basis[k])));
        }
    } catch (const ValidationError& e) {
        rep.note = e.what();
        return rep;
    }
    rep.mutually_inverse = mat_mul(F, eta_mat, inv_mat) == Mat::identity(s) &&
                           mat_mul(F, inv_mat, eta_mat) == Mat::identity(s);
    // naturality against seeded endomorphisms on both sides
    HomBasis endx = hom_space(x, x);
    HomBasis endm = hom_space(mbar, mbar);
    Rng rng(seed);
    rep.natural = true;
    for (int t = 0; t < 5 && rep.natural; ++t) {
        Mat phi = random_combination(F, endx.basis, rng);
        Mat psi = random_combination(F, endm.basis, rng);
        Mat fphi = pushdown_hom(B, phi);
        for (auto& T : lhs.basis) {
            // eta(F(phi) T) = phi eta(T)  and  eta(T psi) = eta(T) psi
            if (!(eta(mat_mul(F, fphi, T)) == mat_mul(F, phi, eta(T)))) rep.natural = false;
            if (!(eta(mat_mul(F, T, psi)) == mat_mul(F, eta(T), psi))) rep.natural = false;
        }
    }
    return rep;
}

// --- Las Vegas splitting --------------------------------------------------

SplitOutcome find_split(const FieldSpec& F, const std::vector<Mat>& basis, uint64_t seed, int budget) {
    SplitOutcome out;
    if (basis.empty()) return out;
    const size_t n = basis[0].rows;
    Mat id = Mat::identity(n);
    Rng rng(seed);
    auto try_element = [&](const Mat& E) -> bool {
        Poly mu = minimal_polynomial(F, E);
        if (poly_deg(mu) < 2) return false;
        Rng r2(rng.next());
        auto roots = linear_roots(F, mu, r2);
        for (uint32_t lam : roots) {
            // f1 = (x - lam)^mult, f2 = mu / f1, coprime by construction
            Poly lin = {F.neg(lam), 1};
            Poly f1 = {1};
            Poly rest = mu;
            while (true) {
                auto [q, rem] = poly_divmod(F, rest, lin);
                if (!rem.empty()) break;
                f1 = poly_mul(F, f1, lin);
                rest = q;
            }
            if (poly_deg(rest) < 1) continue;   // mu is a power of one linear factor
            // extended euclid for a f1 + b f2 = 1, then P = (a f1)(E) mod mu
            Poly r0 = f1, r1 = rest, s0 = {1}, s1 = {};
            while (!r1.empty()) {
                auto [q, rr] = poly_divmod(F, r0, r1);
                Poly s2 = s0;
                Poly qs1 = poly_mul(F, q, s1);
                s2.resize(std::max(s2.size(), qs1.size()), 0);
                for (size_t i = 0; i < qs1.size(); ++i) s2[i] = F.sub(s2[i], qs1[i]);
                r0 = std::move(r1);
                r1 = std::move(rr);
                s0 = std::move(s1);
                s1 = poly_trim(std::move(s2));
            }
            // r0 = gcd = constant; normalize s0 so that s0 * f1 = r0-part
            if (poly_deg(r0) != 0) continue;
            uint32_t c = F.inv(r0[0]);
            Poly af1 = poly_mul(F, s0, f1);
            for (auto& x : af1) x = F.mul(c, x);
            af1 = poly_mod(F, af1, mu);
            Mat P = poly_at_matrix(F, af1, E);
            if (mat_mul(F, P, P) == P && !P.is_zero() && !(P == id)) {
                out.kind = SplitOutcome::Split;
                out.idempotent = P;
                return true;
            }
        }
        return false;
    };
    // deterministic pass over the basis first, then seeded random combinations
    for (auto& bmat : basis)
        if (try_element(bmat)) return out;
    for (int t = 0; t < budget; ++t)
        if (try_element(random_combination(F, basis, rng))) return out;

    // local certification: every basis element is scalar + nilpotent, and the
    // nilpotent parts span a nil ideal of codimension one
    std::vector<Mat> nil;
    RowSpan span(F, n * n);
    for (auto& bmat : basis) {
        Poly mu = minimal_polynomial(F, bmat);
        // must be (x - lam)^k
        uint32_t k = (uint32_t)poly_deg(mu);
        if (k == 0) return out;
        uint32_t lam = 0;
        if (k == 1) {
            lam = F.neg(mu[0]);
        } else {
            // sum of roots = k*lam = -mu[k-1]
            if (k % F.p == 0) return out;
            lam = F.mul(F.neg(mu[k - 1]), F.inv(k % F.p));
            Poly check = {1};
            Poly lin = {F.neg(lam), 1};
            for (uint32_t i = 0; i < k; ++i) check = poly_mul(F, check, lin);
            if (poly_trim(check) != poly_trim(mu)) return out;   // not split-local
        }
        Mat nb = mat_sub(F, bmat, mat_scale(F, lam, id));
        if (span.insert(nb.a)) nil.push_back(nb);
    }
    // E local forces span{B_i - lam_i I} = rad(E) of codimension exactly one
    if (nil.size() + 1 != basis.size()) return out;
    // nil must be a nilpotent ideal: closed under products and vanishing powers
    RowSpan nspan(F, n * n);
    for (auto& x : nil) nspan.insert(x.a);
    for (auto& x : nil)
        for (auto& y : nil) {
            Mat xy = mat_mul(F, x, y);
            if (!nspan.contains(xy.a)) return out;
        }
    std::vector<Mat> power = nil;
    for (size_t k = 0; !power.empty(); ++k) {
        if (k > n) return out;
        std::vector<Mat> next;
        RowSpan ps(F, n * n);
        for (auto& x : power)
            for (auto& y : nil) {
                Mat xy = mat_mul(F, x, y);
                if (ps.insert(xy.a)) next.push_back(xy);
            }
        power = std::move(next);
    }
    out.kind = SplitOutcome::Local;
    out.rad_basis = std::move(nil);
    return out;
}

IndecResult is_indecomposable(const FDModule& m, uint64_t seed, int budget) {
    if (m.dim == 0) throw ValidationError("is_indecomposable: zero module");
    IndecResult res;
    HomBasis end = hom_space(m, m);
    if (end.dim() == 1) {
        res.kind = IndecResult::Indecomposable;
        return res;
    }
    SplitOutcome so = find_split(m.alg->field, end.basis, seed, budget);
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

IsoResult modules_isomorphic(const FDModule& m, const FDModule& n, uint64_t seed, int budget) {
    if (m.alg.get() != n.alg.get()) throw AlgebraMismatch("modules_isomorphic: different algebras");
    const FieldSpec& F = m.alg->field;
    IsoResult res;
    if (m.dimension_vector() != n.dimension_vector()) {
        res.kind = IsoResult::NonIso;
        res.reason = "dimension vectors differ";
        return res;
    }
    if (m.dim == 0) {
        res.kind = IsoResult::Iso;
        res.witness = Mat(0, 0);
        return res;
    }
    HomBasis mn = hom_space(m, n), nm = hom_space(n, m);
    if (mn.dim() != nm.dim()) {
        res.kind = IsoResult::NonIso;
        res.reason = "asymmetric hom dimensions";
        return res;
    }
    if (mn.dim() == 0) {
        res.kind = IsoResult::NonIso;
        res.reason = "no nonzero homomorphisms";
        return res;
    }
    Rng rng(seed);
    for (auto& T : mn.basis)
        if (mat_inverse(F, T)) {
            res.kind = IsoResult::Iso;
            res.witness = T;
            return res;
        }
    for (int t = 0; t < budget; ++t) {
        Mat T = random_combination(F, mn.basis, rng);
        if (mat_inverse(F, T)) {
            res.kind = IsoResult::Iso;
            res.witness = T;
            return res;
        }
    }
    res.kind = IsoResult::Inconclusive;
    res.reason = "no invertible combination found within budget";
    return res;
}

FDModule summand_module(const FDModule& m, uint64_t seed, int budget) {
    IndecResult r = is_indecomposable(m, seed, budget);
    if (r.kind == IndecResult::Indecomposable) return m;
    if (r.kind == IndecResult::Inconclusive)
        throw ValidationError("summand_module: split search inconclusive");
    const FieldSpec& F = m.alg->field;
    CutBasis cb = cut_basis(F, r.witness);
    const size_t d = m.alg->dim();
    std::vector<Mat> action(d);
    for (size_t b = 0; b < d; ++b)
        action[b] = read_off(F, cb, mat_mul(F, cb.rows, m.action[b]));
    return make_module(m.alg, cb.rows.rows, std::move(action));
}

std::vector<std::vector<std::vector<size_t>>> rad_power_dims(const std::vector<FDModule>& universe,
                                                             size_t nmax, uint64_t seed, int budget) {
    const size_t u = universe.size();
    if (u == 0 || nmax == 0) throw UniverseInvalid("rad_power_dims: empty universe or nmax = 0");
    const FieldSpec& F = universe[0].alg->field;
    std::vector<std::vector<Mat>> end_rads(u);
    for (size_t i = 0; i < u; ++i) {
        IndecResult r = is_indecomposable(universe[i], seed, budget);
        if (r.kind == IndecResult::SplitWitness)
            throw UniverseInvalid("rad_power_dims: universe member " + std::to_string(i) +
                                  " is decomposable");
        if (r.kind == IndecResult::Inconclusive)
            throw UniverseInvalid("rad_power_dims: indecomposability inconclusive at member " +
                                  std::to_string(i));
        end_rads[i] = r.end_rad;   // empty when End = K
        for (size_t j = i + 1; j < u; ++j) {
            IsoResult iso = modules_isomorphic(universe[i], universe[j], seed, budget);
            if (iso.kind == IsoResult::Iso)
                throw UniverseInvalid("rad_power_dims: members " + std::to_string(i) + " and " +
                                      std::to_string(j) + " are isomorphic");
            if (iso.kind == IsoResult::Inconclusive)
                throw UniverseInvalid("rad_power_dims: isomorphism test inconclusive");
        }
    }
    // rad^1: full hom space off the diagonal, nilpotent part of End on it
    std::vector<std::vector<std::vector<Mat>>> rad1(u, std::vector<std::vector<Mat>>(u));
    for (size_t i = 0; i < u; ++i)
        for (size_t j = 0; j < u; ++j) {
            if (i == j)
                rad1[i][j] = end_rads[i];
            else
                rad1[i][j] = hom_space(universe[i], universe[j]).basis;
        }
    std::vector<std::vector<std::vector<size_t>>> dims;
    auto record = [&](const std::vector<std::vector<std::vector<Mat>>>& radn) {
        std::vector<std::vector<size_t>> t(u, std::vector<size_t>(u, 0));
        for (size_t i = 0; i < u; ++i)
            for (size_t j = 0; j < u; ++j) t[i][j] = radn[i][j].size();
        dims.push_back(std::move(t));
    };
    record(rad1);
    auto prev = rad1;
    for (size_t n = 2; n <= nmax; ++n) {
        std::vector<std::vector<std::vector<Mat>>> next(u, std::vector<std::vector<Mat>>(u));
        for (size_t i = 0; i < u; ++i)
            for (size_t j = 0; j < u; ++j) {
                size_t w = universe[i].dim * universe[j].dim;
                RowSpan span(F, w);
                for (size_t k = 0; k < u; ++k)
                    for (auto& f : prev[i][k])
                        for (auto& g : rad1[k][j]) {
                            Mat fg = mat_mul(F, f, g);
                            if (span.insert(fg.a)) next[i][j].push_back(fg);
                        }
                if (w == 0) next[i][j].clear();
            }
        record(next);
        prev = std::move(next);
    }
    return dims;
}

StabilizerResult module_stabilizer(const AlgebraAction& act, const FDModule& m,
                                   uint64_t seed, int budget) {
    StabilizerResult out;
    out.in_stab.assign(act.group.size(), false);
    for (uint32_t g = 0; g < act.group.size(); ++g) {
        if (g == act.group.id()) {
            out.in_stab[g] = true;
            continue;
        }
        if (m.dim == 0) {
            out.in_stab[g] = true;
            continue;
        }
        IsoResult iso = modules_isomorphic(twist(act, g, m), m, seed, budget);
        if (iso.kind == IsoResult::Iso)
            out.in_stab[g] = true;
        else if (iso.kind == IsoResult::Inconclusive)
            out.inconclusive = true;
    }
    return out;
}

SemicovReport verify_semicovering_module(const SkewAlgebraBundle& B, const FDModule& m,
                                         const FDModule& n, uint64_t seed, int budget) {
    SemicovReport rep;
    const size_t ng = B.act.group.size();
    StabilizerResult sm = module_stabilizer(B.act, m, seed, budget);
    StabilizerResult sn = module_stabilizer(B.act, n, seed, budget);
    if (sm.inconclusive || sn.inconclusive) {
        rep.stabilizer_inconclusive = true;
        return rep;
    }
    rep.lhs = hom_space(pushdown_full(B, m), pushdown_full(B, n)).dim();
    if (!sm.full(ng)) {
        rep.branch = 1;
        for (uint32_t g = 0; g < ng; ++g)
            rep.rhs += hom_space(twist(B.act, g, m), n).dim();
    } else if (!sn.full(ng)) {
        rep.branch = 2;
        for (uint32_t g = 0; g < ng; ++g)
            rep.rhs += hom_space(m, twist(B.act, g, n)).dim();
    } else {
        rep.branch = 3;
        rep.rhs = ng * hom_space(m, n).dim();
    }
    rep.pass = rep.lhs == rep.rhs;
    return rep;
}

} // namespace skewcov
