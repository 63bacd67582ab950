#include "skewcov/action.hpp"

#include <algorithm>

namespace skewcov {

std::vector<uint32_t> AlgebraAction::vertex_stabilizer(size_t idem) const {
    std::vector<uint32_t> stab;
    for (uint32_t g = 0; g < group.size(); ++g)
        if (idem_perm[g][idem] == idem) stab.push_back(g);
    return stab;
}

static void validate_generator(const StructureConstantAlgebra& A, const Mat& M) {
    const FieldSpec& F = A.field;
    const size_t d = A.dim();
    if (M.rows != d || M.cols != d) throw ActionInvalid("action: generator matrix shape");
    if (rank_of(F, M) != d) throw ActionInvalid("action: generator matrix not invertible");
    if (row_times_mat(F, A.unit, M) != A.unit) throw ActionInvalid("action: unit not fixed");
    // multiplicative on all basis pairs: g(b_i b_j) = g(b_i) g(b_j)
    for (uint32_t i = 0; i < d; ++i)
        for (uint32_t j = 0; j < d; ++j) {
            std::vector<uint32_t> lhs(d, 0);
            for (auto [k, c] : A.table[i][j])
                for (size_t t = 0; t < d; ++t) lhs[t] = F.add(lhs[t], F.mul(c, M.at(k, t)));
            auto rhs = A.mul(M.row(i), M.row(j));
            if (lhs != rhs) throw ActionInvalid("action: generator is not multiplicative");
        }
}

static AlgebraAction assemble_action(AlgebraPtr alg, const FiniteAbelianGroup& grp,
                                     const std::vector<Mat>& gen_mats) {
    const StructureConstantAlgebra& A = *alg;
    const FieldSpec& F = A.field;
    const size_t d = A.dim();
    if (gen_mats.size() != grp.factors())
        throw ActionInvalid("action: one matrix per cyclic factor required");
    for (auto& M : gen_mats) validate_generator(A, M);
    for (size_t i = 0; i < gen_mats.size(); ++i) {
        if (!(mat_pow(F, gen_mats[i], grp.cyclic_orders[i]) == Mat::identity(d)))
            throw ActionInvalid("action: generator order relation fails");
        for (size_t j = i + 1; j < gen_mats.size(); ++j)
            if (!(mat_mul(F, gen_mats[i], gen_mats[j]) == mat_mul(F, gen_mats[j], gen_mats[i])))
                throw ActionInvalid("action: generators do not commute");
    }
    AlgebraAction act{alg, grp, CharacterTable(F, grp), {}, {}};
    act.mats.reserve(grp.size());
    for (uint32_t g = 0; g < grp.size(); ++g) {
        auto t = grp.tuple(g);
        Mat M = Mat::identity(d);
        for (size_t i = 0; i < t.size(); ++i)
            if (t[i]) M = mat_mul(F, M, mat_pow(F, gen_mats[i], t[i]));
        act.mats.push_back(std::move(M));
    }
    // distinguished idempotents must be permuted on the nose
    const size_t nv = A.idempotents.size();
    act.idem_perm.assign(grp.size(), std::vector<uint32_t>(nv, 0));
    for (uint32_t g = 0; g < grp.size(); ++g)
        for (size_t v = 0; v < nv; ++v) {
            auto img = row_times_mat(F, A.idempotents[v], act.mats[g]);
            bool found = false;
            for (size_t w = 0; w < nv; ++w)
                if (img == A.idempotents[w]) {
                    act.idem_perm[g][v] = (uint32_t)w;
                    found = true;
                    break;
                }
            if (!found)
                throw ActionInvalid("action: image of a distinguished idempotent is not distinguished");
        }
    // orbit assumption: a stabilizer different from G forces a free orbit
    for (size_t v = 0; v < nv; ++v) {
        size_t stab = act.vertex_stabilizer(v).size();
        if (stab != grp.size() && stab != 1)
            throw ActionInvalid("action: orbit assumption violated at idempotent " + std::to_string(v));
    }
    return act;
}

AlgebraAction make_matrix_action(AlgebraPtr alg, const FiniteAbelianGroup& grp,
                                 const std::vector<Mat>& generator_mats) {
    return assemble_action(std::move(alg), grp, generator_mats);
}

AlgebraAction make_quiver_action(const BoundQuiverAlgebra& B, const FiniteAbelianGroup& grp,
                                 const QuiverAction& qa) {
    const Quiver& q = B.quiver;
    const FieldSpec& F = B.alg->field;
    const size_t d = B.alg->dim();
    if (qa.gens.size() != grp.factors()) throw ActionInvalid("quiver action: generator count mismatch");

    std::vector<Mat> gen_mats;
    for (auto& gd : qa.gens) {
        if (gd.vertex_perm.size() != q.vertices.size() || gd.arrow_map.size() != q.arrows.size())
            throw ActionInvalid("quiver action: permutation arity mismatch");
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            auto [sc, img] = gd.arrow_map[a];
            if (sc == 0 || img >= q.arrows.size())
                throw ActionInvalid("quiver action: bad arrow image");
            if (q.arrows[img].src != gd.vertex_perm[q.arrows[a].src] ||
                q.arrows[img].tgt != gd.vertex_perm[q.arrows[a].tgt])
                throw ActionInvalid("quiver action: arrow image breaks incidence");
        }
        Mat M(d, d);
        for (size_t b = 0; b < d; ++b) {
            const Path& p = B.basis_paths[b];
            Path img{gd.vertex_perm[p.src], {}};
            uint32_t scalar = 1;
            for (uint32_t a : p.arrows) {
                scalar = F.mul(scalar, gd.arrow_map[a].first);
                img.arrows.push_back(gd.arrow_map[a].second);
            }
            for (auto [k, c] : B.reduce_path(img)) M.at(b, k) = F.mul(scalar, c);
        }
        // every relation maps into the ideal span
        for (auto& rel : B.relations.relations) {
            std::vector<std::pair<uint32_t, Path>> image_terms;
            for (auto& [c, p] : rel.terms) {
                Path img{gd.vertex_perm[p.src], {}};
                uint32_t scalar = c;
                for (uint32_t a : p.arrows) {
                    scalar = F.mul(scalar, gd.arrow_map[a].first);
                    img.arrows.push_back(gd.arrow_map[a].second);
                }
                image_terms.emplace_back(scalar, img);
            }
            if (!B.reduce_combination(image_terms).empty())
                throw ActionInvalid("quiver action: a relation image leaves the ideal span");
        }
        gen_mats.push_back(std::move(M));
    }
    return assemble_action(B.alg, grp, gen_mats);
}

CornerAlgebra corner_by_idempotent(const AlgebraPtr& ambient, const std::vector<uint32_t>& f,
                                   const std::vector<std::vector<uint32_t>>& seeds,
                                   const std::vector<std::string>& seed_labels) {
    const StructureConstantAlgebra& A = *ambient;
    const FieldSpec& F = A.field;
    const size_t D = A.dim();
    if (A.mul(f, f) != f) throw ValidationError("corner: f is not idempotent");
    std::vector<uint32_t> sum(D, 0);
    for (size_t a = 0; a < seeds.size(); ++a) {
        if (A.mul(seeds[a], seeds[a]) != seeds[a])
            throw ValidationError("corner: seed " + std::to_string(a) + " is not idempotent");
        for (size_t b = 0; b < seeds.size(); ++b) {
            if (a == b) continue;
            auto pr = A.mul(seeds[a], seeds[b]);
            if (!std::all_of(pr.begin(), pr.end(), [](uint32_t x) { return x == 0; }))
                throw ValidationError("corner: seeds are not orthogonal");
        }
        for (size_t j = 0; j < D; ++j) sum[j] = F.add(sum[j], seeds[a][j]);
    }
    if (sum != f) throw ValidationError("corner: seeds do not sum to f");

    RowSpan span(F, D);
    std::vector<std::vector<uint32_t>> raw;
    std::vector<std::string> labels;
    for (size_t a = 0; a < seeds.size(); ++a) {
        if (!span.insert(seeds[a])) throw ValidationError("corner: dependent seed idempotents");
        raw.push_back(seeds[a]);
        labels.push_back(seed_labels[a]);
    }
    for (size_t b = 0; b < D; ++b) {
        std::vector<uint32_t> eb(D, 0);
        eb[b] = 1;
        auto v = A.mul(f, A.mul(eb, f));
        if (span.insert(v)) {
            raw.push_back(v);
            labels.push_back("c[" + A.basis_labels[b] + "]");
        }
    }
    const size_t k = raw.size();
    Mat basis_rows(k, D);
    for (size_t i = 0; i < k; ++i) basis_rows.set_row(i, raw[i]);
    auto solver = std::make_shared<SpanSolver>(F, basis_rows);

    auto coords = [&](const std::vector<uint32_t>& v) {
        auto c = solver->solve(v);
        if (!c) throw ValidationError("corner: product left the corner span");
        return *c;
    };

    std::vector<std::vector<LinComb>> table(k, std::vector<LinComb>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            table[i][j] = to_lincomb(coords(A.mul(raw[i], raw[j])));

    std::vector<std::vector<uint32_t>> idems;
    for (size_t a = 0; a < seeds.size(); ++a) {
        std::vector<uint32_t> e(k, 0);
        e[a] = 1;
        idems.push_back(std::move(e));
    }
    std::vector<uint32_t> unit = coords(f);

    std::vector<std::vector<uint32_t>> rad;
    {
        RowSpan rs(F, k);
        for (auto& r : A.radical) {
            auto cut = A.mul(f, A.mul(r, f));
            auto c = solver->solve(cut);
            if (!c) throw ValidationError("corner: cut radical row left the span");
            if (rs.insert(*c)) rad.push_back(*c);
        }
    }
    CornerAlgebra out;
    out.alg = make_algebra(F, std::move(labels), std::move(table), std::move(idems),
                           std::move(unit), std::move(rad));
    out.basis_rows = std::move(basis_rows);
    out.solver = std::move(solver);
    return out;
}

SkewAlgebraBundle skew_algebra(const AlgebraPtr& lambda, const AlgebraAction& act) {
    if (act.alg.get() != lambda.get())
        throw AlgebraMismatch("skew_algebra: action lives on a different algebra");
    const StructureConstantAlgebra& L = *lambda;
    const FieldSpec& F = L.field;
    const size_t d = L.dim();
    const FiniteAbelianGroup& G = act.group;
    const size_t n = G.size();
    const size_t D = d * n;

    auto fidx = [&](size_t i, uint32_t g) { return i * n + g; };

    std::vector<std::string> labels(D);
    for (size_t i = 0; i < d; ++i)
        for (uint32_t g = 0; g < n; ++g) {
            std::string gs = "(";
            auto t = G.tuple(g);
            for (size_t q = 0; q < t.size(); ++q) gs += (q ? "," : "") + std::to_string(t[q]);
            gs += ")";
            labels[fidx(i, g)] = L.basis_labels[i] + "|" + gs;
        }

    // (b_i (x) g)(b_j (x) h) = b_i * g(b_j) (x) gh
    std::vector<std::vector<LinComb>> table(D, std::vector<LinComb>(D));
    for (size_t i = 0; i < d; ++i)
        for (uint32_t g = 0; g < n; ++g)
            for (size_t j = 0; j < d; ++j)
                for (uint32_t h = 0; h < n; ++h) {
                    uint32_t gh = G.mul(g, h);
                    std::vector<uint32_t> prod(d, 0);
                    for (size_t k = 0; k < d; ++k) {
                        uint32_t c = act.mats[g].at(j, k);
                        if (!c) continue;
                        for (auto [t, s] : L.table[i][k]) prod[t] = F.add(prod[t], F.mul(c, s));
                    }
                    LinComb out;
                    for (size_t t = 0; t < d; ++t)
                        if (prod[t]) out.emplace_back((uint32_t)fidx(t, gh), prod[t]);
                    table[fidx(i, g)][fidx(j, h)] = std::move(out);
                }

    std::vector<uint32_t> unit(D, 0);
    for (size_t i = 0; i < d; ++i) unit[fidx(i, 0)] = L.unit[i];
    std::vector<std::vector<uint32_t>> idems;
    for (auto& e : L.idempotents) {
        std::vector<uint32_t> v(D, 0);
        for (size_t i = 0; i < d; ++i) v[fidx(i, 0)] = e[i];
        idems.push_back(std::move(v));
    }
    std::vector<std::vector<uint32_t>> rad;
    for (auto& r : L.radical)
        for (uint32_t g = 0; g < n; ++g) {
            std::vector<uint32_t> v(D, 0);
            for (size_t i = 0; i < d; ++i) v[fidx(i, g)] = r[i];
            rad.push_back(std::move(v));
        }

    SkewAlgebraBundle B{lambda, act, nullptr, {}, {}, {}, {}, {}, {}};
    B.full = make_algebra(F, std::move(labels), std::move(table), std::move(idems),
                          std::move(unit), std::move(rad));

    const size_t nv = L.idempotents.size();
    std::vector<bool> seen(nv, false);
    for (size_t v = 0; v < nv; ++v) {
        if (seen[v]) continue;
        B.orbit_reps.push_back(v);
        size_t stab = act.vertex_stabilizer(v).size();
        B.rep_stab_full.push_back(stab == n);
        for (uint32_t g = 0; g < n; ++g) seen[act.idem_perm[g][v]] = true;
    }

    // e_{i0,rho} = e_{i0} (x) e_rho over the stabilizer; ebar is their sum
    std::vector<std::vector<uint32_t>> seeds;
    std::vector<std::string> seed_labels;
    B.ebar.assign(D, 0);
    uint32_t inv_n = F.inv((uint32_t)(n % F.p));
    for (size_t r = 0; r < B.orbit_reps.size(); ++r) {
        size_t i0 = B.orbit_reps[r];
        const auto& e0 = L.idempotents[i0];
        if (B.rep_stab_full[r]) {
            for (uint32_t chi = 0; chi < n; ++chi) {
                std::vector<uint32_t> v(D, 0);
                for (uint32_t g = 0; g < n; ++g) {
                    uint32_t c = F.mul(inv_n, act.chars.value(chi, g));
                    for (size_t i = 0; i < d; ++i)
                        if (e0[i]) v[fidx(i, g)] = F.add(v[fidx(i, g)], F.mul(c, e0[i]));
                }
                seeds.push_back(std::move(v));
                seed_labels.push_back("e(" + std::to_string(i0) + ";chi" + std::to_string(chi) + ")");
                B.corner_vertices.push_back({i0, chi});
            }
        } else {
            std::vector<uint32_t> v(D, 0);
            for (size_t i = 0; i < d; ++i) v[fidx(i, 0)] = e0[i];
            seeds.push_back(std::move(v));
            seed_labels.push_back("e(" + std::to_string(i0) + ";triv)");
            B.corner_vertices.push_back({i0, 0});
        }
    }
    for (auto& s : seeds)
        for (size_t j = 0; j < D; ++j) B.ebar[j] = F.add(B.ebar[j], s[j]);

    // ebar is Morita-full: full * ebar * full spans the whole algebra
    {
        RowSpan span(F, D);
        const auto& A = *B.full;
        std::vector<std::vector<uint32_t>> eb_right;
        for (size_t j = 0; j < D; ++j) {
            std::vector<uint32_t> ej(D, 0);
            ej[j] = 1;
            eb_right.push_back(A.mul(B.ebar, ej));
        }
        for (size_t i = 0; i < D && span.dim() < D; ++i) {
            std::vector<uint32_t> ei(D, 0);
            ei[i] = 1;
            for (size_t j = 0; j < D && span.dim() < D; ++j)
                span.insert(A.mul(ei, eb_right[j]));
        }
        if (span.dim() != D) throw ValidationError("skew_algebra: ebar is not Morita-full");
    }

    B.corner = corner_by_idempotent(B.full, B.ebar, seeds, seed_labels);
    // validates basicness of the corner and extracts the Gabriel quiver Q_G
    B.gabriel = gabriel_quiver(*B.corner.alg, B.corner.alg->radical);
    return B;
}

AlgebraAction dual_action_full(const SkewAlgebraBundle& bundle) {
    const StructureConstantAlgebra& A = *bundle.full;
    const FiniteAbelianGroup& G = bundle.act.group;
    const size_t n = G.size(), d = bundle.lambda->dim();
    std::vector<Mat> gens;
    for (size_t fac = 0; fac < G.factors(); ++fac) {
        uint32_t chi = G.generator(fac);
        Mat M(A.dim(), A.dim());
        for (size_t i = 0; i < d; ++i)
            for (uint32_t g = 0; g < n; ++g) {
                size_t idx = bundle.full_index(i, g);
                M.at(idx, idx) = bundle.act.chars.value(chi, g);
            }
        gens.push_back(std::move(M));
    }
    return make_matrix_action(bundle.full, G, gens);
}

AlgebraAction restrict_action_to_corner(const AlgebraAction& ambient, const CornerAlgebra& corner) {
    const FieldSpec& F = ambient.alg->field;
    const FiniteAbelianGroup& G = ambient.group;
    const size_t k = corner.alg->dim();
    std::vector<Mat> gens;
    for (size_t fac = 0; fac < G.factors(); ++fac) {
        uint32_t gen = G.generator(fac);
        Mat M(k, k);
        for (size_t i = 0; i < k; ++i) {
            auto img = row_times_mat(F, corner.basis_rows.row(i), ambient.mats[gen]);
            auto c = corner.solver->solve(img);
            if (!c) throw ActionInvalid("action does not preserve the corner");
            M.set_row(i, *c);
        }
        gens.push_back(std::move(M));
    }
    return make_matrix_action(corner.alg, G, gens);
}

AlgebraAction dual_action_corner(const SkewAlgebraBundle& bundle) {
    return restrict_action_to_corner(dual_action_full(bundle), bundle.corner);
}

} // namespace skewcov
