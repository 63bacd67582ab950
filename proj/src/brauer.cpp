#include "skewcov/brauer.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace skewcov {

void SkewBrauerGraph::validate() const {
    const size_t n = size();
    if (iota.size() != n || sigma.size() != n || mult.size() != n)
        throw ValidationError("brauer: arity mismatch");
    auto check_perm = [&](const std::vector<uint32_t>& p, const char* name) {
        std::vector<bool> seen(n, false);
        for (uint32_t v : p) {
            if (v >= n || seen[v]) throw ValidationError(std::string("brauer: ") + name + " is not a permutation");
            seen[v] = true;
        }
    };
    check_perm(iota, "iota");
    check_perm(sigma, "sigma");
    for (size_t h = 0; h < n; ++h)
        if (iota[iota[h]] != h) throw ValidationError("brauer: iota^2 != id");
    for (size_t h = 0; h < n; ++h) {
        if (mult[h] == 0) throw ValidationError("brauer: multiplicity must be positive");
        if (mult[sigma[h]] != mult[h])
            throw ValidationError("brauer: multiplicity not constant on a sigma-orbit");
    }
}

std::vector<std::vector<uint32_t>> SkewBrauerGraph::sigma_orbits() const {
    std::vector<std::vector<uint32_t>> orbits;
    std::vector<bool> seen(size(), false);
    for (uint32_t h = 0; h < size(); ++h) {
        if (seen[h]) continue;
        std::vector<uint32_t> orb;
        uint32_t x = h;
        do {
            orb.push_back(x);
            seen[x] = true;
            x = sigma[x];
        } while (x != h);
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

std::vector<std::vector<uint32_t>> SkewBrauerGraph::edges() const {
    std::vector<std::vector<uint32_t>> es;
    std::vector<bool> seen(size(), false);
    for (uint32_t h = 0; h < size(); ++h) {
        if (seen[h]) continue;
        seen[h] = true;
        if (iota[h] == h) {
            es.push_back({h});
        } else {
            seen[iota[h]] = true;
            es.push_back({h, iota[h]});
        }
    }
    return es;
}

std::vector<uint32_t> SkewBrauerGraph::fixed_half_edges() const {
    std::vector<uint32_t> fs;
    for (uint32_t h = 0; h < size(); ++h)
        if (iota[h] == h) fs.push_back(h);
    return fs;
}

bool is_homogeneous(const SkewBrauerGraph& g, const Grading& d) {
    if (d.d.size() != g.size()) throw ValidationError("grading: arity mismatch");
    for (uint32_t v : d.d)
        if (v > 1) throw ValidationError("grading: values must be 0 or 1");
    for (auto& orb : g.sigma_orbits()) {
        uint32_t s = 0;
        for (uint32_t h : orb) s ^= d.d[h];
        if (s) return false;
    }
    return true;
}

SkewBrauerGraph double_cover(const SkewBrauerGraph& g, const Grading& d) {
    g.validate();
    if (!is_homogeneous(g, d)) throw NotHomogeneous("double_cover: grading is not 0-homogeneous");
    const size_t n = g.size();
    SkewBrauerGraph c;
    c.half_edges.resize(2 * n);
    c.iota.resize(2 * n);
    c.sigma.resize(2 * n);
    c.mult.resize(2 * n);
    for (uint32_t h = 0; h < n; ++h)
        for (uint32_t i = 0; i < 2; ++i) {
            uint32_t idx = 2 * h + i;
            c.half_edges[idx] = g.half_edges[h] + "_" + std::to_string(i);
            c.iota[idx] = (g.iota[h] == h) ? 2 * h + (1 - i) : 2 * g.iota[h] + i;
            c.sigma[idx] = 2 * g.sigma[h] + ((i + d.d[h]) % 2);
            c.mult[idx] = g.mult[h];
        }
    c.validate();
    for (uint32_t idx = 0; idx < 2 * n; ++idx)
        if (c.iota[idx] == idx)
            throw ValidationError("double_cover: iota_d acquired a fixed point");
    return c;
}

BrauerAlgebraData bg_algebra(const FieldSpec& F, const SkewBrauerGraph& g) {
    g.validate();
    if (!g.is_ordinary())
        throw UnsupportedShape("bg_algebra: graph has iota-fixed half-edges; take a cover first");
    const size_t n = g.size();
    auto orbits = g.sigma_orbits();
    std::vector<size_t> orbit_of(n), orbit_size(n);
    for (size_t o = 0; o < orbits.size(); ++o)
        for (uint32_t h : orbits[o]) {
            orbit_of[h] = o;
            orbit_size[h] = orbits[o].size();
        }
    auto edge_list = g.edges();
    std::vector<size_t> edge_of(n);
    for (size_t e = 0; e < edge_list.size(); ++e)
        for (uint32_t h : edge_list[e]) edge_of[h] = e;

    std::vector<bool> truncated(n, false);
    bool any_trunc = false;
    for (uint32_t h = 0; h < n; ++h) {
        truncated[h] = orbit_size[h] == 1 && g.mult[h] == 1;
        any_trunc = any_trunc || truncated[h];
    }

    BrauerAlgebraData out;
    out.edge_list = edge_list;
    out.halfedge_arrow.assign(n, (size_t)-1);

    if (any_trunc) {
        // only the single-edge Brauer tree is special-cased: K[x]/(x^2)
        bool single = n == 2 && edge_list.size() == 1 && truncated[0] && truncated[1];
        if (!single)
            throw UnsupportedShape("bg_algebra: truncated edge configurations are not supported");
        Quiver q;
        q.vertices = {"E0"};
        q.arrows = {{"x", 0, 0}};
        Relation r{{{1u, Path{0, {0, 0}}}}};
        out.bqa = path_basis(F, q, RelationSet{{r}, 2});
        out.halfedge_arrow[0] = 0;
        out.halfedge_arrow[1] = 0;
        out.single_edge_special_case = true;
        return out;
    }

    Quiver q;
    for (size_t e = 0; e < edge_list.size(); ++e) q.vertices.push_back("E" + std::to_string(e));
    for (uint32_t h = 0; h < n; ++h) {
        out.halfedge_arrow[h] = q.arrows.size();
        q.arrows.push_back({"a_" + g.half_edges[h], (uint32_t)edge_of[h], (uint32_t)edge_of[g.sigma[h]]});
    }

    auto special_cycle = [&](uint32_t h) {
        // C_h = a_h a_{sigma h} ... around the o-vertex of h, repeated m(h) times
        Path p{(uint32_t)edge_of[h], {}};
        for (uint32_t rep = 0; rep < g.mult[h]; ++rep) {
            uint32_t x = h;
            do {
                p.arrows.push_back((uint32_t)out.halfedge_arrow[x]);
                x = g.sigma[x];
            } while (x != h);
        }
        return p;
    };

    RelationSet rels;
    uint32_t maxlen = 2;
    for (auto& e : edge_list) {
        uint32_t h = e[0], hp = e[1];
        Relation r;
        r.terms = {{1u, special_cycle(h)}, {F.neg(1), special_cycle(hp)}};
        maxlen = std::max<uint32_t>(maxlen, (uint32_t)r.terms[0].second.arrows.size());
        maxlen = std::max<uint32_t>(maxlen, (uint32_t)r.terms[1].second.arrows.size());
        rels.relations.push_back(std::move(r));
    }
    // compositions leaving a special cycle vanish
    for (uint32_t h1 = 0; h1 < n; ++h1)
        for (uint32_t h2 = 0; h2 < n; ++h2) {
            if (edge_of[g.sigma[h1]] != edge_of[h2]) continue;   // not composable
            if (h2 == g.sigma[h1]) continue;                     // continues the cycle
            Relation r;
            r.terms = {{1u, Path{(uint32_t)edge_of[h1],
                                 {(uint32_t)out.halfedge_arrow[h1], (uint32_t)out.halfedge_arrow[h2]}}}};
            rels.relations.push_back(std::move(r));
        }
    rels.nilpotency_bound = maxlen + 1;
    out.bqa = path_basis(F, q, rels);
    return out;
}

AlgebraAction bd_group_action(const BrauerAlgebraData& cover_alg, const SkewBrauerGraph& cover) {
    // cover half-edges are indexed 2h + i; the level swap is idx ^ 1
    const Quiver& q = cover_alg.bqa.quiver;
    const size_t n = cover.size();
    std::vector<size_t> edge_of(n);
    for (size_t e = 0; e < cover_alg.edge_list.size(); ++e)
        for (uint32_t h : cover_alg.edge_list[e]) edge_of[h] = e;
    QuiverAction qa;
    QuiverAction::GenData gd;
    gd.vertex_perm.resize(q.vertices.size());
    for (size_t e = 0; e < cover_alg.edge_list.size(); ++e)
        gd.vertex_perm[e] = (uint32_t)edge_of[cover_alg.edge_list[e][0] ^ 1u];
    gd.arrow_map.resize(q.arrows.size());
    for (uint32_t h = 0; h < n; ++h) {
        size_t a = cover_alg.halfedge_arrow[h];
        if (a == (size_t)-1) continue;
        gd.arrow_map[a] = {1u, (uint32_t)cover_alg.halfedge_arrow[h ^ 1u]};
    }
    qa.gens.push_back(std::move(gd));
    return make_quiver_action(cover_alg.bqa, FiniteAbelianGroup({2}), qa);
}

SkewBGResult skew_bg_algebra(const FieldSpec& F, const SkewBrauerGraph& g, const Grading& d) {
    g.validate();
    SkewBrauerGraph cover = double_cover(g, d);
    BrauerAlgebraData cover_alg = bg_algebra(F, cover);
    AlgebraAction level_action = bd_group_action(cover_alg, cover);
    SkewAlgebraBundle bundle = skew_algebra(cover_alg.bqa.alg, level_action);

    // f = sum over edges of Gamma of e_{[h_0]} (x) 1
    const size_t D = bundle.full->dim();
    std::vector<size_t> cover_edge_of(cover.size());
    for (size_t e = 0; e < cover_alg.edge_list.size(); ++e)
        for (uint32_t h : cover_alg.edge_list[e]) cover_edge_of[h] = e;
    auto gamma_edges = g.edges();
    std::vector<uint32_t> f(D, 0);
    std::vector<std::vector<uint32_t>> seeds;
    std::vector<std::string> labels;
    std::vector<SkewBGResult::Seed> seed_tags;
    for (size_t ge = 0; ge < gamma_edges.size(); ++ge) {
        uint32_t h0 = gamma_edges[ge][0];
        size_t v = cover_edge_of[2 * h0];   // the level-0 lift
        // e_v (x) 1 as a vector in the skew algebra
        std::vector<uint32_t> base(D, 0);
        const auto& ev = cover_alg.bqa.alg->idempotents[v];
        for (size_t i = 0; i < ev.size(); ++i)
            if (ev[i]) base[bundle.full_index(i, 0)] = ev[i];
        for (size_t j = 0; j < D; ++j) f[j] = F.add(f[j], base[j]);
        bool fixed_edge = g.iota[h0] == h0;
        if (fixed_edge) {
            // x-edge: split into e (x) (1 + (-1)^i gbar)/2
            uint32_t half = F.inv(2 % F.p);
            for (int comp = 0; comp < 2; ++comp) {
                std::vector<uint32_t> s(D, 0);
                uint32_t sign = comp == 0 ? 1 : F.neg(1);
                for (size_t i = 0; i < ev.size(); ++i) {
                    if (!ev[i]) continue;
                    s[bundle.full_index(i, 0)] = F.mul(half, ev[i]);
                    s[bundle.full_index(i, 1)] = F.mul(half, F.mul(sign, ev[i]));
                }
                seeds.push_back(std::move(s));
                labels.push_back("f[" + g.half_edges[h0] + "]_" + std::to_string(comp));
                seed_tags.push_back({ge, comp});
            }
        } else {
            seeds.push_back(base);
            labels.push_back("f[" + g.half_edges[h0] + "]");
            seed_tags.push_back({ge, -1});
        }
    }
    CornerAlgebra corner = corner_by_idempotent(bundle.full, f, seeds, labels);
    AlgebraAction ghat = restrict_action_to_corner(dual_action_full(bundle), corner);
    return SkewBGResult{std::move(cover),  std::move(cover_alg), std::move(level_action),
                        std::move(bundle), std::move(f),         std::move(corner),
                        std::move(seed_tags), std::move(ghat)};
}

GhatFormulaReport validate_ghat_formulas(const SkewBGResult& r, const Grading& d) {
    const FieldSpec& F = r.bundle.full->field;
    GhatFormulaReport rep;
    const uint32_t chi = 1;   // the sign character generator of G^
    // (1) o-edge idempotents fixed; (2) x-edge components swapped
    rep.o_edges_fixed = true;
    rep.x_components_swapped = true;
    for (size_t s = 0; s < r.seeds.size(); ++s) {
        uint32_t image = r.ghat.idem_perm[chi][s];
        if (r.seeds[s].comp < 0) {
            if (image != s) rep.o_edges_fixed = false;
        } else {
            // the partner seed of the same gamma edge with comp flipped
            bool found = false;
            for (size_t t = 0; t < r.seeds.size(); ++t)
                if (r.seeds[t].gamma_edge == r.seeds[s].gamma_edge &&
                    r.seeds[t].comp == 1 - r.seeds[s].comp && image == t)
                    found = true;
            if (!found) rep.x_components_swapped = false;
        }
    }
    // (3) arrows: beta_h = alpha_{h_0} (x) g^{d(h)}; each nonzero component
    // ^j beta_h^i maps to (-1)^{-d(h)} ^{j+1} beta_h^{i+1}
    rep.arrow_sign_ok = true;
    const auto& A = *r.bundle.full;
    auto dual = dual_action_full(r.bundle);
    const auto& L = *r.cover_alg.bqa.alg;
    // seed vectors in ambient coordinates
    std::vector<std::vector<uint32_t>> seed_amb;
    for (size_t s = 0; s < r.seeds.size(); ++s)
        seed_amb.push_back(r.corner.to_ambient([&] {
            std::vector<uint32_t> unit(r.corner.alg->dim(), 0);
            unit[s] = 1;
            return unit;
        }()));
    auto seeds_of_edge = [&](size_t ge) {
        std::vector<size_t> out;
        for (size_t s = 0; s < r.seeds.size(); ++s)
            if (r.seeds[s].gamma_edge == ge) out.push_back(s);
        return out;
    };
    // the gamma edge of a half-edge h: its level-0 lift sits in a cover edge,
    // and exactly one seed family is supported on that edge's idempotent
    const size_t nhalf = d.d.size();
    std::vector<size_t> gamma_edge_of(nhalf, (size_t)-1);
    {
        std::vector<size_t> cover_edge_of(r.cover.size());
        for (size_t e = 0; e < r.cover_alg.edge_list.size(); ++e)
            for (uint32_t hh : r.cover_alg.edge_list[e]) cover_edge_of[hh] = e;
        for (uint32_t h = 0; h < nhalf; ++h) {
            size_t v = cover_edge_of[2 * h];
            const auto& ev = L.idempotents[v];
            for (size_t s = 0; s < r.seeds.size(); ++s) {
                bool matches = true;
                for (size_t i = 0; i < ev.size() && matches; ++i)
                    if (ev[i] && !seed_amb[s][r.bundle.full_index(i, 0)]) matches = false;
                if (matches) {
                    gamma_edge_of[h] = r.seeds[s].gamma_edge;
                    break;
                }
            }
        }
    }
    for (uint32_t h = 0; h < nhalf; ++h) {
        size_t arrow = r.cover_alg.halfedge_arrow[2 * h];
        if (arrow == (size_t)-1) continue;
        // beta_h = alpha_{h_0} (x) g^{d(h)} in ambient coordinates
        std::vector<uint32_t> beta(A.dim(), 0);
        {
            Path ap{r.cover_alg.bqa.quiver.arrows[arrow].src, {(uint32_t)arrow}};
            auto red = r.cover_alg.bqa.reduce_path(ap);
            for (auto [k, c] : red) beta[r.bundle.full_index(k, d.d[h])] = c;
        }
        uint32_t sign = d.d[h] ? F.neg(1) : 1;
        size_t src_edge = gamma_edge_of[h];
        // sigma_d(h_0) = (sigma h)_{d(h)}, so sigma h = sigma_d(2h) / 2
        uint32_t sh = r.cover.sigma[2 * h] / 2;
        size_t tgt_edge = gamma_edge_of[sh];
        bool any_nonzero = false;
        for (size_t si : seeds_of_edge(src_edge))
            for (size_t sj : seeds_of_edge(tgt_edge)) {
                auto comp = A.mul(seed_amb[si], A.mul(beta, seed_amb[sj]));
                bool zero = std::all_of(comp.begin(), comp.end(), [](uint32_t x) { return x == 0; });
                if (zero) continue;
                any_nonzero = true;
                ++rep.arrows_checked;
                // image under the sign character
                auto img = row_times_mat(F, comp, dual.mats[chi]);
                // expected: sign * (component at flipped indices)
                size_t si2 = si, sj2 = sj;
                if (r.seeds[si].comp >= 0)
                    for (size_t t : seeds_of_edge(src_edge))
                        if (r.seeds[t].comp == 1 - r.seeds[si].comp) si2 = t;
                if (r.seeds[sj].comp >= 0)
                    for (size_t t : seeds_of_edge(tgt_edge))
                        if (r.seeds[t].comp == 1 - r.seeds[sj].comp) sj2 = t;
                auto flipped = A.mul(seed_amb[si2], A.mul(beta, seed_amb[sj2]));
                std::vector<uint32_t> expect(flipped.size());
                for (size_t k = 0; k < flipped.size(); ++k) expect[k] = F.mul(sign, flipped[k]);
                if (img != expect) rep.arrow_sign_ok = false;
            }
        if (!any_nonzero) rep.arrow_sign_ok = false;
    }
    return rep;
}

BiserialReport is_special_biserial(const BoundQuiverAlgebra& B) {
    const Quiver& q = B.quiver;
    BiserialReport rep;
    for (uint32_t v = 0; v < q.vertices.size(); ++v) {
        size_t out_deg = 0, in_deg = 0;
        for (auto& a : q.arrows) {
            out_deg += a.src == v;
            in_deg += a.tgt == v;
        }
        if (out_deg > 2 || in_deg > 2) {
            rep.ok = false;
            rep.witness = "vertex " + q.vertices[v] + " has " + std::to_string(out_deg) +
                          " arrows out, " + std::to_string(in_deg) + " in";
            return rep;
        }
    }
    for (uint32_t a = 0; a < q.arrows.size(); ++a) {
        size_t cont = 0, pre = 0;
        for (uint32_t b = 0; b < q.arrows.size(); ++b) {
            if (q.arrows[a].tgt == q.arrows[b].src &&
                !B.in_ideal(Path{q.arrows[a].src, {a, b}}))
                ++cont;
            if (q.arrows[b].tgt == q.arrows[a].src &&
                !B.in_ideal(Path{q.arrows[b].src, {b, a}}))
                ++pre;
        }
        if (cont > 1 || pre > 1) {
            rep.ok = false;
            rep.witness = "arrow " + q.arrows[a].name + " has " + std::to_string(cont) +
                          " continuations, " + std::to_string(pre) + " predecessors";
            return rep;
        }
    }
    return rep;
}

bool is_symmetric(const StructureConstantAlgebra& A, uint64_t seed, int budget) {
    const FieldSpec& F = A.field;
    const size_t n = A.dim();
    // solution space of lambda(xy) = lambda(yx) over all basis pairs
    std::vector<std::vector<uint32_t>> rows;
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) {
            std::vector<uint32_t> row(n, 0);
            for (auto [k, c] : A.table[i][j]) row[k] = F.add(row[k], c);
            for (auto [k, c] : A.table[j][i]) row[k] = F.sub(row[k], c);
            rows.push_back(std::move(row));
        }
    Mat sys(rows.size(), n);
    for (size_t i = 0; i < rows.size(); ++i) sys.set_row(i, rows[i]);
    auto forms = kernel_basis(F, sys);   // lambda with sys lambda = 0
    if (forms.empty()) return false;
    // common radical: x with lambda(x b) = 0 for all lambda in S and all b
    {
        std::vector<std::vector<uint32_t>> cons;
        for (auto& lam : forms)
            for (uint32_t b = 0; b < n; ++b) {
                std::vector<uint32_t> row(n, 0);
                for (uint32_t i = 0; i < n; ++i)
                    for (auto [k, c] : A.table[i][b]) row[i] = F.add(row[i], F.mul(c, lam[k]));
                cons.push_back(std::move(row));
            }
        Mat cmat(cons.size(), n);
        for (size_t i = 0; i < cons.size(); ++i) cmat.set_row(i, cons[i]);
        if (!kernel_basis(F, cmat).empty()) return false;   // witnessed degenerate
    }
    // search for a nondegenerate form in the space
    Rng rng(seed);
    auto gram_rank = [&](const std::vector<uint32_t>& lam) {
        Mat G(n, n);
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = 0; j < n; ++j) {
                uint32_t v = 0;
                for (auto [k, c] : A.table[i][j]) v = F.add(v, F.mul(c, lam[k]));
                G.at(i, j) = v;
            }
        return rank_of(F, G);
    };
    for (auto& lam : forms)
        if (gram_rank(lam) == n) return true;
    for (int t = 0; t < budget; ++t) {
        std::vector<uint32_t> lam(n, 0);
        for (auto& fvec : forms) {
            uint32_t c = rng.below(F.p);
            for (size_t i = 0; i < n; ++i) lam[i] = F.add(lam[i], F.mul(c, fvec[i]));
        }
        if (gram_rank(lam) == n) return true;
    }
    throw ValidationError("is_symmetric: common radical vanished but no nondegenerate form found");
}

bool brauer_isomorphic(const SkewBrauerGraph& a, const SkewBrauerGraph& b) {
    if (a.size() != b.size()) return false;
    const size_t n = a.size();
    std::vector<int> img(n, -1), used(n, 0);
    // propagate tau(sigma h) = sigma' tau(h), tau(iota h) = iota' tau(h)
    std::function<bool(std::vector<int>&, std::vector<int>&, uint32_t, uint32_t)> assign =
        [&](std::vector<int>& im, std::vector<int>& us, uint32_t h, uint32_t to) -> bool {
        if (im[h] != -1) return im[h] == (int)to;
        if (us[to]) return false;
        if (a.mult[h] != b.mult[to]) return false;
        im[h] = (int)to;
        us[to] = 1;
        return assign(im, us, a.sigma[h], b.sigma[to]) && assign(im, us, a.iota[h], b.iota[to]);
    };
    std::function<bool(std::vector<int>, std::vector<int>)> search =
        [&](std::vector<int> im, std::vector<int> us) -> bool {
        uint32_t h = n;
        for (uint32_t i = 0; i < n; ++i)
            if (im[i] == -1) { h = i; break; }
        if (h == n) return true;
        for (uint32_t to = 0; to < n; ++to) {
            if (us[to]) continue;
            std::vector<int> im2 = im, us2 = us;
            if (assign(im2, us2, h, to) && search(im2, us2)) return true;
        }
        return false;
    };
    return search(img, used);
}

std::vector<std::vector<uint32_t>> brauer_components(const SkewBrauerGraph& g) {
    const size_t n = g.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<uint32_t>> out;
    for (uint32_t h = 0; h < n; ++h) {
        if (comp[h] != -1) continue;
        std::vector<uint32_t> stack = {h}, members;
        comp[h] = (int)out.size();
        while (!stack.empty()) {
            uint32_t x = stack.back();
            stack.pop_back();
            members.push_back(x);
            for (uint32_t y : {g.sigma[x], g.iota[x]})
                if (comp[y] == -1) {
                    comp[y] = (int)out.size();
                    stack.push_back(y);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

SkewBrauerGraph brauer_subgraph(const SkewBrauerGraph& g, const std::vector<uint32_t>& hs) {
    SkewBrauerGraph s;
    std::vector<int> pos(g.size(), -1);
    for (size_t i = 0; i < hs.size(); ++i) pos[hs[i]] = (int)i;
    for (uint32_t h : hs) {
        if (pos[g.sigma[h]] == -1 || pos[g.iota[h]] == -1)
            throw ValidationError("brauer_subgraph: set is not sigma/iota closed");
        s.half_edges.push_back(g.half_edges[h]);
        s.sigma.push_back((uint32_t)pos[g.sigma[h]]);
        s.iota.push_back((uint32_t)pos[g.iota[h]]);
        s.mult.push_back(g.mult[h]);
    }
    s.validate();
    return s;
}

} // namespace skewcov
