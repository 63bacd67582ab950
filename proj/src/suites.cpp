#include "skewcov/suites.hpp"

#include <algorithm>
#include <sstream>

namespace skewcov {

const std::vector<std::string> kSuiteNames = {
    "semicovering-mod", "hgcm",          "adjunction",          "gstab",       "gcf",
    "phi-exact-faithful", "yoneda-square", "radical-preservation", "brauer-all"};

std::string SuiteResult::text() const {
    std::ostringstream os;
    os << "suite " << suite << "\n";
    for (auto& r : rows) {
        const char* st = r.status == SuiteRow::Pass          ? "PASS"
                         : r.status == SuiteRow::Fail        ? "FAIL"
                                                             : "INCONCLUSIVE";
        os << "[" << st << "] " << r.case_key << " branch=" << r.branch << " lhs=" << r.lhs
           << " rhs=" << r.rhs << "\n";
    }
    os << "summary: " << passes << " passed, " << failures << " failed, " << inconclusive
       << " inconclusive\n";
    return os.str();
}

std::string SuiteResult::csv() const {
    std::ostringstream os;
    os << "suite,case,branch,lhs,rhs,status\n";
    for (auto& r : rows) {
        const char* st = r.status == SuiteRow::Pass          ? "pass"
                         : r.status == SuiteRow::Fail        ? "fail"
                                                             : "inconclusive";
        os << suite << "," << r.case_key << "," << r.branch << "," << r.lhs << "," << r.rhs << ","
           << st << "\n";
    }
    return os.str();
}

int SuiteResult::exit_code(bool strict) const {
    if (failures) return 1;
    if (strict && inconclusive) return 1;
    return 0;
}

namespace {

const SkewAlgebraBundle& need_bundle(const Workspace& ws) {
    if (!ws.bundle) throw ValidationError("suite requires an action stanza in the workspace");
    return *ws.bundle;
}

void finish(SuiteResult& res) {
    std::sort(res.rows.begin(), res.rows.end(),
              [](const SuiteRow& a, const SuiteRow& b) { return a.case_key < b.case_key; });
    for (auto& r : res.rows) {
        res.passes += r.status == SuiteRow::Pass;
        res.failures += r.status == SuiteRow::Fail;
        res.inconclusive += r.status == SuiteRow::Inconclusive;
    }
}

SuiteResult suite_semicovering(const Workspace& ws, uint64_t seed, int budget) {
    SuiteResult res{"semicovering-mod", {}, 0, 0, 0};
    const auto& B = need_bundle(ws);
    auto mods = ws.lambda_modules();
    for (auto& [nm, m] : mods)
        for (auto& [nn, n] : mods) {
            SemicovReport rep = verify_semicovering_module(B, *m, *n, seed, budget);
            SuiteRow row;
            row.case_key = nm + "|" + nn;
            row.branch = std::to_string(rep.branch);
            row.lhs = (long long)rep.lhs;
            row.rhs = (long long)rep.rhs;
            row.status = rep.stabilizer_inconclusive ? SuiteRow::Inconclusive
                         : rep.pass                  ? SuiteRow::Pass
                                                     : SuiteRow::Fail;
            res.rows.push_back(std::move(row));
        }
    finish(res);
    return res;
}

SuiteResult suite_hgcm(const Workspace& ws, uint64_t seed, int budget) {
    SuiteResult res{"hgcm", {}, 0, 0, 0};
    const auto& B = need_bundle(ws);
    auto mors = ws.lambda_morphisms();
    static const char* case_names[] = {"-", "I", "II", "III", "IV"};
    for (auto& [nf, f] : mors)
        for (auto& [nh, h] : mors) {
            HgcmReport rep = verify_hgcm(B, *f, *h, seed, budget);
            SuiteRow row;
            row.case_key = nf + "|" + nh;
            row.branch = case_names[rep.hgcm_case];
            row.lhs = (long long)rep.lhs;
            row.rhs = rep.rhs.empty() ? 0 : (long long)rep.rhs[0].second;
            row.status = rep.stabilizer_inconclusive ? SuiteRow::Inconclusive
                         : rep.pass                  ? SuiteRow::Pass
                                                     : SuiteRow::Fail;
            // case III carries two displays; surface the second one too
            if (rep.rhs.size() > 1) {
                SuiteRow row2 = row;
                row2.case_key = nf + "|" + nh + "|alt";
                row2.rhs = (long long)rep.rhs[1].second;
                row2.status = row.status == SuiteRow::Inconclusive ? SuiteRow::Inconclusive
                              : rep.lhs == rep.rhs[1].second       ? SuiteRow::Pass
                                                                   : SuiteRow::Fail;
                res.rows.push_back(std::move(row2));
            }
            res.rows.push_back(std::move(row));
        }
    finish(res);
    return res;
}

SuiteResult suite_adjunction(const Workspace& ws, uint64_t seed, int /*budget*/) {
    SuiteResult res{"adjunction", {}, 0, 0, 0};
    const auto& B = need_bundle(ws);
    for (auto& [nx, x] : ws.lambda_modules())
        for (auto& [nm, m] : ws.skew_modules()) {
            AdjunctionReport rep = adjunction_check(B, *x, *m, seed);
            SuiteRow row;
            row.case_key = "mod:" + nx + "|" + nm;
            row.branch = "-";
            row.lhs = (long long)rep.lhs_dim;
            row.rhs = (long long)rep.rhs_dim;
            row.status = rep.ok() ? SuiteRow::Pass : SuiteRow::Fail;
            res.rows.push_back(std::move(row));
        }
    for (auto& [nf, f] : ws.lambda_morphisms())
        for (auto& [nm, m] : ws.skew_morphisms()) {
            HadjReport rep = h_adjunction_check(B, *f, *m, seed);
            SuiteRow row;
            row.case_key = "H:" + nf + "|" + nm;
            row.branch = rep.mono_pair ? "S(mod)" : "-";
            row.lhs = (long long)rep.lhs_dim;
            row.rhs = (long long)rep.rhs_dim;
            bool ok = rep.ok() && (!rep.mono_pair || rep.mono_preserved);
            row.status = ok ? SuiteRow::Pass : SuiteRow::Fail;
            res.rows.push_back(std::move(row));
        }
    finish(res);
    return res;
}

SuiteResult suite_gstab(const Workspace& ws, uint64_t seed, int budget) {
    SuiteResult res{"gstab", {}, 0, 0, 0};
    const auto& B = need_bundle(ws);
    auto mors = ws.lambda_morphisms();
    std::vector<std::pair<std::string, const MorphismObject*>> indec;
    for (auto& [nf, f] : mors) {
        GstabReport rep = verify_gstab(B, *f, seed, budget);
        SuiteRow r1{"p1:" + nf, "-", rep.part1 ? 1 : 0, 1,
                    rep.inconclusive ? SuiteRow::Inconclusive
                    : rep.part1      ? SuiteRow::Pass
                                     : SuiteRow::Fail};
        SuiteRow r2{"p2:" + nf, "-", rep.part2 ? 1 : 0, 1,
                    rep.inconclusive ? SuiteRow::Inconclusive
                    : rep.part2      ? SuiteRow::Pass
                                     : SuiteRow::Fail};
        res.rows.push_back(std::move(r1));
        res.rows.push_back(std::move(r2));
        if (f->src.dim + f->tgt.dim > 0) {
            IndecResult ir = h_indecomposable(*f, seed, budget);
            if (ir.kind == IndecResult::Indecomposable) indec.emplace_back(nf, f);
        }
    }
    for (auto& [n1, f1] : indec)
        for (auto& [n2, f2] : indec) {
            if (n1 >= n2) continue;
            GstabPart3 p3 = verify_gstab_part3(B, *f1, *f2, seed, budget);
            if (!p3.applicable && !p3.inconclusive) continue;
            SuiteRow row{"p3:" + n1 + "|" + n2, "g=" + std::to_string(p3.witness_g),
                         p3.pass ? 1 : 0, 1,
                         p3.inconclusive ? SuiteRow::Inconclusive
                         : p3.pass       ? SuiteRow::Pass
                                         : SuiteRow::Fail};
            res.rows.push_back(std::move(row));
        }
    finish(res);
    return res;
}

SuiteResult suite_gcf(const Workspace& ws, uint64_t seed, int budget) {
    SuiteResult res{"gcf", {}, 0, 0, 0};
    const auto& B = need_bundle(ws);
    auto fts = ws.lambda_functors();
    static const char* case_names[] = {"-", "I", "II", "III", "IV"};
    for (auto& [n1, t1] : fts)
        for (auto& [n2, t2] : fts) {
            GcfReport rep = verify_gcf(B, *t1, *t2, seed, budget);
            SuiteRow row;
            row.case_key = n1 + "|" + n2;
            row.branch = case_names[rep.gcf_case];
            row.lhs = (long long)rep.lhs;
            row.rhs = rep.rhs.empty() ? 0 : (long long)rep.rhs[0].second;
            row.status = rep.stabilizer_inconclusive ? SuiteRow::Inconclusive
                         : rep.pass                  ? SuiteRow::Pass
                                                     : SuiteRow::Fail;
            if (rep.rhs.size() > 1) {
                SuiteRow row2 = row;
                row2.case_key = n1 + "|" + n2 + "|alt";
                row2.rhs = (long long)rep.rhs[1].second;
                row2.status = row.status == SuiteRow::Inconclusive ? SuiteRow::Inconclusive
                              : rep.lhs == rep.rhs[1].second       ? SuiteRow::Pass
                                                                   : SuiteRow::Fail;
                res.rows.push_back(std::move(row2));
            }
            res.rows.push_back(row);
            if (n1 == n2) {
                SuiteRow srow{"sfm:" + n1, "-", rep.sfm_agrees == 1 ? 1 : 0, 1,
                              rep.stabilizer_inconclusive || rep.sfm_agrees == -1
                                  ? SuiteRow::Inconclusive
                              : rep.sfm_agrees == 1 ? SuiteRow::Pass
                                                    : SuiteRow::Fail};
                res.rows.push_back(std::move(srow));
            }
        }
    finish(res);
    return res;
}

SuiteResult suite_phi(const Workspace& ws, uint64_t seed, int budget) {
    SuiteResult res{"phi-exact-faithful", {}, 0, 0, 0};
    const auto& B = need_bundle(ws);
    auto fts = ws.lambda_functors();
    auto xbars = ws.skew_modules();
    std::vector<FDModule> catalog;
    for (auto& [n, m] : ws.lambda_modules()) catalog.push_back(*m);
    for (auto& [nt, t] : fts) {
        for (auto& [nx, x] : xbars) {
            ExactnessRow er = phi_exactness_at(B, *t, *x);
            res.rows.push_back(SuiteRow{"exact:" + nt + "@" + nx, "-", (long long)er.value,
                                        (long long)(er.hom_n - er.rank),
                                        er.exact ? SuiteRow::Pass : SuiteRow::Fail});
            // the pointwise phi identity, the content of phi(T) = T^ o F^lambda
            EvalResult left = evaluate(phi(B, *t), *x);
            EvalResult right = evaluate(*t, restrict_module(B, *x));
            res.rows.push_back(SuiteRow{"point:" + nt + "@" + nx, "-", (long long)left.dim,
                                        (long long)right.dim,
                                        left.dim == right.dim ? SuiteRow::Pass : SuiteRow::Fail});
            PhiPointReport pr = phi_pointwise(B, *t, *x, catalog, seed, budget);
            SuiteRow crow{"case:" + nt + "@" + nx, std::to_string(pr.case_kind),
                          (long long)pr.v_phi, (long long)pr.v_case,
                          pr.inconclusive && pr.case_kind == 0 ? SuiteRow::Inconclusive
                          : pr.pass                            ? SuiteRow::Pass
                                                               : SuiteRow::Fail};
            res.rows.push_back(std::move(crow));
        }
    }
    for (auto& [n1, t1] : fts)
        for (auto& [n2, t2] : fts) {
            FaithfulReport fr = phi_faithful_on_pair(B, *t1, *t2);
            res.rows.push_back(SuiteRow{"faithful:" + n1 + "|" + n2, "-", (long long)fr.image_rank,
                                        (long long)fr.nat_dim,
                                        fr.injective ? SuiteRow::Pass : SuiteRow::Fail});
        }
    finish(res);
    return res;
}

SuiteResult suite_yoneda(const Workspace& ws, uint64_t /*seed*/, int /*budget*/) {
    SuiteResult res{"yoneda-square", {}, 0, 0, 0};
    const auto& B = need_bundle(ws);
    for (auto& [nf, f] : ws.lambda_morphisms())
        for (auto& [nx, x] : ws.skew_modules()) {
            YonedaReport rep = verify_yoneda_square(B, *f, *x);
            res.rows.push_back(SuiteRow{nf + "@" + nx, "-", (long long)rep.lhs_dim,
                                        (long long)rep.rhs_dim,
                                        rep.ok() ? SuiteRow::Pass : SuiteRow::Fail});
        }
    finish(res);
    return res;
}

SuiteResult suite_radical(const Workspace& ws, uint64_t seed, int budget) {
    SuiteResult res{"radical-preservation", {}, 0, 0, 0};
    const auto& B = need_bundle(ws);
    if (ws.universe_lambda.empty() || ws.universe_skew.empty())
        throw ValidationError("radical-preservation needs lambda and skew universe stanzas");
    std::vector<FDModule> uni_l, uni_s;
    for (auto& n : ws.universe_lambda) uni_l.push_back(*ws.find_module(n));
    for (auto& n : ws.universe_skew) uni_s.push_back(*ws.find_module(n));
    // nilpotency: smallest n with rad^n = 0 over lambda, capped
    size_t nmax = 1;
    {
        auto rad = B.lambda->radical;
        RowSpan span(B.lambda->field, B.lambda->dim());
        for (auto& r : rad) span.insert(r);
        std::vector<std::vector<uint32_t>> power = span.rows;
        while (!power.empty() && nmax < 8) {
            ++nmax;
            power = span_products(*B.lambda, power, span.rows);
        }
    }
    auto dims_l = rad_power_dims(uni_l, nmax, seed, budget);
    auto dims_s = rad_power_dims(uni_s, nmax, seed, budget);
    const size_t ng = B.act.group.size();
    // locate pushdowns and twists inside the universes
    auto locate = [&](const FDModule& m, const std::vector<FDModule>& uni) -> int {
        for (size_t i = 0; i < uni.size(); ++i) {
            IsoResult iso = modules_isomorphic(m, uni[i], seed, budget);
            if (iso.kind == IsoResult::Iso) return (int)i;
        }
        return -1;
    };
    std::vector<int> push_pos(uni_l.size());
    std::vector<std::vector<int>> twist_pos(uni_l.size(), std::vector<int>(ng));
    for (size_t i = 0; i < uni_l.size(); ++i) {
        push_pos[i] = locate(pushdown_full(B, uni_l[i]), uni_s);
        for (uint32_t g = 0; g < ng; ++g)
            twist_pos[i][g] = locate(twist(B.act, g, uni_l[i]), uni_l);
    }
    for (size_t n = 1; n <= nmax; ++n)
        for (size_t i = 0; i < uni_l.size(); ++i)
            for (size_t j = 0; j < uni_l.size(); ++j) {
                SuiteRow row;
                row.case_key = "n" + std::to_string(n) + ":" + ws.universe_lambda[i] + "|" +
                               ws.universe_lambda[j];
                row.branch = "sum_g";
                if (push_pos[i] < 0 || push_pos[j] < 0) {
                    row.status = SuiteRow::Inconclusive;
                    res.rows.push_back(std::move(row));
                    continue;
                }
                row.lhs = (long long)dims_s[n - 1][push_pos[i]][push_pos[j]];
                long long rhs = 0;
                bool inc = false;
                for (uint32_t g = 0; g < ng; ++g) {
                    if (twist_pos[i][g] < 0) {
                        inc = true;
                        break;
                    }
                    rhs += (long long)dims_l[n - 1][twist_pos[i][g]][j];
                }
                row.rhs = rhs;
                row.status = inc               ? SuiteRow::Inconclusive
                             : row.lhs == rhs ? SuiteRow::Pass
                                              : SuiteRow::Fail;
                res.rows.push_back(std::move(row));
            }
    finish(res);
    return res;
}

SuiteResult suite_brauer(const Workspace& ws, uint64_t seed, int budget) {
    SuiteResult res{"brauer-all", {}, 0, 0, 0};
    const FieldSpec& F = ws.field;
    for (auto& [name, gd] : ws.brauer_graphs) {
        const auto& [g, d] = gd;
        auto push_row = [&](const std::string& what, bool ok, long long lhs = 1, long long rhs = 1) {
            res.rows.push_back(SuiteRow{name + ":" + what, "-", lhs, rhs,
                                        ok ? SuiteRow::Pass : SuiteRow::Fail});
        };
        SkewBrauerGraph cover = double_cover(g, d);
        push_row("cover-ordinary", cover.is_ordinary());
        push_row("cover-size", cover.size() == 2 * g.size(), (long long)cover.size(),
                 (long long)(2 * g.size()));
        push_row("cover-edges", cover.edges().size() == cover.size() / 2,
                 (long long)cover.edges().size(), (long long)(cover.size() / 2));
        bool mults_ok = true;
        for (uint32_t h = 0; h < g.size(); ++h)
            for (uint32_t i = 0; i < 2; ++i) mults_ok &= cover.mult[2 * h + i] == g.mult[h];
        push_row("cover-mults", mults_ok);
        bool d_zero = std::all_of(d.d.begin(), d.d.end(), [](uint32_t x) { return x == 0; });
        if (d_zero && g.is_ordinary()) {
            auto comps = brauer_components(cover);
            bool two_copies = comps.size() == 2 * brauer_components(g).size();
            for (auto& comp : comps)
                two_copies = two_copies && brauer_isomorphic(brauer_subgraph(cover, comp), g);
            push_row("disjoint-copies", two_copies, (long long)comps.size(),
                     (long long)(2 * brauer_components(g).size()));
        }
        auto data = bg_algebra(F, cover);
        push_row("biserial", is_special_biserial(data.bqa).ok);
        push_row("symmetric", is_symmetric(*data.bqa.alg, seed, budget));
        SkewBGResult r = skew_bg_algebra(F, g, d);
        // brute-force oracle for dim f (B_d G) f
        RowSpan span(F, r.bundle.full->dim());
        for (size_t b = 0; b < r.bundle.full->dim(); ++b) {
            std::vector<uint32_t> eb(r.bundle.full->dim(), 0);
            eb[b] = 1;
            span.insert(r.bundle.full->mul(r.f, r.bundle.full->mul(eb, r.f)));
        }
        push_row("corner-dim", r.corner.alg->dim() == span.dim(), (long long)r.corner.alg->dim(),
                 (long long)span.dim());
        GhatFormulaReport gh = validate_ghat_formulas(r, d);
        push_row("ghat-idempotents", gh.o_edges_fixed && gh.x_components_swapped);
        push_row("ghat-arrow-sign", gh.arrow_sign_ok, (long long)gh.arrows_checked,
                 (long long)gh.arrows_checked);
        // level action has order two on the cover algebra
        push_row("level-order",
                 mat_mul(F, r.level_action.mats[1 % r.level_action.group.size()],
                         r.level_action.mats[1 % r.level_action.group.size()]) ==
                     Mat::identity(r.cover_alg.bqa.alg->dim()));
    }
    finish(res);
    return res;
}

} // namespace

SuiteResult run_suite(const Workspace& ws, const std::string& suite, uint64_t seed, int budget) {
    if (suite == "semicovering-mod") return suite_semicovering(ws, seed, budget);
    if (suite == "hgcm") return suite_hgcm(ws, seed, budget);
    if (suite == "adjunction") return suite_adjunction(ws, seed, budget);
    if (suite == "gstab") return suite_gstab(ws, seed, budget);
    if (suite == "gcf") return suite_gcf(ws, seed, budget);
    if (suite == "phi-exact-faithful") return suite_phi(ws, seed, budget);
    if (suite == "yoneda-square") return suite_yoneda(ws, seed, budget);
    if (suite == "radical-preservation") return suite_radical(ws, seed, budget);
    if (suite == "brauer-all") return suite_brauer(ws, seed, budget);
    throw UnknownSuite("unknown suite '" + suite + "'");
}

} // namespace skewcov
