#include "skewcov/quiver.hpp"

#include <algorithm>
#include <set>

namespace skewcov {

void Quiver::validate() const {
    std::set<std::string> seen;
    for (auto& v : vertices)
        if (!seen.insert(v).second) throw ValidationError("quiver: duplicate vertex id " + v);
    for (auto& a : arrows) {
        if (!seen.insert(a.name).second) throw ValidationError("quiver: duplicate id " + a.name);
        if (a.src >= vertices.size() || a.tgt >= vertices.size())
            throw ValidationError("quiver: arrow " + a.name + " has undeclared endpoint");
    }
}

size_t Quiver::vertex_index(const std::string& v) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == v) return i;
    throw ValidationError("quiver: unknown vertex " + v);
}

size_t Quiver::arrow_index(const std::string& a) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == a) return i;
    throw ValidationError("quiver: unknown arrow " + a);
}

bool path_less(const Quiver& q, const Path& a, const Path& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    for (size_t i = 0; i < a.arrows.size(); ++i) {
        const std::string& x = q.arrows[a.arrows[i]].name;
        const std::string& y = q.arrows[b.arrows[i]].name;
        if (x != y) return x < y;
    }
    return q.vertices[a.src] < q.vertices[b.src];
}

static std::vector<uint32_t> path_key(const Path& p) {
    std::vector<uint32_t> k;
    k.reserve(p.arrows.size() + 1);
    k.push_back(p.src);
    k.insert(k.end(), p.arrows.begin(), p.arrows.end());
    return k;
}

static std::string path_label(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) return "e_" + q.vertices[p.src];
    std::string s;
    for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += ".";
        s += q.arrows[p.arrows[i]].name;
    }
    return s;
}

// Column order for the ideal span: largest path first, so pivots land on the
// graded-lex-largest paths and normal forms skew toward short paths.
static std::vector<uint32_t> reversed(const std::vector<uint32_t>& v) {
    return {v.rbegin(), v.rend()};
}

static LinComb reduce_terms(const BoundQuiverAlgebra& B, const FieldSpec& F,
                            const std::vector<std::pair<uint32_t, Path>>& terms);

LinComb BoundQuiverAlgebra::reduce_combination(
    const std::vector<std::pair<uint32_t, Path>>& terms) const {
    return reduce_terms(*this, alg->field, terms);
}

static LinComb reduce_terms(const BoundQuiverAlgebra& B, const FieldSpec& F,
                            const std::vector<std::pair<uint32_t, Path>>& terms) {
    const auto& all_paths = B.all_paths;
    const auto& relations = B.relations;
    const auto& path_index = B.path_index;
    const auto& ideal_rows = B.ideal_rows;
    const auto& ideal_pivots = B.ideal_pivots;
    const auto& normal_of_path = B.normal_of_path;
    size_t P = all_paths.size();
    std::vector<uint32_t> vec(P, 0);
    for (auto& [c, p] : terms) {
        if (p.arrows.size() > relations.nilpotency_bound) continue;   // dead by nilpotency
        auto it = path_index.find(path_key(p));
        if (it == path_index.end()) throw ValidationError("reduce: path outside enumeration");
        vec[it->second] = F.add(vec[it->second], c);
    }
    auto resid = reversed(vec);
    for (size_t i = 0; i < ideal_rows.size(); ++i) {
        uint32_t c = resid[ideal_pivots[i]];
        if (!c) continue;
        for (size_t j = 0; j < P; ++j)
            resid[j] = F.sub(resid[j], F.mul(c, ideal_rows[i][j]));
    }
    LinComb out;
    for (size_t j = 0; j < P; ++j) {
        if (!resid[j]) continue;
        size_t pidx = P - 1 - j;   // undo the column reversal
        size_t b = normal_of_path[pidx];
        if (b == (size_t)-1) throw ValidationError("reduce: residue hit a non-normal path");
        out.emplace_back((uint32_t)b, resid[j]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

LinComb BoundQuiverAlgebra::reduce_path(const Path& p) const {
    return reduce_combination({{1u, p}});
}

bool BoundQuiverAlgebra::in_ideal(const Path& p) const { return reduce_path(p).empty(); }

size_t BoundQuiverAlgebra::vertex_of_basis(size_t b) const {
    if (!basis_paths[b].arrows.empty()) throw ValidationError("vertex_of_basis: not a trivial path");
    return basis_paths[b].src;
}

BoundQuiverAlgebra path_basis(const FieldSpec& F, const Quiver& q, const RelationSet& rels,
                              size_t path_cap) {
    q.validate();
    for (auto& rel : rels.relations) {
        if (rel.terms.empty()) throw ValidationError("relation with no terms");
        uint32_t s = rel.terms[0].second.src, t = rel.terms[0].second.target(q);
        for (auto& [c, p] : rel.terms) {
            if (p.arrows.size() < 2) throw ValidationError("relation term of length < 2");
            if (p.src != s || p.target(q) != t)
                throw ValidationError("relation terms do not share source/target");
            for (size_t i = 0; i + 1 < p.arrows.size(); ++i)
                if (q.arrows[p.arrows[i]].tgt != q.arrows[p.arrows[i + 1]].src)
                    throw ValidationError("relation term is not a composable path");
        }
    }
    const uint32_t N = rels.nilpotency_bound;
    if (N < 1) throw ValidationError("nilpotency_bound must be >= 1");

    BoundQuiverAlgebra B;
    B.quiver = q;
    B.relations = rels;

    // enumerate paths by length, each level sorted graded-lex
    std::vector<std::vector<Path>> levels(N + 1);
    for (uint32_t v = 0; v < q.vertices.size(); ++v) levels[0].push_back(Path{v, {}});
    size_t total = levels[0].size();
    for (uint32_t len = 1; len <= N; ++len) {
        for (auto& p : levels[len - 1]) {
            uint32_t t = p.target(q);
            for (uint32_t a = 0; a < q.arrows.size(); ++a) {
                if (q.arrows[a].src != t) continue;
                Path np = p;
                np.arrows.push_back(a);
                levels[len].push_back(std::move(np));
            }
        }
        total += levels[len].size();
        if (total > path_cap) throw DimensionBlowup("path_basis: path count exceeds cap");
    }
    for (auto& lv : levels)
        std::sort(lv.begin(), lv.end(), [&](const Path& a, const Path& b) { return path_less(q, a, b); });
    for (auto& lv : levels)
        for (auto& p : lv) B.all_paths.push_back(p);
    const size_t P = B.all_paths.size();
    for (size_t i = 0; i < P; ++i) B.path_index[path_key(B.all_paths[i])] = i;

    // ideal span: all u * g * v truncated at length N, columns reversed
    RowSpan W(F, P);
    for (auto& rel : rels.relations) {
        uint32_t s = rel.terms[0].second.src, t = rel.terms[0].second.target(q);
        for (auto& u : B.all_paths) {
            if (u.target(q) != s) continue;
            for (auto& v : B.all_paths) {
                if (v.src != t) continue;
                std::vector<uint32_t> vec(P, 0);
                bool any = false;
                for (auto& [c, g] : rel.terms) {
                    size_t len = u.arrows.size() + g.arrows.size() + v.arrows.size();
                    if (len > N) continue;   // truncated away
                    Path w{u.src, u.arrows};
                    w.arrows.insert(w.arrows.end(), g.arrows.begin(), g.arrows.end());
                    w.arrows.insert(w.arrows.end(), v.arrows.begin(), v.arrows.end());
                    size_t idx = B.path_index.at(path_key(w));
                    vec[idx] = F.add(vec[idx], c);
                    any = true;
                }
                if (any) W.insert(reversed(vec));
            }
        }
    }
    B.ideal_rows = W.rows;
    B.ideal_pivots = W.pivots;

    // admissibility: every path of length N reduces to zero
    for (auto& p : levels[N]) {
        std::vector<uint32_t> vec(P, 0);
        vec[B.path_index.at(path_key(p))] = 1;
        if (!W.contains(reversed(vec)))
            throw NotAdmissible("path_basis: length-" + std::to_string(N) + " path " +
                                path_label(q, p) + " does not reduce to zero");
    }

    // normal forms = non-pivot paths
    std::vector<bool> pivot_path(P, false);
    for (size_t piv : W.pivots) pivot_path[P - 1 - piv] = true;
    B.normal_of_path.assign(P, (size_t)-1);
    std::vector<std::string> labels;
    for (size_t i = 0; i < P; ++i) {
        if (pivot_path[i]) continue;
        B.normal_of_path[i] = B.basis_paths.size();
        B.basis_paths.push_back(B.all_paths[i]);
        labels.push_back(path_label(q, B.all_paths[i]));
    }
    const size_t d = B.basis_paths.size();

    // multiplication: concatenate then reduce
    std::vector<std::vector<LinComb>> table(d, std::vector<LinComb>(d));
    for (size_t i = 0; i < d; ++i) {
        const Path& pi = B.basis_paths[i];
        for (size_t j = 0; j < d; ++j) {
            const Path& pj = B.basis_paths[j];
            if (pi.target(q) != pj.src) continue;
            if (pi.arrows.size() + pj.arrows.size() > N) continue;   // dead by nilpotency
            Path w{pi.src, pi.arrows};
            w.arrows.insert(w.arrows.end(), pj.arrows.begin(), pj.arrows.end());
            table[i][j] = reduce_terms(B, F, {{1u, w}});
        }
    }

    std::vector<std::vector<uint32_t>> idems;
    std::vector<uint32_t> unit(d, 0);
    std::vector<std::vector<uint32_t>> rad;
    for (size_t i = 0; i < d; ++i) {
        if (B.basis_paths[i].arrows.empty()) {
            std::vector<uint32_t> e(d, 0);
            e[i] = 1;
            idems.push_back(std::move(e));
            unit[i] = 1;
        } else {
            std::vector<uint32_t> r(d, 0);
            r[i] = 1;
            rad.push_back(std::move(r));
        }
    }
    B.alg = make_algebra(F, std::move(labels), std::move(table), std::move(idems),
                         std::move(unit), std::move(rad));
    return B;
}

GabrielQuiver gabriel_quiver(const StructureConstantAlgebra& A,
                             const std::vector<std::vector<uint32_t>>& rad_basis) {
    const FieldSpec& F = A.field;
    const size_t d = A.dim();
    RowSpan J(F, d);
    for (auto& r : rad_basis) J.insert(r);

    for (uint32_t i = 0; i < d; ++i) {
        std::vector<uint32_t> b(d, 0);
        b[i] = 1;
        for (auto& r : J.rows)
            if (!J.contains(A.mul(r, b)) || !J.contains(A.mul(b, r)))
                throw ValidationError("gabriel_quiver: rad_basis is not a two-sided ideal");
    }
    {
        std::vector<std::vector<uint32_t>> power = J.rows;
        size_t k = 0;
        while (!power.empty()) {
            if (++k > d) throw NotNilpotent("gabriel_quiver: J is not nilpotent");
            power = span_products(A, power, J.rows);
        }
    }

    // A/J must be split basic: diagonal corners one-dimensional, off-diagonal zero
    const size_t nv = A.idempotents.size();
    for (size_t i = 0; i < nv; ++i)
        for (size_t j = 0; j < nv; ++j) {
            RowSpan corner(F, d);
            for (uint32_t b = 0; b < d; ++b) {
                std::vector<uint32_t> eb(d, 0);
                eb[b] = 1;
                auto x = A.mul(A.idempotents[i], A.mul(eb, A.idempotents[j]));
                corner.insert(J.reduce(x));
            }
            size_t expect = (i == j) ? 1 : 0;
            if (corner.dim() != expect)
                throw NotBasic("gabriel_quiver: corner (" + std::to_string(i) + "," +
                               std::to_string(j) + ") of A/J has dim " + std::to_string(corner.dim()));
        }

    auto J2 = span_products(A, J.rows, J.rows);
    GabrielQuiver out;
    out.vertices = nv;
    out.multiplicity = Mat(nv, nv);
    for (size_t i = 0; i < nv; ++i) out.quiver.vertices.push_back("v" + std::to_string(i));
    for (size_t i = 0; i < nv; ++i)
        for (size_t j = 0; j < nv; ++j) {
            size_t m = sandwich_dim(A, i, J.rows, j) - sandwich_dim(A, i, J2, j);
            out.multiplicity.at(i, j) = (uint32_t)m;
            for (size_t k = 0; k < m; ++k)
                out.quiver.arrows.push_back({"a" + std::to_string(i) + "_" + std::to_string(j) +
                                                 "_" + std::to_string(k),
                                             (uint32_t)i, (uint32_t)j});
        }
    return out;
}

} // namespace skewcov
