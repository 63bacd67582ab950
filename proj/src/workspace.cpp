#include "skewcov/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace skewcov {

const BoundQuiverAlgebra* Workspace::find_algebra(const std::string& name) const {
    for (auto& [n, a] : algebras)
        if (n == name) return &a;
    return nullptr;
}

const FDModule* Workspace::find_module(const std::string& name) const {
    for (auto& [n, m] : modules)
        if (n == name) return &m;
    return nullptr;
}

const MorphismObject* Workspace::find_morphism(const std::string& name) const {
    for (auto& [n, m] : morphisms)
        if (n == name) return &m;
    return nullptr;
}

std::vector<std::pair<std::string, const FDModule*>> Workspace::lambda_modules() const {
    std::vector<std::pair<std::string, const FDModule*>> out;
    if (!bundle) return out;
    for (auto& [n, m] : modules)
        if (m.alg.get() == bundle->lambda.get()) out.emplace_back(n, &m);
    return out;
}

std::vector<std::pair<std::string, const FDModule*>> Workspace::skew_modules() const {
    std::vector<std::pair<std::string, const FDModule*>> out;
    if (!bundle) return out;
    for (auto& [n, m] : modules)
        if (m.alg.get() == bundle->full.get()) out.emplace_back(n, &m);
    return out;
}

std::vector<std::pair<std::string, const MorphismObject*>> Workspace::lambda_morphisms() const {
    std::vector<std::pair<std::string, const MorphismObject*>> out;
    if (!bundle) return out;
    for (auto& [n, m] : morphisms)
        if (m.src.alg.get() == bundle->lambda.get()) out.emplace_back(n, &m);
    return out;
}

std::vector<std::pair<std::string, const MorphismObject*>> Workspace::skew_morphisms() const {
    std::vector<std::pair<std::string, const MorphismObject*>> out;
    if (!bundle) return out;
    for (auto& [n, m] : morphisms)
        if (m.src.alg.get() == bundle->full.get()) out.emplace_back(n, &m);
    return out;
}

std::vector<std::pair<std::string, const FPFunctor*>> Workspace::lambda_functors() const {
    std::vector<std::pair<std::string, const FPFunctor*>> out;
    if (!bundle) return out;
    for (auto& [n, t] : functors)
        if (t.pres.src.alg.get() == bundle->lambda.get()) out.emplace_back(n, &t);
    return out;
}

namespace {

struct Line {
    int number;
    std::string text;
};

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

long long parse_int(const std::string& s, int line) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) fail(line, "trailing characters in integer '" + s + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        fail(line, "expected an integer, got '" + s + "'");
    }
}

// cycle notation over named points: "(a b)(c)" -> permutation by index
std::vector<uint32_t> parse_cycles(const std::string& s, const std::vector<std::string>& points,
                                   int line) {
    std::vector<uint32_t> perm(points.size());
    for (size_t i = 0; i < points.size(); ++i) perm[i] = (uint32_t)i;
    auto index_of = [&](const std::string& name) -> uint32_t {
        for (size_t i = 0; i < points.size(); ++i)
            if (points[i] == name) return (uint32_t)i;
        fail(line, "unknown point '" + name + "' in cycle notation");
    };
    size_t pos = 0;
    std::vector<bool> moved(points.size(), false);
    while (pos < s.size()) {
        while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
        if (pos >= s.size()) break;
        if (s[pos] != '(') fail(line, "expected '(' in cycle notation");
        size_t close = s.find(')', pos);
        if (close == std::string::npos) fail(line, "unclosed cycle");
        auto names = split_ws(s.substr(pos + 1, close - pos - 1));
        std::vector<uint32_t> cyc;
        for (auto& n : names) cyc.push_back(index_of(n));
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (moved[cyc[i]]) fail(line, "point repeated across cycles");
            moved[cyc[i]] = true;
            perm[cyc[i]] = cyc[(i + 1) % cyc.size()];
        }
        pos = close + 1;
    }
    return perm;
}

// "[1 0] [0 1]" -> rows
std::vector<std::vector<long long>> parse_rows(const std::string& s, int line) {
    std::vector<std::vector<long long>> rows;
    size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
        if (pos >= s.size()) break;
        if (s[pos] != '[') fail(line, "expected '[' in matrix row list");
        size_t close = s.find(']', pos);
        if (close == std::string::npos) fail(line, "unclosed matrix row");
        std::vector<long long> row;
        for (auto& w : split_ws(s.substr(pos + 1, close - pos - 1)))
            row.push_back(parse_int(w, line));
        rows.push_back(std::move(row));
        pos = close + 1;
    }
    return rows;
}

// "(1)" or "(1,0)" -> group element tuple
std::vector<uint32_t> parse_tuple(const std::string& s, int line) {
    std::string t = trim(s);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        fail(line, "expected a group element tuple like (1) or (1,0)");
    std::string inner = t.substr(1, t.size() - 2);
    for (auto& c : inner)
        if (c == ',') c = ' ';
    std::vector<uint32_t> out;
    for (auto& w : split_ws(inner)) out.push_back((uint32_t)parse_int(w, line));
    return out;
}

struct Stanza {
    int line;
    std::string kind, name;
    std::vector<std::pair<int, std::string>> entries;   // raw "key: value" lines
};

struct ParserState {
    Workspace ws;

    AlgebraPtr resolve_algebra_ref(const std::string& name, int line) const {
        if (name == "full") {
            if (!ws.bundle) fail(line, "'full' used before any action stanza");
            return ws.bundle->full;
        }
        if (name == "corner") {
            if (!ws.bundle) fail(line, "'corner' used before any action stanza");
            return ws.bundle->corner.alg;
        }
        if (auto* a = ws.find_algebra(name)) return a->alg;
        fail(line, "unknown algebra '" + name + "'");
    }

    const FDModule& module_ref(const std::string& name, int line) const {
        if (auto* m = ws.find_module(name)) return *m;
        fail(line, "unknown module '" + name + "'");
    }

    const MorphismObject& morphism_ref(const std::string& name, int line) const {
        if (auto* m = ws.find_morphism(name)) return *m;
        fail(line, "unknown morphism '" + name + "'");
    }
};

// relation text: "<coeff> <path> [+|- <coeff> <path>]..." with path "a.b.c"
Relation parse_relation(const FieldSpec& F, const std::string& text, const Quiver& q, int line) {
    Relation rel;
    auto words = split_ws(text);
    size_t i = 0;
    long long sign = 1;
    while (i < words.size()) {
        if (words[i] == "+" || words[i] == "-") {
            sign = words[i] == "-" ? -1 : 1;
            ++i;
        }
        if (i + 1 >= words.size()) fail(line, "relation term needs a coefficient and a path");
        long long coeff = sign * parse_int(words[i], line);
        std::string pathstr = words[i + 1];
        i += 2;
        sign = 1;
        Path p;
        std::vector<std::string> arrow_names;
        std::string cur;
        for (char c : pathstr + ".") {
            if (c == '.') {
                if (!cur.empty()) arrow_names.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (arrow_names.empty()) fail(line, "empty path in relation");
        for (auto& an : arrow_names) p.arrows.push_back((uint32_t)q.arrow_index(an));
        p.src = q.arrows[p.arrows[0]].src;
        for (size_t k = 0; k + 1 < p.arrows.size(); ++k)
            if (q.arrows[p.arrows[k]].tgt != q.arrows[p.arrows[k + 1]].src)
                fail(line, "relation path is not composable");
        rel.terms.emplace_back(F.from_int(coeff), std::move(p));
    }
    return rel;
}

} // namespace

Workspace parse_workspace_text(const std::string& text, std::optional<uint32_t> field_p) {
    // split into stanzas
    std::vector<Stanza> stanzas;
    {
        std::istringstream is(text);
        std::string raw;
        int lineno = 0;
        Stanza* cur = nullptr;
        while (std::getline(is, raw)) {
            ++lineno;
            std::string line = raw;
            size_t hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            line = trim(line);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']') fail(lineno, "unterminated stanza header");
                auto words = split_ws(line.substr(1, line.size() - 2));
                if (words.empty()) fail(lineno, "empty stanza header");
                Stanza s;
                s.line = lineno;
                s.kind = words[0];
                if (words.size() > 1) s.name = words[1];
                if (words.size() > 2) fail(lineno, "too many tokens in stanza header");
                stanzas.push_back(std::move(s));
                cur = &stanzas.back();
            } else {
                if (!cur) fail(lineno, "content before the first stanza");
                cur->entries.emplace_back(lineno, line);
            }
        }
    }

    ParserState st;
    if (field_p) st.ws.field = FieldSpec(*field_p);
    bool field_locked = field_p.has_value();

    auto entry_value = [](const Stanza& s, const std::string& key) -> std::optional<std::string> {
        for (auto& [ln, e] : s.entries) {
            size_t colon = e.find(':');
            if (colon == std::string::npos) continue;
            if (trim(e.substr(0, colon)) == key) return trim(e.substr(colon + 1));
        }
        return std::nullopt;
    };

    std::map<std::string, std::vector<std::string>> names_by_kind;
    auto check_unique = [&](const Stanza& s) {
        if (s.name.empty()) return;
        auto& v = names_by_kind[s.kind];
        if (std::find(v.begin(), v.end(), s.name) != v.end())
            fail(s.line, "duplicate " + s.kind + " name '" + s.name + "'");
        v.push_back(s.name);
    };

    for (auto& s : stanzas) {
        check_unique(s);
        if (s.kind == "field") {
            auto pv = entry_value(s, "p");
            if (!pv) fail(s.line, "field stanza needs p:");
            if (!field_locked) st.ws.field = FieldSpec((uint32_t)parse_int(*pv, s.line));
        } else if (s.kind == "quiver") {
            if (s.name.empty()) fail(s.line, "quiver stanza needs a name");
            Quiver q;
            auto vs = entry_value(s, "vertices");
            if (!vs) fail(s.line, "quiver needs vertices:");
            q.vertices = split_ws(*vs);
            for (auto& [ln, e] : s.entries) {
                size_t colon = e.find(':');
                if (colon == std::string::npos) fail(ln, "expected key: value");
                std::string key = trim(e.substr(0, colon));
                std::string val = trim(e.substr(colon + 1));
                if (key == "arrow") {
                    auto w = split_ws(val);
                    if (w.size() != 3) fail(ln, "arrow needs: name src tgt");
                    q.arrows.push_back({w[0], (uint32_t)q.vertex_index(w[1]),
                                        (uint32_t)q.vertex_index(w[2])});
                } else if (key != "vertices") {
                    fail(ln, "unknown quiver key '" + key + "'");
                }
            }
            q.validate();
            st.ws.quivers.emplace(s.name, std::move(q));
        } else if (s.kind == "algebra") {
            if (s.name.empty()) fail(s.line, "algebra stanza needs a name");
            auto qn = entry_value(s, "quiver");
            if (!qn) fail(s.line, "algebra needs quiver:");
            auto it = st.ws.quivers.find(*qn);
            if (it == st.ws.quivers.end()) fail(s.line, "unknown quiver '" + *qn + "'");
            RelationSet rels;
            rels.nilpotency_bound = 2;
            if (auto nb = entry_value(s, "nilpotency"))
                rels.nilpotency_bound = (uint32_t)parse_int(*nb, s.line);
            for (auto& [ln, e] : s.entries) {
                size_t colon = e.find(':');
                std::string key = trim(e.substr(0, colon));
                if (key != "relation") continue;
                rels.relations.push_back(
                    parse_relation(st.ws.field, trim(e.substr(colon + 1)), it->second, ln));
            }
            st.ws.algebras.emplace_back(s.name, path_basis(st.ws.field, it->second, rels));
        } else if (s.kind == "group") {
            if (s.name.empty()) fail(s.line, "group stanza needs a name");
            auto ov = entry_value(s, "orders");
            if (!ov) fail(s.line, "group needs orders:");
            std::vector<uint32_t> orders;
            for (auto& w : split_ws(*ov)) orders.push_back((uint32_t)parse_int(w, s.line));
            st.ws.groups.emplace(s.name, FiniteAbelianGroup(orders));
        } else if (s.kind == "action") {
            if (st.ws.action) fail(s.line, "only one action stanza is supported per workspace");
            auto an = entry_value(s, "algebra"), gn = entry_value(s, "group");
            if (!an || !gn) fail(s.line, "action needs algebra: and group:");
            const BoundQuiverAlgebra* B = st.ws.find_algebra(*an);
            if (!B) fail(s.line, "unknown algebra '" + *an + "'");
            auto git = st.ws.groups.find(*gn);
            if (git == st.ws.groups.end()) fail(s.line, "unknown group '" + *gn + "'");
            QuiverAction qa;
            qa.gens.resize(git->second.factors());
            for (auto& gd : qa.gens) {
                gd.vertex_perm.resize(B->quiver.vertices.size());
                for (size_t v = 0; v < gd.vertex_perm.size(); ++v) gd.vertex_perm[v] = (uint32_t)v;
                gd.arrow_map.resize(B->quiver.arrows.size());
                for (size_t a = 0; a < gd.arrow_map.size(); ++a) gd.arrow_map[a] = {1u, (uint32_t)a};
            }
            for (auto& [ln, e] : s.entries) {
                auto w = split_ws(e);
                if (w.size() >= 3 && w[0] == "gen") {
                    size_t gi = (size_t)parse_int(w[1], ln);
                    if (gi >= qa.gens.size()) fail(ln, "generator index out of range");
                    std::string key = w[2];
                    if (!key.empty() && key.back() == ':') key.pop_back();
                    size_t colon = e.find(':', e.find(w[2]));
                    std::string val = colon == std::string::npos ? "" : trim(e.substr(colon + 1));
                    if (key == "vertices") {
                        qa.gens[gi].vertex_perm = parse_cycles(val, B->quiver.vertices, ln);
                    } else if (key == "arrow") {
                        // "al -> be" or "al -> -1*be"
                        auto aw = split_ws(val);
                        if (aw.size() != 3 || aw[1] != "->") fail(ln, "arrow map needs 'src -> [c*]dst'");
                        std::string rhs = aw[2];
                        long long scal = 1;
                        size_t star = rhs.find('*');
                        if (star != std::string::npos) {
                            scal = parse_int(rhs.substr(0, star), ln);
                            rhs = rhs.substr(star + 1);
                        }
                        qa.gens[gi].arrow_map[B->quiver.arrow_index(aw[0])] = {
                            st.ws.field.from_int(scal), (uint32_t)B->quiver.arrow_index(rhs)};
                    } else {
                        fail(ln, "unknown action key 'gen " + w[1] + " " + key + "'");
                    }
                }
            }
            st.ws.action_name = s.name.empty() ? std::string("action") : s.name;
            st.ws.action = make_quiver_action(*B, git->second, qa);
            st.ws.bundle = skew_algebra(B->alg, *st.ws.action);
        } else if (s.kind == "module") {
            if (s.name.empty()) fail(s.line, "module stanza needs a name");
            if (auto derive = entry_value(s, "derive")) {
                auto w = split_ws(*derive);
                if (w.empty()) fail(s.line, "empty derive");
                auto need_bundle = [&]() -> const SkewAlgebraBundle& {
                    if (!st.ws.bundle) fail(s.line, "derive '" + w[0] + "' needs an action first");
                    return *st.ws.bundle;
                };
                FDModule m = [&]() -> FDModule {
                    if (w[0] == "pushdown" && w.size() == 2)
                        return pushdown_full(need_bundle(), st.module_ref(w[1], s.line));
                    if (w[0] == "corner" && w.size() == 2)
                        return corner_module(need_bundle(), st.module_ref(w[1], s.line));
                    if (w[0] == "restrict" && w.size() == 2)
                        return restrict_module(need_bundle(), st.module_ref(w[1], s.line));
                    if (w[0] == "twist" && w.size() == 3) {
                        if (!st.ws.action) fail(s.line, "twist needs an action");
                        auto tup = parse_tuple(w[1], s.line);
                        return twist(*st.ws.action, st.ws.action->group.from_tuple(tup),
                                     st.module_ref(w[2], s.line));
                    }
                    if (w[0] == "sum" && w.size() == 3)
                        return direct_sum(st.module_ref(w[1], s.line), st.module_ref(w[2], s.line));
                    if (w[0] == "summand" && w.size() == 3)
                        return summand_module(st.module_ref(w[1], s.line),
                                              (uint64_t)parse_int(w[2], s.line), 64);
                    if (w[0] == "simple" && w.size() == 3)
                        return simple_module(st.resolve_algebra_ref(w[1], s.line),
                                             (size_t)parse_int(w[2], s.line));
                    if (w[0] == "proj" && w.size() == 3)
                        return proj_module(st.resolve_algebra_ref(w[1], s.line),
                                           (size_t)parse_int(w[2], s.line));
                    if (w[0] == "zero" && w.size() == 2)
                        return zero_module(st.resolve_algebra_ref(w[1], s.line));
                    fail(s.line, "unknown module derive '" + *derive + "'");
                }();
                st.ws.modules.emplace_back(s.name, std::move(m));
                continue;
            }
            auto an = entry_value(s, "algebra");
            if (!an) fail(s.line, "module needs algebra: or derive:");
            const BoundQuiverAlgebra* B = st.ws.find_algebra(*an);
            if (!B) fail(s.line, "raw module stanzas need a quiver algebra");
            const Quiver& q = B->quiver;
            std::vector<size_t> dims(q.vertices.size(), 0);
            std::map<std::string, std::vector<std::vector<long long>>> mats;
            for (auto& [ln, e] : s.entries) {
                size_t colon = e.find(':');
                if (colon == std::string::npos) fail(ln, "expected key: value");
                std::string key = trim(e.substr(0, colon));
                std::string val = trim(e.substr(colon + 1));
                auto kw = split_ws(key);
                if (kw.size() == 2 && kw[0] == "dim") {
                    dims[q.vertex_index(kw[1])] = (size_t)parse_int(val, ln);
                } else if (kw.size() == 2 && kw[0] == "mat") {
                    mats[kw[1]] = parse_rows(val, ln);
                } else if (key != "algebra") {
                    fail(ln, "unknown module key '" + key + "'");
                }
            }
            // assemble action matrices from vertex blocks
            size_t total = 0;
            std::vector<size_t> offset(q.vertices.size());
            for (size_t v = 0; v < q.vertices.size(); ++v) {
                offset[v] = total;
                total += dims[v];
            }
            const FieldSpec& F = st.ws.field;
            std::vector<Mat> arrow_mats(q.arrows.size());
            for (size_t a = 0; a < q.arrows.size(); ++a) {
                size_t rs = dims[q.arrows[a].src], cs = dims[q.arrows[a].tgt];
                Mat m(rs, cs);
                auto it = mats.find(q.arrows[a].name);
                if (it != mats.end()) {
                    if (it->second.size() != rs)
                        fail(s.line, "matrix for arrow " + q.arrows[a].name + " has wrong row count");
                    for (size_t r = 0; r < rs; ++r) {
                        if (it->second[r].size() != cs)
                            fail(s.line, "matrix for arrow " + q.arrows[a].name + " has wrong width");
                        for (size_t c = 0; c < cs; ++c) m.at(r, c) = F.from_int(it->second[r][c]);
                    }
                }
                arrow_mats[a] = std::move(m);
            }
            // action of every basis path: product of arrow blocks
            std::vector<Mat> action(B->alg->dim());
            for (size_t b = 0; b < B->alg->dim(); ++b) {
                const Path& p = B->basis_paths[b];
                Mat m(total, total);
                if (p.arrows.empty()) {
                    for (size_t i = 0; i < dims[p.src]; ++i) m.at(offset[p.src] + i, offset[p.src] + i) = 1;
                } else {
                    // block path product landing in (src block) x (tgt block)
                    Mat blk = arrow_mats[p.arrows[0]];
                    for (size_t k = 1; k < p.arrows.size(); ++k)
                        blk = mat_mul(F, blk, arrow_mats[p.arrows[k]]);
                    uint32_t tv = p.target(q);
                    for (size_t i = 0; i < blk.rows; ++i)
                        for (size_t j = 0; j < blk.cols; ++j)
                            m.at(offset[p.src] + i, offset[tv] + j) = blk.at(i, j);
                }
                action[b] = std::move(m);
            }
            st.ws.modules.emplace_back(s.name, make_module(B->alg, total, std::move(action)));
        } else if (s.kind == "morphism") {
            if (s.name.empty()) fail(s.line, "morphism stanza needs a name");
            if (auto derive = entry_value(s, "derive")) {
                auto w = split_ws(*derive);
                MorphismObject m = [&]() -> MorphismObject {
                    if (w.size() == 2 && w[0] == "push") {
                        if (!st.ws.bundle) fail(s.line, "push needs an action first");
                        return h_pushdown(*st.ws.bundle, st.morphism_ref(w[1], s.line));
                    }
                    if (w.size() == 2 && w[0] == "identity")
                        return identity_morphism(st.module_ref(w[1], s.line));
                    if (w.size() == 3 && w[0] == "zero")
                        return zero_morphism(st.module_ref(w[1], s.line), st.module_ref(w[2], s.line));
                    if (w.size() == 4 && w[0] == "hom") {
                        auto hb = hom_space(st.module_ref(w[1], s.line), st.module_ref(w[2], s.line));
                        size_t k = (size_t)parse_int(w[3], s.line);
                        if (k >= hb.dim()) fail(s.line, "hom basis index out of range");
                        return make_morphism(st.module_ref(w[1], s.line), st.module_ref(w[2], s.line),
                                             hb.basis[k]);
                    }
                    fail(s.line, "unknown morphism derive '" + *derive + "'");
                }();
                st.ws.morphisms.emplace_back(s.name, std::move(m));
                continue;
            }
            auto fn = entry_value(s, "from"), tn = entry_value(s, "to");
            if (!fn || !tn) fail(s.line, "morphism needs from: and to: (or derive:)");
            const FDModule& src = st.module_ref(*fn, s.line);
            const FDModule& tgt = st.module_ref(*tn, s.line);
            Mat map(src.dim, tgt.dim);
            if (auto mv = entry_value(s, "map")) {
                auto rows = parse_rows(*mv, s.line);
                if (rows.size() != src.dim) fail(s.line, "map row count != source dimension");
                for (size_t r = 0; r < rows.size(); ++r) {
                    if (rows[r].size() != tgt.dim) fail(s.line, "map width != target dimension");
                    for (size_t c = 0; c < tgt.dim; ++c)
                        map.at(r, c) = st.ws.field.from_int(rows[r][c]);
                }
            }
            st.ws.morphisms.emplace_back(s.name, make_morphism(src, tgt, std::move(map)));
        } else if (s.kind == "functor") {
            if (s.name.empty()) fail(s.line, "functor stanza needs a name");
            auto pn = entry_value(s, "presents");
            if (!pn) fail(s.line, "functor needs presents:");
            st.ws.functors.emplace_back(s.name, theta(st.morphism_ref(*pn, s.line)));
        } else if (s.kind == "brauer") {
            if (s.name.empty()) fail(s.line, "brauer stanza needs a name");
            auto hv = entry_value(s, "halfedges");
            if (!hv) fail(s.line, "brauer needs halfedges:");
            SkewBrauerGraph g;
            g.half_edges = split_ws(*hv);
            const size_t n = g.half_edges.size();
            g.iota.resize(n);
            g.sigma.resize(n);
            g.mult.assign(n, 1);
            Grading d;
            d.d.assign(n, 0);
            auto hidx = [&](const std::string& name, int ln) -> size_t {
                for (size_t i = 0; i < n; ++i)
                    if (g.half_edges[i] == name) return i;
                fail(ln, "unknown half-edge '" + name + "'");
            };
            for (auto& [ln, e] : s.entries) {
                size_t colon = e.find(':');
                if (colon == std::string::npos) fail(ln, "expected key: value");
                std::string key = trim(e.substr(0, colon));
                std::string val = trim(e.substr(colon + 1));
                if (key == "iota")
                    g.iota = parse_cycles(val, g.half_edges, ln);
                else if (key == "sigma")
                    g.sigma = parse_cycles(val, g.half_edges, ln);
                else if (key == "mult") {
                    auto w = split_ws(val);
                    if (w.size() != 2) fail(ln, "mult needs: halfedge value");
                    g.mult[hidx(w[0], ln)] = (uint32_t)parse_int(w[1], ln);
                } else if (key == "grading") {
                    auto w = split_ws(val);
                    if (w.size() != 2) fail(ln, "grading needs: halfedge value");
                    d.d[hidx(w[0], ln)] = (uint32_t)parse_int(w[1], ln);
                } else if (key != "halfedges") {
                    fail(ln, "unknown brauer key '" + key + "'");
                }
            }
            g.validate();
            st.ws.brauer_graphs.emplace_back(s.name, std::make_pair(std::move(g), std::move(d)));
        } else if (s.kind == "universe") {
            auto sv = entry_value(s, "side"), mv = entry_value(s, "modules");
            if (!sv || !mv) fail(s.line, "universe needs side: and modules:");
            auto names = split_ws(*mv);
            for (auto& n : names) st.module_ref(n, s.line);   // must resolve
            if (*sv == "lambda")
                st.ws.universe_lambda = names;
            else if (*sv == "skew")
                st.ws.universe_skew = names;
            else
                fail(s.line, "universe side must be lambda or skew");
        } else {
            fail(s.line, "unknown stanza kind '" + s.kind + "'");
        }
    }
    return st.ws;
}

Workspace parse_workspace(const std::string& path, std::optional<uint32_t> field_p) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open workspace file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_workspace_text(buf.str(), field_p);
}

} // namespace skewcov
