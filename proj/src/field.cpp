#include "skewcov/field.hpp"

#include <algorithm>

namespace skewcov {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

static std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> fs;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

uint32_t FieldSpec::pow(uint32_t a, uint64_t e) const {
    uint64_t base = a % p, r = 1;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return (uint32_t)r;
}

uint32_t FieldSpec::inv(uint32_t a) const {
    if (a == 0) throw ValidationError("FieldSpec::inv of zero");
    return pow(a, p - 2);
}

static bool has_full_order(const FieldSpec& F, uint32_t g, const std::vector<uint32_t>& factors) {
    for (uint32_t q : factors)
        if (F.pow(g, (F.p - 1) / q) == 1) return false;
    return true;
}

FieldSpec::FieldSpec(uint32_t p_) : p(p_), primitive_root(0) {
    if (p >= (1u << 31) || !is_prime_u32(p))
        throw ValidationError("FieldSpec: p must be a prime < 2^31");
    if (p == 2) { primitive_root = 1; return; }
    auto factors = prime_factors(p - 1);
    for (uint32_t g = 2; g < p; ++g) {
        if (has_full_order(*this, g, factors)) { primitive_root = g; return; }
    }
    throw ValidationError("FieldSpec: no primitive root found");
}

FieldSpec::FieldSpec(uint32_t p_, uint32_t root) : p(p_), primitive_root(root) {
    if (p >= (1u << 31) || !is_prime_u32(p))
        throw ValidationError("FieldSpec: p must be a prime < 2^31");
    if (root == 0 || root >= p)
        throw ValidationError("FieldSpec: primitive root out of range");
    auto factors = prime_factors(p - 1);
    if (p != 2 && !has_full_order(*this, root, factors))
        throw ValidationError("FieldSpec: given root does not have order p-1");
}

Mat mat_mul(const FieldSpec& F, const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw ValidationError("mat_mul: shape mismatch");
    Mat r(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            uint32_t v = x.at(i, k);
            if (!v) continue;
            for (size_t j = 0; j < y.cols; ++j)
                r.at(i, j) = F.add(r.at(i, j), F.mul(v, y.at(k, j)));
        }
    return r;
}

Mat mat_add(const FieldSpec& F, const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw ValidationError("mat_add: shape mismatch");
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.add(r.a[i], y.a[i]);
    return r;
}

Mat mat_sub(const FieldSpec& F, const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw ValidationError("mat_sub: shape mismatch");
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.sub(r.a[i], y.a[i]);
    return r;
}

Mat mat_scale(const FieldSpec& F, uint32_t c, const Mat& x) {
    Mat r = x;
    for (auto& v : r.a) v = F.mul(c, v);
    return r;
}

Mat mat_transpose(const Mat& x) {
    Mat r(x.cols, x.rows);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

Mat mat_pow(const FieldSpec& F, Mat x, uint64_t e) {
    Mat r = Mat::identity(x.rows);
    while (e) {
        if (e & 1) r = mat_mul(F, r, x);
        x = mat_mul(F, x, x);
        e >>= 1;
    }
    return r;
}

std::vector<uint32_t> row_times_mat(const FieldSpec& F, const std::vector<uint32_t>& v, const Mat& m) {
    std::vector<uint32_t> r(m.cols, 0);
    for (size_t k = 0; k < m.rows; ++k) {
        if (!v[k]) continue;
        for (size_t j = 0; j < m.cols; ++j)
            r[j] = F.add(r[j], F.mul(v[k], m.at(k, j)));
    }
    return r;
}

RrefResult rref(const FieldSpec& F, Mat m) {
    RrefResult res;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        uint32_t ip = F.inv(m.at(r, c));
        for (size_t j = c; j < m.cols; ++j) m.at(r, j) = F.mul(ip, m.at(r, j));
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            uint32_t f = m.at(i, c);
            for (size_t j = c; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    res.reduced = std::move(m);
    return res;
}

size_t rank_of(const FieldSpec& F, const Mat& m) { return rref(F, m).rank; }

std::optional<Mat> mat_inverse(const FieldSpec& F, const Mat& m) {
    if (m.rows != m.cols) return std::nullopt;
    size_t n = m.rows;
    Mat aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto rr = rref(F, aug);
    if (rr.rank < n || rr.pivot_cols[n - 1] != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = rr.reduced.at(i, n + j);
    return inv;
}

std::vector<std::vector<uint32_t>> kernel_basis(const FieldSpec& F, const Mat& m) {
    auto rr = rref(F, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<uint32_t>> basis;
    for (size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<uint32_t> v(m.cols, 0);
        v[c] = 1;
        for (size_t r = 0; r < rr.rank; ++r)
            v[rr.pivot_cols[r]] = F.neg(rr.reduced.at(r, c));
        basis.push_back(std::move(v));
    }
    return basis;
}

CokerData coker_data(const FieldSpec& F, const Mat& m) {
    // Image of m = row space of m^T; non-pivot target coordinates give the
    // complement, and RREF rows eliminate the pivot coordinates exactly.
    auto rr = rref(F, mat_transpose(m));
    std::vector<bool> is_pivot(m.rows, false);
    for (size_t c : rr.pivot_cols) is_pivot[c] = true;
    CokerData out;
    out.dim = m.rows - rr.rank;
    out.projection = Mat(out.dim, m.rows);
    size_t k = 0;
    for (size_t q = 0; q < m.rows; ++q) {
        if (is_pivot[q]) continue;
        out.projection.at(k, q) = 1;
        for (size_t r = 0; r < rr.rank; ++r)
            out.projection.at(k, rr.pivot_cols[r]) = F.neg(rr.reduced.at(r, q));
        ++k;
    }
    return out;
}

std::vector<uint32_t> RowSpan::reduce(std::vector<uint32_t> v) const {
    for (size_t i = 0; i < rows.size(); ++i) {
        uint32_t c = v[pivots[i]];
        if (!c) continue;
        for (size_t j = 0; j < width; ++j)
            v[j] = F.sub(v[j], F.mul(c, rows[i][j]));
    }
    return v;
}

bool RowSpan::contains(const std::vector<uint32_t>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
}

bool RowSpan::insert(std::vector<uint32_t> v) {
    v = reduce(std::move(v));
    size_t piv = width;
    for (size_t j = 0; j < width; ++j)
        if (v[j]) { piv = j; break; }
    if (piv == width) return false;
    uint32_t ip = F.inv(v[piv]);
    for (size_t j = 0; j < width; ++j) v[j] = F.mul(ip, v[j]);
    // back-substitute into existing rows to stay fully reduced
    for (size_t i = 0; i < rows.size(); ++i) {
        uint32_t c = rows[i][piv];
        if (!c) continue;
        for (size_t j = 0; j < width; ++j)
            rows[i][j] = F.sub(rows[i][j], F.mul(c, v[j]));
    }
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
}

SpanSolver::SpanSolver(const FieldSpec& f, Mat basis_rows) : F(f), basis(std::move(basis_rows)) {
    size_t k = basis.rows, n = basis.cols;
    Mat aug(k, n + k);
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = basis.at(i, j);
        aug.at(i, n + i) = 1;
    }
    // eliminate on the first n columns only
    size_t r = 0;
    std::vector<size_t> pcols;
    for (size_t c = 0; c < n && r < k; ++c) {
        size_t piv = r;
        while (piv < k && aug.at(piv, c) == 0) ++piv;
        if (piv == k) continue;
        if (piv != r)
            for (size_t j = 0; j < n + k; ++j) std::swap(aug.at(piv, j), aug.at(r, j));
        uint32_t ip = F.inv(aug.at(r, c));
        for (size_t j = 0; j < n + k; ++j) aug.at(r, j) = F.mul(ip, aug.at(r, j));
        for (size_t i = 0; i < k; ++i) {
            if (i == r || aug.at(i, c) == 0) continue;
            uint32_t fc = aug.at(i, c);
            for (size_t j = 0; j < n + k; ++j)
                aug.at(i, j) = F.sub(aug.at(i, j), F.mul(fc, aug.at(r, j)));
        }
        pcols.push_back(c);
        ++r;
    }
    pivots = std::move(pcols);
    red = Mat(k, n);
    transform = Mat(k, k);
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < n; ++j) red.at(i, j) = aug.at(i, j);
        for (size_t j = 0; j < k; ++j) transform.at(i, j) = aug.at(i, n + j);
    }
}

std::optional<std::vector<uint32_t>> SpanSolver::solve(const std::vector<uint32_t>& v) const {
    size_t n = basis.cols, k = basis.rows;
    std::vector<uint32_t> resid = v;
    std::vector<uint32_t> c(k, 0);
    for (size_t r = 0; r < pivots.size(); ++r) {
        uint32_t f = resid[pivots[r]];
        if (!f) continue;
        c[r] = f;
        for (size_t j = 0; j < n; ++j)
            resid[j] = F.sub(resid[j], F.mul(f, red.at(r, j)));
    }
    for (uint32_t x : resid)
        if (x) return std::nullopt;
    return row_times_mat(F, c, transform);
}

// --- polynomials ---------------------------------------------------------

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

int poly_deg(const Poly& f) { return (int)f.size() - 1; }

Poly poly_mul(const FieldSpec& F, const Poly& f, const Poly& g) {
    if (f.empty() || g.empty()) return {};
    Poly r(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        if (!f[i]) continue;
        for (size_t j = 0; j < g.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(f[i], g[j]));
    }
    return r;
}

std::pair<Poly, Poly> poly_divmod(const FieldSpec& F, Poly f, const Poly& g0) {
    Poly g = poly_trim(g0);
    if (g.empty()) throw ValidationError("poly division by zero");
    f = poly_trim(std::move(f));
    Poly q;
    if (f.size() >= g.size()) q.assign(f.size() - g.size() + 1, 0);
    uint32_t lead_inv = F.inv(g.back());
    while (f.size() >= g.size()) {
        uint32_t c = F.mul(f.back(), lead_inv);
        size_t shift = f.size() - g.size();
        q[shift] = c;
        for (size_t i = 0; i < g.size(); ++i)
            f[shift + i] = F.sub(f[shift + i], F.mul(c, g[i]));
        f = poly_trim(std::move(f));
        if (f.empty()) break;
    }
    return {poly_trim(std::move(q)), std::move(f)};
}

Poly poly_mod(const FieldSpec& F, Poly f, const Poly& g) {
    return poly_divmod(F, std::move(f), g).second;
}

Poly poly_monic(const FieldSpec& F, Poly f) {
    f = poly_trim(std::move(f));
    if (f.empty()) return f;
    uint32_t ip = F.inv(f.back());
    for (auto& c : f) c = F.mul(ip, c);
    return f;
}

Poly poly_gcd(const FieldSpec& F, Poly f, Poly g) {
    f = poly_trim(std::move(f));
    g = poly_trim(std::move(g));
    while (!g.empty()) {
        Poly r = poly_mod(F, f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return poly_monic(F, std::move(f));
}

Poly poly_powmod(const FieldSpec& F, Poly base, uint64_t e, const Poly& mod) {
    Poly r = {1};
    base = poly_mod(F, std::move(base), mod);
    while (e) {
        if (e & 1) r = poly_mod(F, poly_mul(F, r, base), mod);
        base = poly_mod(F, poly_mul(F, base, base), mod);
        e >>= 1;
    }
    return r;
}

uint32_t poly_eval(const FieldSpec& F, const Poly& f, uint32_t x) {
    uint32_t r = 0;
    for (size_t i = f.size(); i-- > 0;) r = F.add(F.mul(r, x), f[i]);
    return r;
}

Poly minimal_polynomial(const FieldSpec& F, const Mat& m) {
    if (m.rows != m.cols) throw ValidationError("minimal_polynomial: square matrix required");
    size_t n = m.rows;
    if (n == 0) return {1};
    size_t w = n * n;
    SpanSolver* dummy = nullptr;
    (void)dummy;
    std::vector<std::vector<uint32_t>> powers;  // flattened I, m, m^2, ...
    Mat cur = Mat::identity(n);
    RowSpan span(F, w);
    std::vector<std::vector<uint32_t>> raw;
    while (true) {
        std::vector<uint32_t> flat = cur.a;
        if (!span.insert(flat)) {
            // current power depends on previous ones: solve for coefficients
            Mat basis((raw.size()), w);
            for (size_t i = 0; i < raw.size(); ++i) basis.set_row(i, raw[i]);
            SpanSolver solver(F, basis);
            auto c = solver.solve(flat);
            if (!c) throw ValidationError("minimal_polynomial: internal solve failed");
            Poly mu(raw.size() + 1, 0);
            for (size_t i = 0; i < raw.size(); ++i) mu[i] = F.neg((*c)[i]);
            mu[raw.size()] = 1;
            return mu;
        }
        raw.push_back(flat);
        cur = mat_mul(F, cur, m);
        if (raw.size() > n + 1) throw ValidationError("minimal_polynomial: no dependency found");
    }
}

Mat poly_at_matrix(const FieldSpec& F, const Poly& f, const Mat& m) {
    size_t n = m.rows;
    Mat r(n, n);
    Mat cur = Mat::identity(n);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i]) r = mat_add(F, r, mat_scale(F, f[i], cur));
        if (i + 1 < f.size()) cur = mat_mul(F, cur, m);
    }
    return r;
}

static void split_linear(const FieldSpec& F, const Poly& f, Rng& rng, std::vector<uint32_t>& out) {
    // f is a product of distinct linear factors
    int d = poly_deg(f);
    if (d <= 0) return;
    if (d == 1) {
        // x + c  ->  root = -c
        out.push_back(F.neg(F.mul(f[0], F.inv(f[1]))));
        return;
    }
    if (F.p == 2) {
        for (uint32_t r = 0; r < 2; ++r)
            if (poly_eval(F, f, r) == 0) out.push_back(r);
        return;
    }
    for (int tries = 0; tries < 64; ++tries) {
        uint32_t shift = rng.below(F.p);
        Poly base = {shift, 1};
        Poly half = poly_powmod(F, base, (F.p - 1) / 2, f);
        if (!half.empty()) half[0] = F.sub(half[0], 1);
        Poly g = poly_gcd(F, half, f);
        int dg = poly_deg(g);
        if (dg > 0 && dg < d) {
            split_linear(F, g, rng, out);
            split_linear(F, poly_divmod(F, f, g).first, rng, out);
            return;
        }
    }
    throw ValidationError("linear_roots: splitting budget exhausted");
}

std::vector<uint32_t> linear_roots(const FieldSpec& F, const Poly& f0, Rng& rng) {
    Poly f = poly_monic(F, f0);
    if (poly_deg(f) <= 0) return {};
    // product of distinct linear factors: gcd(f, x^p - x)
    Poly xp = poly_powmod(F, Poly{0, 1}, F.p, f);
    if (xp.size() < 2) xp.resize(2, 0);
    xp[1] = F.sub(xp[1], 1);
    Poly lin = poly_gcd(F, xp, f);
    std::vector<uint32_t> roots;
    split_linear(F, lin, rng, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace skewcov
