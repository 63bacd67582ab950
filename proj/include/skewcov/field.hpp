#pragma once

// Exact arithmetic over GF(p) and dense linear algebra: row reduction, rank,
// kernels, solving, cokernel bases.  Everything downstream runs on this.

#include <cstdint>
#include <optional>
#include <vector>

#include "skewcov/errors.hpp"

namespace skewcov {

// Deterministic splitmix64; all randomized searches take explicit seeds.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint32_t below(uint32_t n) { return n ? static_cast<uint32_t>(next() % n) : 0; }
};

// GF(p) for a prime p < 2^31.  Residues live in uint32_t; products go through
// uint64_t, so no operation can overflow or round.
struct FieldSpec {
    uint32_t p;
    uint32_t primitive_root;

    explicit FieldSpec(uint32_t p_);                 // finds the smallest primitive root
    FieldSpec(uint32_t p_, uint32_t root);           // verifies the given root

    uint32_t add(uint32_t a, uint32_t b) const { uint32_t s = a + b; return s >= p ? s - p : s; }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
    uint32_t neg(uint32_t a) const { return a ? p - a : 0; }
    uint32_t mul(uint32_t a, uint32_t b) const { return static_cast<uint32_t>((uint64_t)a * b % p); }
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t inv(uint32_t a) const;                  // a != 0
    uint32_t from_int(long long v) const {
        long long r = v % (long long)p;
        if (r < 0) r += p;
        return (uint32_t)r;
    }
    bool operator==(const FieldSpec& o) const { return p == o.p && primitive_root == o.primitive_root; }
};

bool is_prime_u32(uint32_t n);

// Dense matrix, row-major.
struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<uint32_t> a;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
    uint32_t& at(size_t r, size_t c) { return a[r * cols + c]; }
    uint32_t at(size_t r, size_t c) const { return a[r * cols + c]; }
    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    bool is_zero() const {
        for (uint32_t x : a) if (x) return false;
        return true;
    }
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    std::vector<uint32_t> row(size_t r) const { return {a.begin() + r * cols, a.begin() + (r + 1) * cols}; }
    void set_row(size_t r, const std::vector<uint32_t>& v) {
        for (size_t c = 0; c < cols; ++c) at(r, c) = v[c];
    }
};

Mat mat_mul(const FieldSpec& F, const Mat& x, const Mat& y);
Mat mat_add(const FieldSpec& F, const Mat& x, const Mat& y);
Mat mat_sub(const FieldSpec& F, const Mat& x, const Mat& y);
Mat mat_scale(const FieldSpec& F, uint32_t c, const Mat& x);
Mat mat_transpose(const Mat& x);
Mat mat_pow(const FieldSpec& F, Mat x, uint64_t e);

// v * m for a row vector v.
std::vector<uint32_t> row_times_mat(const FieldSpec& F, const std::vector<uint32_t>& v, const Mat& m);

struct RrefResult {
    size_t rank = 0;
    Mat reduced;
    std::vector<size_t> pivot_cols;
};

// Unique reduced row-echelon form.
RrefResult rref(const FieldSpec& F, Mat m);

size_t rank_of(const FieldSpec& F, const Mat& m);
std::optional<Mat> mat_inverse(const FieldSpec& F, const Mat& m);

// Basis of the right null space {v : m v = 0}; each vector has length m.cols.
std::vector<std::vector<uint32_t>> kernel_basis(const FieldSpec& F, const Mat& m);

// m is read column-convention here: a map from source (columns) to target
// (rows).  dim = rows - rank; projection is dim x rows with projection*m = 0,
// full row rank, mapping target coordinates onto a complement of the image.
struct CokerData {
    size_t dim = 0;
    Mat projection;
};
CokerData coker_data(const FieldSpec& F, const Mat& m);

// Incremental row span with exact membership tests.  Rows are kept reduced
// (echelon, not normalized order); insert() returns true when the row was new.
struct RowSpan {
    FieldSpec F;
    size_t width;
    std::vector<std::vector<uint32_t>> rows;   // echelon rows
    std::vector<size_t> pivots;                // pivot column per row

    RowSpan(const FieldSpec& f, size_t w) : F(f), width(w) {}
    size_t dim() const { return rows.size(); }
    // Reduces v against the span in place; returns the residue.
    std::vector<uint32_t> reduce(std::vector<uint32_t> v) const;
    bool contains(const std::vector<uint32_t>& v) const;
    bool insert(std::vector<uint32_t> v);
};

// Expresses vectors in the row span of a fixed (possibly dependent) spanning
// list: solve(v) returns x with x * basis == v, if v lies in the span.
struct SpanSolver {
    FieldSpec F;
    Mat basis;      // k x n spanning rows
    Mat red;        // RREF of basis
    Mat transform;  // transform * basis == red
    std::vector<size_t> pivots;

    SpanSolver(const FieldSpec& f, Mat basis_rows);
    std::optional<std::vector<uint32_t>> solve(const std::vector<uint32_t>& v) const;
};

// --- polynomials over GF(p), coefficients low-to-high -------------------

using Poly = std::vector<uint32_t>;

Poly poly_trim(Poly f);
Poly poly_mul(const FieldSpec& F, const Poly& f, const Poly& g);
Poly poly_mod(const FieldSpec& F, Poly f, const Poly& g);
std::pair<Poly, Poly> poly_divmod(const FieldSpec& F, Poly f, const Poly& g);
Poly poly_gcd(const FieldSpec& F, Poly f, Poly g);      // monic
Poly poly_monic(const FieldSpec& F, Poly f);
Poly poly_powmod(const FieldSpec& F, Poly base, uint64_t e, const Poly& mod);
uint32_t poly_eval(const FieldSpec& F, const Poly& f, uint32_t x);
int poly_deg(const Poly& f);                            // deg(0) = -1

// Monic minimal polynomial of a square matrix.
Poly minimal_polynomial(const FieldSpec& F, const Mat& m);

// Evaluate a polynomial at a matrix.
Mat poly_at_matrix(const FieldSpec& F, const Poly& f, const Mat& m);

// All roots in GF(p) of the product-of-distinct-linear-factors part of f,
// found by seeded equal-degree splitting.  Deterministic given the rng state.
std::vector<uint32_t> linear_roots(const FieldSpec& F, const Poly& f, Rng& rng);

} // namespace skewcov
