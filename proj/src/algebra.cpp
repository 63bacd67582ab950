#include "skewcov/algebra.hpp"

#include <algorithm>

namespace skewcov {

LinComb to_lincomb(const std::vector<uint32_t>& dense) {
    LinComb c;
    for (uint32_t i = 0; i < dense.size(); ++i)
        if (dense[i]) c.emplace_back(i, dense[i]);
    return c;
}

std::vector<uint32_t> to_dense(const LinComb& c, size_t dim) {
    std::vector<uint32_t> v(dim, 0);
    for (auto [i, x] : c) v[i] = x;
    return v;
}

std::vector<uint32_t> StructureConstantAlgebra::mul(const std::vector<uint32_t>& x,
                                                    const std::vector<uint32_t>& y) const {
    std::vector<uint32_t> r(dim(), 0);
    for (uint32_t i = 0; i < dim(); ++i) {
        if (!x[i]) continue;
        for (uint32_t j = 0; j < dim(); ++j) {
            if (!y[j]) continue;
            uint32_t c = field.mul(x[i], y[j]);
            for (auto [k, s] : table[i][j]) r[k] = field.add(r[k], field.mul(c, s));
        }
    }
    return r;
}

Mat StructureConstantAlgebra::right_mult_matrix(const std::vector<uint32_t>& x) const {
    Mat m(dim(), dim());
    for (uint32_t i = 0; i < dim(); ++i)
        for (uint32_t j = 0; j < dim(); ++j) {
            if (!x[j]) continue;
            for (auto [k, s] : table[i][j])
                m.at(i, k) = field.add(m.at(i, k), field.mul(x[j], s));
        }
    return m;
}

Mat StructureConstantAlgebra::left_mult_matrix(const std::vector<uint32_t>& x) const {
    Mat m(dim(), dim());
    for (uint32_t j = 0; j < dim(); ++j)
        for (uint32_t i = 0; i < dim(); ++i) {
            if (!x[i]) continue;
            for (auto [k, s] : table[i][j])
                m.at(j, k) = field.add(m.at(j, k), field.mul(x[i], s));
        }
    return m;
}

static void accumulate(const FieldSpec& F, std::vector<uint32_t>& acc, uint32_t c, const LinComb& t) {
    for (auto [k, s] : t) acc[k] = F.add(acc[k], F.mul(c, s));
}

AlgebraPtr make_algebra(FieldSpec field,
                        std::vector<std::string> labels,
                        std::vector<std::vector<LinComb>> table,
                        std::vector<std::vector<uint32_t>> idempotents,
                        std::vector<uint32_t> unit,
                        std::vector<std::vector<uint32_t>> radical) {
    auto A = std::shared_ptr<StructureConstantAlgebra>(new StructureConstantAlgebra{
        field, std::move(labels), std::move(table), std::move(idempotents), std::move(unit),
        std::move(radical)});
    const size_t d = A->dim();
    const FieldSpec& F = A->field;

    if (A->table.size() != d) throw ValidationError("algebra: table row count != dim");
    for (auto& row : A->table)
        if (row.size() != d) throw ValidationError("algebra: table col count != dim");

    // associativity on all basis triples: (b_i b_j) b_k == b_i (b_j b_k)
    for (uint32_t i = 0; i < d; ++i)
        for (uint32_t j = 0; j < d; ++j) {
            const LinComb& ij = A->table[i][j];
            for (uint32_t k = 0; k < d; ++k) {
                std::vector<uint32_t> lhs(d, 0), rhs(d, 0);
                for (auto [t, c] : ij) accumulate(F, lhs, c, A->table[t][k]);
                for (auto [t, c] : A->table[j][k]) accumulate(F, rhs, c, A->table[i][t]);
                if (lhs != rhs)
                    throw ValidationError("algebra: associativity fails at triple (" +
                                          A->basis_labels[i] + "," + A->basis_labels[j] + "," +
                                          A->basis_labels[k] + ")");
            }
        }

    // two-sided unit
    for (uint32_t i = 0; i < d; ++i) {
        std::vector<uint32_t> e_i(d, 0);
        e_i[i] = 1;
        if (A->mul(A->unit, e_i) != e_i || A->mul(e_i, A->unit) != e_i)
            throw ValidationError("algebra: unit is not a two-sided identity");
    }

    // distinguished idempotents: idempotent, orthogonal, sum to unit
    std::vector<uint32_t> sum(d, 0);
    for (size_t a = 0; a < A->idempotents.size(); ++a) {
        const auto& ea = A->idempotents[a];
        if (A->mul(ea, ea) != ea) throw ValidationError("algebra: distinguished element not idempotent");
        for (size_t b = 0; b < A->idempotents.size(); ++b) {
            if (a == b) continue;
            auto pr = A->mul(ea, A->idempotents[b]);
            if (!std::all_of(pr.begin(), pr.end(), [](uint32_t x) { return x == 0; }))
                throw ValidationError("algebra: distinguished idempotents not orthogonal");
        }
        for (size_t j = 0; j < d; ++j) sum[j] = F.add(sum[j], ea[j]);
    }
    if (sum != A->unit) throw ValidationError("algebra: idempotents do not sum to the unit");

    // radical rows, when given: two-sided ideal, nilpotent
    if (!A->radical.empty()) {
        RowSpan J(F, d);
        for (auto& r : A->radical) J.insert(r);
        for (uint32_t i = 0; i < d; ++i) {
            std::vector<uint32_t> b(d, 0);
            b[i] = 1;
            for (auto& r : J.rows) {
                if (!J.contains(A->mul(r, b)) || !J.contains(A->mul(b, r)))
                    throw ValidationError("algebra: radical rows do not span a two-sided ideal");
            }
        }
        std::vector<std::vector<uint32_t>> power = J.rows;
        for (size_t k = 0; k <= d && !power.empty(); ++k) {
            if (k == d) throw NotNilpotent("algebra: radical is not nilpotent");
            power = span_products(*A, power, J.rows);
        }
    }
    return A;
}

std::vector<std::vector<uint32_t>> span_products(const StructureConstantAlgebra& A,
                                                 const std::vector<std::vector<uint32_t>>& a,
                                                 const std::vector<std::vector<uint32_t>>& b) {
    RowSpan s(A.field, A.dim());
    for (auto& x : a)
        for (auto& y : b) s.insert(A.mul(x, y));
    return s.rows;
}

size_t sandwich_dim(const StructureConstantAlgebra& A, size_t i,
                    const std::vector<std::vector<uint32_t>>& span, size_t j) {
    RowSpan s(A.field, A.dim());
    for (auto& x : span)
        s.insert(A.mul(A.idempotents[i], A.mul(x, A.idempotents[j])));
    return s.dim();
}

} // namespace skewcov
