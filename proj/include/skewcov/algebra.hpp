#pragma once

// Finite-dimensional algebras as a basis plus multiplication table, with a
// distinguished complete orthogonal idempotent set.  Bound quiver algebras,
// skew group algebras and their corners are all instances.
//
// Conventions used project-wide:
//   * paths compose left-to-right: p.q means "p then q", defined when
//     target(p) = source(q); arrows i -> j span e_i * A * e_j;
//   * modules are right modules; module elements are row vectors; action
//     matrices multiply on the right, so action(b) * action(b') = action(b*b').

#include <memory>
#include <string>
#include <vector>

#include "skewcov/field.hpp"

namespace skewcov {

// Sparse linear combination of basis elements: (index, coeff), sorted, nonzero.
using LinComb = std::vector<std::pair<uint32_t, uint32_t>>;

LinComb to_lincomb(const std::vector<uint32_t>& dense);
std::vector<uint32_t> to_dense(const LinComb& c, size_t dim);

struct StructureConstantAlgebra {
    FieldSpec field;
    std::vector<std::string> basis_labels;
    std::vector<std::vector<LinComb>> table;            // table[i][j] = b_i * b_j
    std::vector<std::vector<uint32_t>> idempotents;     // dense, distinguished complete orthogonal set
    std::vector<uint32_t> unit;                         // dense
    std::vector<std::vector<uint32_t>> radical;         // dense row basis of rad (known by construction)

    size_t dim() const { return basis_labels.size(); }

    std::vector<uint32_t> mul(const std::vector<uint32_t>& x, const std::vector<uint32_t>& y) const;
    // v -> v * x on row vectors (right multiplication by x).
    Mat right_mult_matrix(const std::vector<uint32_t>& x) const;
    // v -> x * v on row vectors (left multiplication by x).
    Mat left_mult_matrix(const std::vector<uint32_t>& x) const;
};

using AlgebraPtr = std::shared_ptr<const StructureConstantAlgebra>;

// Validates associativity on all basis triples, the two-sided unit, and the
// idempotent set (idempotent, orthogonal, sums to the unit); verifies the
// radical rows span a two-sided nilpotent ideal when provided.
AlgebraPtr make_algebra(FieldSpec field,
                        std::vector<std::string> labels,
                        std::vector<std::vector<LinComb>> table,
                        std::vector<std::vector<uint32_t>> idempotents,
                        std::vector<uint32_t> unit,
                        std::vector<std::vector<uint32_t>> radical);

// Span of products {x*y : x in a, y in b} as echelon rows.
std::vector<std::vector<uint32_t>> span_products(const StructureConstantAlgebra& A,
                                                 const std::vector<std::vector<uint32_t>>& a,
                                                 const std::vector<std::vector<uint32_t>>& b);

// dim of e_i * span * e_j (sandwich by distinguished idempotents).
size_t sandwich_dim(const StructureConstantAlgebra& A, size_t i,
                    const std::vector<std::vector<uint32_t>>& span, size_t j);

} // namespace skewcov
