#pragma once

// Bound quiver algebras: path enumeration modulo an admissible ideal,
// structure constants, and Gabriel-quiver extraction from a known radical.

#include <map>
#include <string>
#include <vector>

#include "skewcov/algebra.hpp"

namespace skewcov {

struct Quiver {
    struct Arrow {
        std::string name;
        uint32_t src = 0, tgt = 0;
    };
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    void validate() const;   // unique ids, declared endpoints
    size_t vertex_index(const std::string& v) const;
    size_t arrow_index(const std::string& a) const;
};

// Arrow-id sequence; the empty sequence is the trivial path at src.
struct Path {
    uint32_t src = 0;
    std::vector<uint32_t> arrows;
    uint32_t target(const Quiver& q) const {
        return arrows.empty() ? src : q.arrows[arrows.back()].tgt;
    }
    bool operator==(const Path& o) const { return src == o.src && arrows == o.arrows; }
};

// Graded order, then lexicographic on arrow names, then source vertex name.
bool path_less(const Quiver& q, const Path& a, const Path& b);

struct Relation {
    std::vector<std::pair<uint32_t, Path>> terms;   // coeff, path; shared src/tgt, length >= 2
};

struct RelationSet {
    std::vector<Relation> relations;
    uint32_t nilpotency_bound = 4;
};

// The product of path_basis: a structure-constant algebra whose basis is the
// set of normal-form paths (trivial paths first), plus the reduction data.
struct BoundQuiverAlgebra {
    Quiver quiver;
    RelationSet relations;
    AlgebraPtr alg;
    std::vector<Path> basis_paths;                 // aligned with alg basis
    // reduction machinery over the ambient truncated path space
    std::vector<Path> all_paths;                   // length <= nilpotency_bound, sorted
    std::map<std::vector<uint32_t>, size_t> path_index;   // key: src then arrows
    std::vector<std::vector<uint32_t>> ideal_rows; // echelon rows of the ideal span, reversed column order
    std::vector<size_t> ideal_pivots;              // pivot column per ideal row
    std::vector<size_t> normal_of_path;            // all_paths index -> basis index or npos

    LinComb reduce_path(const Path& p) const;      // image in the algebra basis
    LinComb reduce_combination(const std::vector<std::pair<uint32_t, Path>>& terms) const;
    bool in_ideal(const Path& p) const;
    size_t vertex_of_basis(size_t b) const;        // source vertex of a trivial-path basis element
};

// Realizes KQ/I.  Throws NotAdmissible when length-N paths do not all reduce
// to zero, DimensionBlowup past the cap.
BoundQuiverAlgebra path_basis(const FieldSpec& F, const Quiver& q, const RelationSet& r,
                              size_t path_cap = 20000);

struct GabrielQuiver {
    size_t vertices = 0;
    Mat multiplicity;   // multiplicity.at(i, j) = #arrows i -> j
    Quiver quiver;      // materialized with synthetic names
};

// One vertex per distinguished idempotent; multiplicity(i->j) = dim e_i (J/J^2) e_j.
GabrielQuiver gabriel_quiver(const StructureConstantAlgebra& A,
                             const std::vector<std::vector<uint32_t>>& rad_basis);

} // namespace skewcov
