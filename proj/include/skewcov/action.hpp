#pragma once

// Group actions on algebras, the skew group algebra Lambda G, its canonical
// idempotents and corner (basic) algebra, and the dual G^-action.

#include "skewcov/group.hpp"
#include "skewcov/quiver.hpp"

namespace skewcov {

// Per-generator action data on a bound quiver algebra: a vertex permutation
// plus a scalar-weighted arrow permutation.
struct QuiverAction {
    struct GenData {
        std::vector<uint32_t> vertex_perm;                      // image per vertex index
        std::vector<std::pair<uint32_t, uint32_t>> arrow_map;   // arrow -> (scalar, arrow)
    };
    std::vector<GenData> gens;   // one per cyclic factor of the group
};

// A finite abelian group acting K-linearly on an algebra by automorphisms.
// mats[g] has rows = images of basis elements; row vectors act on the right.
struct AlgebraAction {
    AlgebraPtr alg;
    FiniteAbelianGroup group;
    CharacterTable chars;
    std::vector<Mat> mats;                          // per group element
    std::vector<std::vector<uint32_t>> idem_perm;   // per element: permutation of distinguished idempotents

    std::vector<uint32_t> apply(uint32_t g, const std::vector<uint32_t>& v) const {
        return row_times_mat(alg->field, v, mats[g]);
    }
    // stabilizer of a distinguished idempotent, as element indices
    std::vector<uint32_t> vertex_stabilizer(size_t idem) const;
};

// Validates automorphism property, generator relations, idempotent
// permutation, and the orbit assumption; throws ActionInvalid.
AlgebraAction make_matrix_action(AlgebraPtr alg, const FiniteAbelianGroup& grp,
                                 const std::vector<Mat>& generator_mats);

// Builds the matrices on the path basis from quiver data; additionally checks
// arrow/vertex incidence and that every relation maps into the ideal span.
AlgebraAction make_quiver_action(const BoundQuiverAlgebra& B, const FiniteAbelianGroup& grp,
                                 const QuiverAction& qa);

// A corner algebra f * A * f with its embedding data.
struct CornerAlgebra {
    AlgebraPtr alg;
    Mat basis_rows;                        // corner basis in ambient coordinates
    std::shared_ptr<SpanSolver> solver;    // express ambient vectors in the corner basis

    std::vector<uint32_t> to_ambient(const std::vector<uint32_t>& v) const {
        return row_times_mat(alg->field, v, basis_rows);
    }
};

// Cuts the corner at an idempotent f; seed_idempotents become the corner's
// distinguished idempotent set (they must be orthogonal idempotents summing
// to f).  The ambient radical, when present, is cut along.
CornerAlgebra corner_by_idempotent(const AlgebraPtr& ambient, const std::vector<uint32_t>& f,
                                   const std::vector<std::vector<uint32_t>>& seed_idempotents,
                                   const std::vector<std::string>& seed_labels);

struct SkewAlgebraBundle {
    AlgebraPtr lambda;
    AlgebraAction act;              // the action on lambda
    AlgebraPtr full;                // basis {b (x) g}, index i*|G| + g
    std::vector<uint32_t> ebar;     // dense in full
    CornerAlgebra corner;
    struct CornerVertex {
        size_t orbit_rep;           // index into lambda's distinguished idempotents
        uint32_t chi;               // character of the stabilizer (0 when trivial)
    };
    std::vector<CornerVertex> corner_vertices;
    std::vector<size_t> orbit_reps;         // representative idempotent indices (the set I~)
    std::vector<bool> rep_stab_full;        // per rep: stabilizer equals G?
    GabrielQuiver gabriel;                  // quiver of the basic corner

    size_t full_index(size_t i, uint32_t g) const { return i * act.group.size() + g; }
    FiniteAbelianGroup dual_group() const { return act.group; }
};

// The skew group algebra with its canonical idempotent data.  Verifies:
// dim(full) = dim(lambda)*|G|; rad(lambda) (x) KG is a nilpotent two-sided
// ideal; ebar and each e_{i0,rho} are orthogonal idempotents; ebar is
// Morita-full; every corner of full/rad at the refined idempotents is
// one-dimensional (through the Gabriel-quiver extraction on the corner).
SkewAlgebraBundle skew_algebra(const AlgebraPtr& lambda, const AlgebraAction& act);

// chi . (b (x) g) = chi(g) b (x) g, validated as an algebra action of G^.
AlgebraAction dual_action_full(const SkewAlgebraBundle& bundle);
// Its restriction to the corner (which fixes ebar), permuting (i0, rho) vertices.
AlgebraAction dual_action_corner(const SkewAlgebraBundle& bundle);

// Restriction of an ambient action to a corner whose span it preserves.
AlgebraAction restrict_action_to_corner(const AlgebraAction& ambient, const CornerAlgebra& corner);

} // namespace skewcov
