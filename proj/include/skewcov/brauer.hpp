#pragma once

// Skew Brauer graphs (H, iota, sigma, m), 0-homogeneous Z2-gradings, the
// double cover Gamma_d, Brauer graph algebra generation, the level-swap
// G-action on B_d, the corner f B_dG f, and the special-biserial/symmetric
// checks.

#include "skewcov/module.hpp"

namespace skewcov {

struct SkewBrauerGraph {
    std::vector<std::string> half_edges;
    std::vector<uint32_t> iota;    // involution, possibly with fixed points
    std::vector<uint32_t> sigma;   // orientation
    std::vector<uint32_t> mult;    // constant on sigma-orbits

    void validate() const;
    size_t size() const { return half_edges.size(); }
    std::vector<std::vector<uint32_t>> sigma_orbits() const;   // the o-vertices
    std::vector<std::vector<uint32_t>> edges() const;          // iota-orbits
    std::vector<uint32_t> fixed_half_edges() const;            // H_x
    bool is_ordinary() const { return fixed_half_edges().empty(); }
};

struct Grading {
    std::vector<uint32_t> d;   // values in {0, 1}
};

// 0-homogeneous: the grading sums to zero around every o-vertex.
bool is_homogeneous(const SkewBrauerGraph& g, const Grading& d);

// Gamma_d on H x Z2, half-edge (h, i) at index 2h + i:
//   iota_d(h_i) = h_{i+1} if h in H_x, (iota h)_i otherwise;
//   sigma_d(h_i) = (sigma h)_{i + d(h)};  m_d(h_i) = m(h).
SkewBrauerGraph double_cover(const SkewBrauerGraph& g, const Grading& d);

struct BrauerAlgebraData {
    BoundQuiverAlgebra bqa;
    std::vector<std::vector<uint32_t>> edge_list;   // quiver vertex -> half-edges of that edge
    std::vector<size_t> halfedge_arrow;             // half-edge -> quiver arrow (npos if none)
    bool single_edge_special_case = false;
};

// Quiver: one vertex per edge, one arrow [h] -> [sigma h] per half-edge;
// relations: special-cycle identities C_h^m(h) = C_h'^m(h') across each edge
// plus all length-2 compositions leaving a special cycle.  Truncated edges
// are rejected except the single-edge tree (K[x]/(x^2)).
BrauerAlgebraData bg_algebra(const FieldSpec& F, const SkewBrauerGraph& g);

// The level-swap action on bg_algebra(double_cover(g, d)).
AlgebraAction bd_group_action(const BrauerAlgebraData& cover_alg, const SkewBrauerGraph& cover);

struct SkewBGResult {
    SkewBrauerGraph cover;
    BrauerAlgebraData cover_alg;
    AlgebraAction level_action;
    SkewAlgebraBundle bundle;            // B_d G with its canonical corner
    std::vector<uint32_t> f;             // sum of e_{[h_0]} (x) 1 over edges of Gamma
    CornerAlgebra corner;                // f (B_d G) f
    struct Seed {
        size_t gamma_edge;
        int comp;                        // -1 for o-edges, 0/1 for the x-edge split
    };
    std::vector<Seed> seeds;
    AlgebraAction ghat;                  // dual action restricted to the corner
};

SkewBGResult skew_bg_algebra(const FieldSpec& F, const SkewBrauerGraph& g, const Grading& d);

struct GhatFormulaReport {
    bool o_edges_fixed = false;          // chi . e_[h] = e_[h]
    bool x_components_swapped = false;   // chi . e_[h]_i = e_[h]_{i+1}
    bool arrow_sign_ok = false;          // chi . ^j b_h^i = (-1)^{-d(h)} ^{j+1} b_h^{i+1}
    size_t arrows_checked = 0;
    bool ok() const { return o_edges_fixed && x_components_swapped && arrow_sign_ok; }
};
// Validates the displayed G^-action formulas on the corner realization, with
// the corner arrows realized as beta_h = alpha_{h_0} (x) g^{d(h)}.
GhatFormulaReport validate_ghat_formulas(const SkewBGResult& r, const Grading& d);

struct BiserialReport {
    bool ok = true;
    std::string witness;
};
BiserialReport is_special_biserial(const BoundQuiverAlgebra& B);

// Existence of a symmetrizing form: a linear lambda with lambda(xy) =
// lambda(yx) and nondegenerate Gram matrix.  Certified negative through the
// common radical of the symmetric-form space.
bool is_symmetric(const StructureConstantAlgebra& A, uint64_t seed, int budget);

// Exact isomorphism of (sigma, iota, m) data by backtracking search.
bool brauer_isomorphic(const SkewBrauerGraph& a, const SkewBrauerGraph& b);

// Connected components under the group generated by sigma and iota.
std::vector<std::vector<uint32_t>> brauer_components(const SkewBrauerGraph& g);
// The full subgraph on a set of half-edges (must be sigma- and iota-closed).
SkewBrauerGraph brauer_subgraph(const SkewBrauerGraph& g, const std::vector<uint32_t>& half_edges);

} // namespace skewcov
