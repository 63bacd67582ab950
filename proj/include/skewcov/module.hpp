#pragma once

// Finite-dimensional right modules over structure-constant algebras: hom
// spaces, twists, pushdown and restriction, adjunction, Las Vegas
// indecomposability and isomorphism testing, finite radical powers, and the
// module-level semi-covering checks.
//
// Module elements are row vectors; action(b) multiplies on the right, so
// action is an algebra homomorphism.  A hom f : M -> N is a dim(M) x dim(N)
// matrix with action_M(b) f = f action_N(b); homs compose left-to-right.

#include "skewcov/action.hpp"

namespace skewcov {

struct FDModule {
    AlgebraPtr alg;
    size_t dim = 0;
    std::vector<Mat> action;   // one per algebra basis element

    Mat act_of(const std::vector<uint32_t>& elem) const;   // linear extension
    std::vector<size_t> dimension_vector() const;          // ranks over distinguished idempotents
};

// Validates action(unit) = id and action(b) action(b') = action(b b') on all
// basis pairs.
FDModule make_module(AlgebraPtr alg, size_t dim, std::vector<Mat> action);
FDModule zero_module(AlgebraPtr alg);
FDModule direct_sum(const FDModule& a, const FDModule& b);
// Projective e * A at a distinguished idempotent.
FDModule proj_module(const AlgebraPtr& alg, size_t idem);
// Its top e * A / e * rad (needs the algebra's radical).
FDModule simple_module(const AlgebraPtr& alg, size_t idem);

struct HomBasis {
    size_t src_dim = 0, tgt_dim = 0;
    std::vector<Mat> basis;
    size_t dim() const { return basis.size(); }
};

HomBasis hom_space(const FDModule& m, const FDModule& n);

// Coordinates of hom matrices relative to a hom basis.
struct HomCoords {
    FieldSpec F;
    std::vector<Mat> basis;
    SpanSolver solver;
    explicit HomCoords(const FieldSpec& f, const std::vector<Mat>& hom_basis);
    std::vector<uint32_t> coords(const Mat& h) const;      // throws if not in span
    Mat from_coords(const std::vector<uint32_t>& c) const;
};

// ^g M = M o g^-1.
FDModule twist(const AlgebraAction& act, uint32_t g, const FDModule& m);

// Induction M (x) KG with (m (x) g)(b (x) h) = m g(b) (x) gh; block g sits at
// rows [g*dim, (g+1)*dim).
FDModule pushdown_full(const SkewAlgebraBundle& B, const FDModule& m);
// Block-diagonal extension of a hom along pushdown.
Mat pushdown_hom(const SkewAlgebraBundle& B, const Mat& f);
// Restriction along b -> b (x) 1 (the artifact's F^lambda).
FDModule restrict_module(const SkewAlgebraBundle& B, const FDModule& mbar);
// The ebar-cut of a full module, as a corner module.
FDModule corner_module(const SkewAlgebraBundle& B, const FDModule& mbar);
FDModule pushdown_corner(const SkewAlgebraBundle& B, const FDModule& m);
// Transport of a hom of full modules to the corner cuts.
Mat corner_hom(const SkewAlgebraBundle& B, const FDModule& mbar, const FDModule& nbar, const Mat& f);

struct AdjunctionReport {
    size_t lhs_dim = 0, rhs_dim = 0;
    bool dims_equal = false;
    bool mutually_inverse = false;
    bool natural = false;
    bool ok() const { return dims_equal && mutually_inverse && natural; }
    std::string note;
};

// Unit-based maps between Hom(F_lambda x, mbar) and Hom(x, F^lambda mbar):
// checks they are mutually inverse bijections and natural against seeded
// endomorphisms on both sides.
AdjunctionReport adjunction_check(const SkewAlgebraBundle& B, const FDModule& x,
                                  const FDModule& mbar, uint64_t seed);

// Las Vegas splitter for a unital matrix subalgebra given by a spanning set.
struct SplitOutcome {
    enum Kind { Split, Local, Inconclusive } kind = Inconclusive;
    Mat idempotent;               // for Split: nontrivial idempotent in the span
    std::vector<Mat> rad_basis;   // for Local: the nilpotent part
};
SplitOutcome find_split(const FieldSpec& F, const std::vector<Mat>& algebra_basis,
                        uint64_t seed, int budget);

struct IndecResult {
    enum Kind { Indecomposable, SplitWitness, Inconclusive } kind = Inconclusive;
    Mat witness;                  // splitting idempotent when found
    std::vector<Mat> end_rad;     // rad(End) when certified local
};
IndecResult is_indecomposable(const FDModule& m, uint64_t seed, int budget);

struct IsoResult {
    enum Kind { Iso, NonIso, Inconclusive } kind = Inconclusive;
    Mat witness;
    std::string reason;
};
IsoResult modules_isomorphic(const FDModule& m, const FDModule& n, uint64_t seed, int budget);

// Image of a nontrivial splitting idempotent as a module; the module itself
// when it is certified indecomposable.
FDModule summand_module(const FDModule& m, uint64_t seed, int budget);

// dims[n-1][i][j] = dim rad^n(M_i, M_j), n = 1..nmax.  Exact when the
// universe is a complete list of indecomposables.
std::vector<std::vector<std::vector<size_t>>> rad_power_dims(const std::vector<FDModule>& universe,
                                                             size_t nmax, uint64_t seed, int budget);

struct SemicovReport {
    int branch = 0;               // 1: G_m != G, 2: G_n != G, 3: G_mn = G
    size_t lhs = 0, rhs = 0;
    bool pass = false;
    bool stabilizer_inconclusive = false;
};

// Branch-appropriate dimension identity of Theorem GCM at module level.
SemicovReport verify_semicovering_module(const SkewAlgebraBundle& B, const FDModule& m,
                                         const FDModule& n, uint64_t seed, int budget);

// Stabilizer {g : twist(g, m) iso m}; flags inconclusive searches.
struct StabilizerResult {
    std::vector<bool> in_stab;
    bool inconclusive = false;
    bool full(size_t n) const {
        size_t c = 0;
        for (bool b : in_stab) c += b;
        return c == n;
    }
};
StabilizerResult module_stabilizer(const AlgebraAction& act, const FDModule& m,
                                   uint64_t seed, int budget);

Mat random_combination(const FieldSpec& F, const std::vector<Mat>& basis, Rng& rng);

} // namespace skewcov
