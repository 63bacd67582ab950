#pragma once

// Finitely presented functors coker Hom(-, f): evaluation, natural
// transformation spaces computed through presentations, the induced functor
// phi across the skew pair, and the GCF / exactness / faithfulness /
// Yoneda-square checks.

#include "skewcov/morphism.hpp"

namespace skewcov {

struct FPFunctor {
    MorphismObject pres;   // T = coker Hom(-, pres)
};

inline FPFunctor theta(MorphismObject f) { return FPFunctor{std::move(f)}; }

struct EvalResult {
    size_t dim = 0;
    Mat projection;        // from coker_data of the post-composition map
    size_t hom_src = 0;    // dim Hom(x, M)
    size_t hom_tgt = 0;    // dim Hom(x, N)
    size_t rank = 0;       // rank of Hom(x, f)
};

// T(x) = coker(Hom(x, M) -> Hom(x, N)).
EvalResult evaluate(const FPFunctor& t, const FDModule& x);

// phi(T) presented by the pushed presentation (Prop cokphi route).
FPFunctor phi(const SkewAlgebraBundle& B, const FPFunctor& t);

// Nat(T1, T2) = hhom(f1, f2) modulo pairs whose second component factors as
// s * f2.  Classes are coordinatized by the V-reduced second component.
struct NatSpace {
    FieldSpec F;
    size_t dim = 0;
    std::vector<std::pair<Mat, Mat>> reps;   // hhom pairs with independent classes
    RowSpan factor_span;                     // V = {s * f2}, flattened
    std::shared_ptr<SpanSolver> class_solver;

    // class coordinates of an hhom pair, via its second component
    std::vector<uint32_t> class_coords(const Mat& b) const;
};

NatSpace nat_trans_space(const FPFunctor& t1, const FPFunctor& t2);

struct NatIsoResult {
    enum Kind { Iso, NonIso, Inconclusive } kind = Inconclusive;
    std::string reason;
};
// Existence of an invertible natural transformation: pick nu, solve linearly
// for a two-sided inverse class.
NatIsoResult nat_iso(const FPFunctor& t1, const FPFunctor& t2, uint64_t seed, int budget);

FPFunctor functor_twist(const AlgebraAction& act, uint32_t g, const FPFunctor& t);
StabilizerResult functor_stabilizer(const AlgebraAction& act, const FPFunctor& t,
                                    uint64_t seed, int budget);

struct GcfReport {
    int gcf_case = 0;                                  // mirrors the HGCM cases
    size_t lhs = 0;
    std::vector<std::pair<std::string, size_t>> rhs;
    bool pass = false;
    bool stabilizer_inconclusive = false;
    // (G_T = G) iff (G_MN = G), meaningful for right-minimal presentations;
    // zero functors compare against their minimal presentation 0 -> 0.
    // 1 = agrees, 0 = disagrees, -1 = presentation not right-minimal
    int sfm_agrees = -1;
};

// f is right minimal iff {a : a f = 0} lies in rad End(src), decided through
// the trace form (valid since p exceeds every fixture dimension).
bool right_minimal(const MorphismObject& f);
// T = 0 iff the identity natural transformation has zero class.
bool functor_is_zero(const FPFunctor& t);
GcfReport verify_gcf(const SkewAlgebraBundle& B, const FPFunctor& t1, const FPFunctor& t2,
                     uint64_t seed, int budget);

struct PhiPointReport {
    int case_kind = 0;         // 1: xbar iso F(M); 2: proper summand; 0: unclassified
    size_t catalog_index = 0;  // witness M
    size_t v_phi = 0;          // evaluate(phi t, xbar)
    size_t v_primary = 0;      // evaluate(t, restrict xbar)  (the T^ o F^lambda value)
    size_t v_case = 0;         // the case-split prediction
    bool pass = false;
    bool inconclusive = false;
};
PhiPointReport phi_pointwise(const SkewAlgebraBundle& B, const FPFunctor& t, const FDModule& xbar,
                             const std::vector<FDModule>& lambda_catalog, uint64_t seed, int budget);

struct ExactnessRow {
    size_t hom_m = 0, hom_n = 0, rank = 0, value = 0;
    bool exact = false;        // value = hom_n - rank, pointwise right-exactness
};
ExactnessRow phi_exactness_at(const SkewAlgebraBundle& B, const FPFunctor& t, const FDModule& xbar);

struct FaithfulReport {
    size_t nat_dim = 0;
    size_t image_rank = 0;
    bool injective = false;
};
FaithfulReport phi_faithful_on_pair(const SkewAlgebraBundle& B, const FPFunctor& t1,
                                    const FPFunctor& t2);

struct YonedaReport {
    size_t lhs_dim = 0;        // through T^ o F^lambda
    size_t rhs_dim = 0;        // through the pushed presentation over the skew algebra
    bool dims_equal = false;
    bool beta_iso = false;     // Hom(F^ xbar, M) = Hom(xbar, F M) transport invertible both ends
    bool squares_commute = false;
    bool ok() const { return dims_equal && beta_iso && squares_commute; }
};
YonedaReport verify_yoneda_square(const SkewAlgebraBundle& B, const MorphismObject& f,
                                  const FDModule& xbar);

} // namespace skewcov
