#pragma once

// The morphism category H(mod) and its monomorphism subcategory S(mod):
// hom spaces between morphism objects are commuting-square pairs (a, b) with
// f b = a h; the lifted pushdown, twist, adjunction, and the HGCM checks.

#include "skewcov/module.hpp"

namespace skewcov {

struct MorphismObject {
    FDModule src, tgt;
    Mat map;   // src.dim x tgt.dim, intertwining

    bool is_mono(const FieldSpec& F) const { return rank_of(F, map) == src.dim; }
};

// Throws NotAHomomorphism unless map intertwines the two actions exactly.
MorphismObject make_morphism(FDModule src, FDModule tgt, Mat map);
MorphismObject identity_morphism(const FDModule& m);
MorphismObject zero_morphism(const FDModule& m, const FDModule& n);
MorphismObject h_direct_sum(const MorphismObject& a, const MorphismObject& b);

struct HHomBasis {
    std::vector<std::pair<Mat, Mat>> basis;   // (a, b) with b a = ... f b = h a in row convention
    size_t dim() const { return basis.size(); }
};

HHomBasis hhom_space(const MorphismObject& f, const MorphismObject& h);

MorphismObject h_pushdown(const SkewAlgebraBundle& B, const MorphismObject& f);
MorphismObject h_twist(const AlgebraAction& act, uint32_t g, const MorphismObject& f);
MorphismObject h_restrict(const SkewAlgebraBundle& B, const MorphismObject& fbar);

struct HIsoResult {
    enum Kind { Iso, NonIso, Inconclusive } kind = Inconclusive;
    Mat witness_a, witness_b;
    std::string reason;
};
HIsoResult h_iso(const MorphismObject& f, const MorphismObject& h, uint64_t seed, int budget);

IndecResult h_indecomposable(const MorphismObject& f, uint64_t seed, int budget);

StabilizerResult h_stabilizer(const AlgebraAction& act, const MorphismObject& f,
                              uint64_t seed, int budget);

struct GstabReport {
    bool part1 = false;           // HF(^g f) iso HF(f) for every g, witnessed
    bool part2 = false;           // restrict o pushdown iso direct sum of twists
    bool inconclusive = false;
};
GstabReport verify_gstab(const SkewAlgebraBundle& B, const MorphismObject& f,
                         uint64_t seed, int budget);

// Part (3): indecomposables with isomorphic pushdowns differ by a twist.
struct GstabPart3 {
    bool applicable = false;      // pushdowns isomorphic
    bool pass = false;            // some g with f1 iso ^g f2
    uint32_t witness_g = 0;
    bool inconclusive = false;
};
GstabPart3 verify_gstab_part3(const SkewAlgebraBundle& B, const MorphismObject& f1,
                              const MorphismObject& f2, uint64_t seed, int budget);

struct HgcmReport {
    int hgcm_case = 0;            // I..IV as 1..4 from the stabilizer pattern
    size_t lhs = 0;
    std::vector<std::pair<std::string, size_t>> rhs;   // branch label -> value
    bool pass = false;
    bool stabilizer_inconclusive = false;
};
HgcmReport verify_hgcm(const SkewAlgebraBundle& B, const MorphismObject& f,
                       const MorphismObject& h, uint64_t seed, int budget);

struct HadjReport {
    size_t lhs_dim = 0, rhs_dim = 0;
    bool dims_equal = false;
    bool mutually_inverse = false;
    bool natural = false;
    bool mono_pair = false;       // both objects are monos (the S(mod) case)
    bool mono_preserved = false;  // pushdown/restriction stayed inside S(mod)
    bool ok() const { return dims_equal && mutually_inverse && natural; }
    std::string note;
};
HadjReport h_adjunction_check(const SkewAlgebraBundle& B, const MorphismObject& f,
                              const MorphismObject& mbar, uint64_t seed);

} // namespace skewcov
