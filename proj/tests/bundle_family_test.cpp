#include <gtest/gtest.h>

#include "hirz/bundle_family.hpp"
#include "hirz/verify.hpp"

namespace hirz {
namespace {

ParamViolation violation_of(Int e, Int b, Int t) {
    try {
        validate_params(e, b, t);
    } catch (const InvalidParams& ex) {
        return ex.violation();
    }
    ADD_FAILURE() << "expected (" << e << "," << b << "," << t << ") to be rejected";
    return ParamViolation::negative_e;
}

TEST(ValidateParams, AcceptsDimensionRegime) {
    const FamilyParams p = validate_params(2, 7, 0);
    EXPECT_EQ(p.e(), 2);
    EXPECT_EQ(p.b(), 7);
    EXPECT_EQ(p.t(), 0);
    EXPECT_EQ(p.b_m(), 12);
    EXPECT_TRUE(p.paper_regime());
}

TEST(ValidateParams, DistinctViolations) {
    EXPECT_EQ(violation_of(0, 4, 0), ParamViolation::b_upper_bound);
    EXPECT_EQ(violation_of(1, -2, 5), ParamViolation::b_at_most_minus_two);
    EXPECT_EQ(violation_of(2, 1, 0), ParamViolation::ampleness);
    EXPECT_EQ(violation_of(0, 1, -1), ParamViolation::negative_t);
    EXPECT_EQ(violation_of(-1, 1, 0), ParamViolation::negative_e);
}

TEST(ValidateParams, UpperBoundMessageNamesInequality) {
    try {
        validate_params(0, 4, 0);
        FAIL();
    } catch (const InvalidParams& ex) {
        EXPECT_NE(std::string(ex.what()).find("b_l < 2e+4+t"), std::string::npos);
        EXPECT_EQ(ex.exit_code(), 1);
    }
}

TEST(ValidateParams, WindowAtEZero) {
    // -2 < b < 4 together with b > e-1 = -1 leaves b in {0,1,2,3}.
    std::vector<Int> valid;
    for (Int b = -5; b <= 6; ++b) {
        try {
            validate_params(0, b, 0);
            valid.push_back(b);
        } catch (const InvalidParams&) {
        }
    }
    EXPECT_EQ(valid, (std::vector<Int>{0, 1, 2, 3}));
}

TEST(BuildSplit, Classes) {
    auto check = [](Int e, Int b, Int t, DivisorClass A, DivisorClass B) {
        const SplitBundle s = build_split(validate_params(e, b, t));
        EXPECT_EQ(s.A, A);
        EXPECT_EQ(s.B, B);
        EXPECT_EQ(s.e, e);
    };
    check(2, 7, 0, {3, 11}, {1, 8});
    check(0, 3, 0, {3, 5}, {1, 4});
    check(1, 5, 0, {3, 8}, {1, 6});
}

TEST(Chern, Examples) {
    EXPECT_EQ(chern(validate_params(2, 7, 0)), (ChernData{{4, 19}, 29}));
    EXPECT_EQ(chern(validate_params(0, 3, 0)), (ChernData{{4, 9}, 17}));
    const FamilyParams p = validate_params(2, 7, 0);
    const Surface s = p.surface();
    const ExtensionData ext = build_extension(p);
    const SplitBundle split = build_split(p);
    EXPECT_EQ(intersect(s, split.A, split.B), 29);
    EXPECT_EQ(intersect(s, ext.L, ext.M) + ext.w_len, 29);
}

TEST(InvariantR, Examples) {
    EXPECT_EQ(invariant_r(validate_params(2, 7, 0), 3), 11);
    EXPECT_EQ(invariant_r(validate_params(0, 3, 0), 3), 5);
    // A - 3C0 + l f = (3e+5+t+l) f has a section iff l >= -(3e+5+t); B - 3C0 never does.
    EXPECT_EQ(invariant_r(validate_params(1, 5, 0), 3), 8);
}

TEST(InvariantR, RejectsBadD1) {
    const FamilyParams p = validate_params(2, 7, 0);
    EXPECT_THROW(invariant_r(p, 0), DomainError);
    EXPECT_THROW(invariant_r(p, 4), DomainError);
    EXPECT_NO_THROW(invariant_r(p, 1));
}

TEST(EllInvariant, Examples) {
    EXPECT_EQ(ell_invariant(validate_params(2, 7, 0), 2, 11), -1);
    EXPECT_EQ(ell_invariant(validate_params(2, 7, 0), 3, 11), 0);
    EXPECT_EQ(ell_invariant(validate_params(0, 3, 0), 2, 5), -1);
}

TEST(SplittingType, Examples) {
    using Type = std::pair<Int, Int>;
    EXPECT_EQ(splitting_type(validate_params(2, 7, 0)), (Type{3, 1}));
    EXPECT_EQ(splitting_type(validate_params(0, 3, 0)), (Type{3, 1}));
    EXPECT_EQ(splitting_type(validate_params(1, 4, 2)), (Type{3, 1}));
}

TEST(IsUniform, Evidence) {
    const UniformityEvidence a = is_uniform(validate_params(2, 7, 0));
    EXPECT_TRUE(a.uniform);
    EXPECT_EQ(a.r, 11);
    EXPECT_EQ(a.ell3, 0);
    EXPECT_EQ(a.ell2, -1);

    const UniformityEvidence b = is_uniform(validate_params(0, 3, 0));
    EXPECT_TRUE(b.uniform);
    EXPECT_EQ(b.r, 5);
    EXPECT_EQ(b.ell2, -1);

    const UniformityEvidence c = is_uniform(validate_params(2, 5, 3));
    EXPECT_TRUE(c.uniform);
    EXPECT_EQ(c.ell2, -6);
}

TEST(BundleCohomology, Examples) {
    EXPECT_EQ(bundle_cohomology(validate_params(2, 7, 0)), (CohomologyTable{52, 0, 0, 52}));
    EXPECT_EQ(bundle_cohomology(validate_params(0, 3, 0)).h0, 34);
    const SplitBundle s = build_split(validate_params(2, 5, 0));
    EXPECT_EQ(cohomology(Surface(2), s.A).h0, 36);
}

TEST(SymChi, Examples) {
    const SplitBundle s = build_split(validate_params(2, 7, 0));
    EXPECT_EQ(sym_chi(s, 0, {}), 1);
    EXPECT_EQ(sym_chi(s, 1, {}), 52);
    EXPECT_EQ(sym_chi(s, 2, {-4, -19}), 7);
    EXPECT_THROW(sym_chi(s, -1, {}), DomainError);
}

TEST(Sym2Twisted, Examples) {
    for (auto [e, b, t] : {std::tuple{2, 7, 0}, std::tuple{0, 3, 0}, std::tuple{1, 5, 0}})
        EXPECT_EQ(sym2_twisted_cohomology(validate_params(e, b, t)), (CohomologyTable{7, 0, 0, 7}));
}

TEST(FamilyGrid, Invariants) {
    for (const FamilyParams& p : parameter_grid(4, 6)) {
        const Int e = p.e(), b = p.b(), t = p.t();
        SCOPED_TRACE(p.str());
        EXPECT_NO_THROW(chern(p));
        for (Int r = 0; r <= 40; ++r) EXPECT_EQ(ell_invariant(p, 2, r), b - t - 2 * e - 4);
        const Int r3 = invariant_r(p, 3);
        EXPECT_EQ(r3, 3 * e + 5 + t);
        EXPECT_EQ(ell_invariant(p, 3, r3), 0);
        const CohomologyTable h = bundle_cohomology(p);
        EXPECT_EQ(h.h0, 5 * e + 2 * b + 4 * t + 28);
        EXPECT_EQ(h.h0, sym_chi(build_split(p), 1, {}));
    }
}

TEST(VanishingWindows, BothDirections) {
    // Sweep b across 6+t+e (h1(A-B)) and 2e+3+t (h2(B-A)) on the raw classes.
    for (Int e = 0; e <= 4; ++e)
        for (Int t = 0; t <= 6; ++t) {
            const Surface s(e);
            const DivisorClass A{3, 3 * e + 5 + t};
            bool saw_v1_true = false, saw_v1_false = false, saw_v2_true = false, saw_v2_false = false;
            for (Int b = -1; b <= 3 * e + 10 + t; ++b) {
                const DivisorClass B{1, b + 1};
                const bool v1 = cohomology(s, A - B).h1 == 0;
                const bool v2 = cohomology(s, B - A).h2 == 0;
                EXPECT_EQ(v1, b < 6 + t + e) << "e=" << e << " t=" << t << " b=" << b;
                EXPECT_EQ(v2, b >= 2 * e + 3 + t) << "e=" << e << " t=" << t << " b=" << b;
                (v1 ? saw_v1_true : saw_v1_false) = true;
                (v2 ? saw_v2_true : saw_v2_false) = true;
            }
            EXPECT_TRUE(saw_v1_true && saw_v1_false && saw_v2_true && saw_v2_false);
        }
}

} // namespace
} // namespace hirz
