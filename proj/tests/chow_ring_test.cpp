#include <random>

#include <gtest/gtest.h>

#include "hirz/chow_ring.hpp"
#include "hirz/verify.hpp"

namespace hirz {
namespace {

const ScrollContext kCtx270{2, {4, 19}, 29};

TEST(Multiply, TautologicalCube) {
    const ChowClass xi = ChowClass::tautological();
    EXPECT_EQ(multiply(kCtx270, multiply(kCtx270, xi, xi), xi), ChowClass::zero_cycle(91));
    EXPECT_EQ(degree(power(kCtx270, xi, 3)), 91);
}

TEST(Multiply, GrothendieckRelation) {
    // xi^2 = xi.phi*c1 - c2 phi*[pt]
    const ChowClass xi = ChowClass::tautological();
    const ChowClass expect = ChowClass::xi_times_pullback(kCtx270.c1) - 29 * ChowClass::pullback_point();
    EXPECT_EQ(multiply(kCtx270, xi, xi), expect);
}

TEST(Multiply, PulledBackClasses) {
    const ChowClass C0 = ChowClass::pullback(kSection);
    const ChowClass f = ChowClass::pullback(kFiber);
    EXPECT_EQ(multiply(kCtx270, C0, C0), -2 * ChowClass::pullback_point());
    EXPECT_EQ(multiply(kCtx270, f, ChowClass::pullback_point()), ChowClass{});
    EXPECT_EQ(multiply(kCtx270, ChowClass::tautological(), ChowClass::pullback_point()), ChowClass::point());
    EXPECT_EQ(multiply(kCtx270, ChowClass::point(), ChowClass::tautological()), ChowClass{});
}

TEST(Degree, ZeroCyclesOnly) {
    EXPECT_EQ(degree(ChowClass::zero_cycle(91)), 91);
    EXPECT_THROW(degree(ChowClass::tautological()), DomainError);
    EXPECT_EQ(degree(ChowClass{}), 0);
}

TEST(CanonicalClass, Examples) {
    EXPECT_EQ(canonical_class_X(kCtx270), -2 * ChowClass::tautological() + ChowClass::pullback({2, 15}));
    const ScrollContext ctx030 = ScrollContext::from(validate_params(0, 3, 0));
    EXPECT_EQ(canonical_class_X(ctx030), -2 * ChowClass::tautological() + ChowClass::pullback({2, 7}));
    const ChowClass L = ChowClass::tautological();
    EXPECT_EQ(degree(multiply(kCtx270, canonical_class_X(kCtx270), multiply(kCtx270, L, L))), -100);
}

TEST(ChernTX, Fixtures) {
    const TangentChern c = chern_TX(kCtx270);
    EXPECT_EQ(degree(c.c3), 8);
    EXPECT_EQ(degree(multiply(kCtx270, canonical_class_X(kCtx270), c.c2)), -24);
    EXPECT_EQ(degree(multiply(kCtx270, c.c2, ChowClass::tautological())), 42);
    EXPECT_EQ(c.c1, -canonical_class_X(kCtx270));
}

TEST(IntersectionNumbers, SpotValues) {
    EXPECT_EQ(intersection_numbers(validate_params(2, 7, 0)), (IntersectionNumbers{91, -100, 88, -56, 42, -24, 8}));
    EXPECT_EQ(intersection_numbers(validate_params(0, 3, 0)).L3, 55);
    EXPECT_EQ(intersection_numbers(validate_params(1, 5, 0)).L3, 73);
}

TEST(IntersectionNumbers, ClosedFormsOnGrid) {
    for (const FamilyParams& p : parameter_grid(4, 6)) {
        SCOPED_TRACE(p.str());
        const ScrollContext ctx = ScrollContext::from(p);
        EXPECT_EQ(chow_intersection_numbers(ctx), closed_form_intersection_numbers(p));
        EXPECT_EQ(degree(power(ctx, ChowClass::tautological(), 3)),
                  intersect(p.surface(), ctx.c1, ctx.c1) - ctx.c2);
        EXPECT_EQ(degree(chern_TX(ctx).c3), 8);
    }
}

ChowClass random_class(std::mt19937_64& rng) {
    std::uniform_int_distribution<Int> c(-9, 9);
    return {c(rng), c(rng), c(rng), c(rng), c(rng), c(rng), c(rng), c(rng)};
}

TEST(RingAxioms, Randomized) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> ee(0, 4), cc(-9, 9);
    for (int i = 0; i < 3000; ++i) {
        const ScrollContext ctx{ee(rng), {cc(rng), cc(rng)}, cc(rng)};
        const ChowClass x = random_class(rng), y = random_class(rng), z = random_class(rng);
        EXPECT_EQ(multiply(ctx, x, y), multiply(ctx, y, x));
        EXPECT_EQ(multiply(ctx, multiply(ctx, x, y), z), multiply(ctx, x, multiply(ctx, y, z)));
        EXPECT_EQ(multiply(ctx, x, y + z), multiply(ctx, x, y) + multiply(ctx, x, z));
        EXPECT_EQ(multiply(ctx, ChowClass::one(), x), x);
    }
}

TEST(RingAxioms, DegreeAboveThreeVanishes) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const ChowClass x = random_class(rng).part(2), y = random_class(rng).part(2);
        EXPECT_EQ(multiply(kCtx270, x, y), ChowClass{});
        EXPECT_EQ(multiply(kCtx270, random_class(rng).part(1), ChowClass::zero_cycle(5)), ChowClass{});
    }
}

} // namespace
} // namespace hirz
