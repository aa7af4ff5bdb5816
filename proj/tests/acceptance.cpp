// One line per acceptance criterion. Exit status is nonzero if any fails.
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "hirz/hirz.hpp"
#include "hirz/lattice_oracle.hpp"
#include "hirz/verify.hpp"

using namespace hirz;

namespace {

constexpr Int kEMax = 4;
constexpr Int kTMax = 6;

struct Outcome {
    bool ok = true;
    std::string why;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

int failures = 0;

void criterion(int id, const char* name, const std::function<void(Outcome&)>& body) {
    Outcome o;
    try {
        body(o);
    } catch (const std::exception& ex) {
        o.ok = false;
        o.why = std::string("exception: ") + ex.what();
    }
    if (!o.ok) ++failures;
    std::printf("[%s] %2d %s%s%s\n", o.ok ? "PASS" : "FAIL", id, name, o.ok ? "" : " :: ", o.why.c_str());
}

std::vector<FamilyParams> regime_grid() {
    std::vector<FamilyParams> grid;
    for (Int e = 0; e <= 2; ++e)
        for (Int t = 0; t <= 6; ++t) grid.push_back(validate_params(e, 2 * e + 3 + t, t));
    return grid;
}

} // namespace

int main() {
    const std::vector<FamilyParams> grid = parameter_grid(kEMax, kTMax);

    criterion(1, "uniformity: r = 3e+5+t, l(3) = 0, l(2) = b-t-2e-4 < 0", [&](Outcome& o) {
        for (const FamilyParams& p : grid) {
            const Int e = p.e(), b = p.b(), t = p.t();
            const Int r = invariant_r(p, 3);
            o.expect(r == 3 * e + 5 + t, "r at " + p.str());
            o.expect(ell_invariant(p, 3, r) == 0, "l(3) at " + p.str());
            const Int ell2 = ell_invariant(p, 2, invariant_r(p, 2));
            o.expect(ell2 == b - t - 2 * e - 4 && ell2 < 0, "l(2) at " + p.str());
        }
    });

    criterion(2, "bundle cohomology: h0(E) = 5e+2b+4t+28, h1 = h2 = 0, h0(A), h0(B)", [&](Outcome& o) {
        for (const FamilyParams& p : grid) {
            const Int e = p.e(), b = p.b(), t = p.t();
            const CohomologyTable h = bundle_cohomology(p);
            o.expect(h.h0 == 5 * e + 2 * b + 4 * t + 28 && h.h1 == 0 && h.h2 == 0, "h(E) at " + p.str());
            const SplitBundle s = build_split(p);
            o.expect(cohomology(p.surface(), s.A).h0 == 6 * e + 4 * t + 24, "h0(A) at " + p.str());
            o.expect(cohomology(p.surface(), s.B).h0 == 2 * b + 4 - e, "h0(B) at " + p.str());
        }
    });

    criterion(3, "embedding data: n and d by two routes each", [&](Outcome& o) {
        for (const FamilyParams& p : grid) {
            const Int e = p.e(), b = p.b(), t = p.t();
            const Int n = embedding_dimension(p), d = scroll_degree(p);
            o.expect(n == bundle_cohomology(p).h0 - 1 && n == 5 * e + 2 * b + 4 * t + 27, "n at " + p.str());
            const ScrollContext ctx = ScrollContext::from(p);
            const Int xi3 = degree(power(ctx, ChowClass::tautological(), 3));
            const Int c1sq = intersect(p.surface(), ctx.c1, ctx.c1) - ctx.c2;
            o.expect(d == xi3 && d == c1sq && d == 8 * e + 5 * b + 7 * t + 40, "d at " + p.str());
        }
    });

    criterion(4, "intersection numbers match closed forms; (2,7,0) spot values", [&](Outcome& o) {
        for (const FamilyParams& p : grid)
            o.expect(chow_intersection_numbers(ScrollContext::from(p)) == closed_form_intersection_numbers(p),
                     "closed forms at " + p.str());
        const IntersectionNumbers in = intersection_numbers(validate_params(2, 7, 0));
        o.expect(in.L3 == 91 && in.KL2 == -100 && in.K2L == 88 && in.K3 == -56 && in.c2L == 42 && -in.Kc2 == 24 &&
                     in.c3 == 8,
                 "spot values at (2,7,0)");
    });

    criterion(5, "Hilbert polynomial: P(m) = chi(Sym^m E), P(0) = 1, P(1) = n+1", [&](Outcome& o) {
        for (const FamilyParams& p : grid) {
            const RationalCubic P = hilbert_polynomial(p);
            const SplitBundle s = build_split(p);
            for (Int m = 0; m <= 8; ++m)
                o.expect(P(m) == Rational(sym_chi(s, m, DivisorClass{})), "P(" + std::to_string(m) + ") at " + p.str());
            o.expect(P(0) == Rational(1), "P(0) at " + p.str());
            o.expect(P(1) == Rational(embedding_dimension(p) + 1), "P(1) at " + p.str());
        }
    });

    criterion(6, "component dimension: chi(N) = n(n+1)+9e+20+6t; spots 2690, 1142, 1855", [&](Outcome& o) {
        for (const FamilyParams& p : regime_grid()) {
            const Int e = p.e(), t = p.t();
            const Int n = embedding_dimension(p);
            const Int chow = chi_normal_chow(ScrollContext::from(p), n);
            o.expect(n == 9 * e + 33 + 6 * t, "n at " + p.str());
            o.expect(chow == n * (n + 1) + 9 * e + 20 + 6 * t && chow == chi_normal(p), "chi(N) at " + p.str());
        }
        const std::pair<std::pair<Int, Int>, Int> spots[] = {{{2, 0}, 2690}, {{0, 0}, 1142}, {{1, 0}, 1855}};
        for (const auto& [et, expected] : spots) {
            const auto [e, t] = et;
            const Int got = *component_dimension(validate_params(e, 2 * e + 3 + t, t)).dim_component;
            o.expect(got == expected, "spot (e,t) = (" + std::to_string(e) + "," + std::to_string(t) + "): expected " +
                                          std::to_string(expected) + ", computed " + std::to_string(got) +
                                          " (n(n+1)+9e+20+6t with n = 42 gives 1835)");
        }
    });

    criterion(7, "tangent cohomology: chi(T_X) = 13, h0/h1 = e+12/e-1 or 13/0", [&](Outcome& o) {
        for (const FamilyParams& p : regime_grid()) {
            const Int e = p.e();
            const TangentCohomology tx = tangent_cohomology(p);
            o.expect(tx.chi == 13, "chi at " + p.str());
            const ThreefoldCohomology want = e == 0 ? ThreefoldCohomology{13, 0, 0, 0}
                                                    : ThreefoldCohomology{e + 12, e - 1, 0, 0};
            o.expect(tx.h == want, "h(T_X) at " + p.str());
        }
    });

    criterion(8, "Euler sequence: h0(N) = (n+1)^2 - 1 - h0(T_X) + h1(T_X)", [&](Outcome& o) {
        for (const FamilyParams& p : regime_grid()) {
            const HilbertReport r = component_dimension(p);
            o.expect(r.hN && r.hTX && r.hN->h0 == (r.n + 1) * (r.n + 1) - 1 - r.hTX->h0 + r.hTX->h1,
                     "identity at " + p.str());
        }
    });

    criterion(9, "codimension of the scroll locus: e-1, or 0 for e = 0", [&](Outcome& o) {
        for (const FamilyParams& p : regime_grid())
            o.expect(scroll_locus_codim(p) == (p.e() == 0 ? 0 : p.e() - 1), "codim at " + p.str());
    });

    criterion(10, "property suites: Serre, RR, lattice oracle, ring axioms, vanishing windows", [&](Outcome& o) {
        for (Int e = 0; e <= kEMax; ++e) {
            const Surface s(e);
            const DivisorClass K = canonical_class(s);
            for (Int a = -12; a <= 12; ++a)
                for (Int c = -12; c <= 12; ++c) {
                    const DivisorClass D{a, c};
                    const CohomologyTable h = cohomology(s, D), dual = cohomology(s, K - D);
                    o.expect(h.h0 == dual.h2 && h.h1 == dual.h1 && h.h2 == dual.h0, "Serre at " + D.str());
                    const Int twice = intersect(s, D, D - K);
                    o.expect(twice % 2 == 0 && h.chi == 1 + twice / 2, "RR at " + D.str());
                    o.expect(oracle::h0_lattice_oracle(s, D) == h.h0, "oracle at " + D.str());
                }
        }

        std::mt19937_64 rng(7);
        std::uniform_int_distribution<Int> ee(0, kEMax), cc(-9, 9);
        auto random_class = [&] {
            return ChowClass{cc(rng), cc(rng), cc(rng), cc(rng), cc(rng), cc(rng), cc(rng), cc(rng)};
        };
        for (int i = 0; i < 2000; ++i) {
            const ScrollContext ctx{ee(rng), {cc(rng), cc(rng)}, cc(rng)};
            const ChowClass x = random_class(), y = random_class(), z = random_class();
            o.expect(multiply(ctx, x, y) == multiply(ctx, y, x), "commutativity");
            o.expect(multiply(ctx, multiply(ctx, x, y), z) == multiply(ctx, x, multiply(ctx, y, z)), "associativity");
            o.expect(multiply(ctx, x, y + z) == multiply(ctx, x, y) + multiply(ctx, x, z), "distributivity");
            o.expect(multiply(ctx, ChowClass::one(), x) == x, "unit");
        }

        for (Int e = 0; e <= kEMax; ++e)
            for (Int t = 0; t <= kTMax; ++t) {
                const Surface s(e);
                const DivisorClass A{3, 3 * e + 5 + t};
                for (Int b = -1; b <= 3 * e + 10 + t; ++b) {
                    const DivisorClass B{1, b + 1};
                    const std::string where = "(e,b,t) = (" + std::to_string(e) + "," + std::to_string(b) + "," +
                                              std::to_string(t) + ")";
                    o.expect((cohomology(s, A - B).h1 == 0) == (b < 6 + t + e), "h1(A-B) window at " + where);
                    o.expect((cohomology(s, B - A).h2 == 0) == (b >= 2 * e + 3 + t), "h2(B-A) window at " + where);
                }
            }
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
