#ifndef HIRZ_BUNDLE_FAMILY_HPP_
#define HIRZ_BUNDLE_FAMILY_HPP_

#include <string>
#include <utility>

#include "hirz/checked.hpp"
#include "hirz/error.hpp"
#include "hirz/surface_lattice.hpp"

namespace hirz {

/* Rank-two bundles E on F_e given as extensions
 *
 *     0 -> L -> E -> M (x) I_W -> 0,   L = C0 + b f,  M = 3C0 + (3e+6+t) f,
 *
 * with W two reduced points on one fibre. Every such E is uniform of
 * splitting type (3,1) and sits in 0 -> A -> E -> B -> 0 with
 * A = 3C0 + (3e+5+t) f and B = C0 + (b+1) f. */

/// A validated (e, b, t). Only validate_params() constructs one.
class FamilyParams {
public:
    Int e() const noexcept { return e_; }
    Int b() const noexcept { return b_; }
    Int t() const noexcept { return t_; }

    /// f-coefficient of M.
    Int b_m() const { return checked::sum({checked::mul(3, e_), 6, t_}); }
    Surface surface() const { return Surface(e_); }

    /// e <= 2 and b = 2e+3+t.
    bool paper_regime() const { return e_ <= 2 && b_ == checked::sum({checked::mul(2, e_), 3, t_}); }

    std::string str() const {
        return "(e=" + std::to_string(e_) + ", b=" + std::to_string(b_) + ", t=" + std::to_string(t_) + ")";
    }

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;

private:
    FamilyParams(Int e, Int b, Int t) : e_(e), b_(b), t_(t) {}
    friend FamilyParams validate_params(Int e, Int b, Int t);

    Int e_;
    Int b_;
    Int t_;
};

inline FamilyParams validate_params(Int e, Int b, Int t) {
    if (e < 0)
        throw InvalidParams(ParamViolation::negative_e, "e >= 0 violated: e = " + std::to_string(e));
    if (t < 0)
        throw InvalidParams(ParamViolation::negative_t,
                            "t >= 0 violated (b_m >= 3e+6): t = " + std::to_string(t));
    if (b <= -2)
        throw InvalidParams(ParamViolation::b_at_most_minus_two,
                            "b_l > -2 violated: b = " + std::to_string(b));
    const Int upper = checked::sum({checked::mul(2, e), 4, t});
    if (b >= upper)
        throw InvalidParams(ParamViolation::b_upper_bound,
                            "b_l < 2e+4+t violated: b = " + std::to_string(b) +
                                ", 2e+4+t = " + std::to_string(upper));
    if (b <= e - 1)
        throw InvalidParams(ParamViolation::ampleness,
                            "ampleness consequence violated: b > e-1 fails for b = " + std::to_string(b) +
                                ", e = " + std::to_string(e));
    return FamilyParams(e, b, t);
}

struct SplitBundle {
    DivisorClass A;
    DivisorClass B;
    Int e = 0;
};

struct ChernData {
    DivisorClass c1;
    Int c2 = 0;

    friend bool operator==(const ChernData&, const ChernData&) = default;
};

/// The defining extension: sub-line-bundle L, quotient M twisted by the ideal of W.
struct ExtensionData {
    DivisorClass L;
    DivisorClass M;
    Int w_len = 2;
};

inline SplitBundle build_split(const FamilyParams& p) {
    return {{3, checked::sum({checked::mul(3, p.e()), 5, p.t()})}, {1, checked::add(p.b(), 1)}, p.e()};
}

inline ExtensionData build_extension(const FamilyParams& p) {
    return {{1, p.b()}, {3, p.b_m()}, 2};
}

/// c1 = 4C0 + (b+3e+6+t) f, c2 = 3b+8+t; cross-checked against A+B, A.B and L+M, L.M + len(W).
inline ChernData chern(const FamilyParams& p) {
    const Surface s = p.surface();
    const ChernData closed{{4, checked::sum({p.b(), checked::mul(3, p.e()), 6, p.t()})},
                           checked::sum({checked::mul(3, p.b()), 8, p.t()})};

    const SplitBundle split = build_split(p);
    const ChernData from_split{split.A + split.B, intersect(s, split.A, split.B)};

    const ExtensionData ext = build_extension(p);
    const ChernData from_ext{ext.L + ext.M, checked::add(intersect(s, ext.L, ext.M), ext.w_len)};

    ensure(from_split == closed, "Chern data: c1 = A+B, c2 = A.B disagrees with closed form at " + p.str());
    ensure(from_ext == closed, "Chern data: c1 = L+M, c2 = L.M+2 disagrees with closed form at " + p.str());
    return closed;
}

namespace detail {

inline Int twisted_split_h0(const FamilyParams& p, Int d1, Int ell) {
    const Surface s = p.surface();
    const SplitBundle split = build_split(p);
    const DivisorClass twist{checked::neg(d1), ell};
    return checked::add(cohomology(s, split.A + twist).h0, cohomology(s, split.B + twist).h0);
}

} // namespace detail

/* r = -min{ l : h^0(E(-d1 C0 + l f)) != 0 }, searched on the split form.
 * h^0 is nondecreasing in l, so the first hit is the infimum. */
inline Int invariant_r(const FamilyParams& p, Int d1) {
    if (d1 < 1 || d1 > 3) throw DomainError("invariant_r: d1 must be 1, 2 or 3, got " + std::to_string(d1));
    const Int radius = checked::sum({p.b_m(), checked::abs(p.b()), 4});
    for (Int ell = checked::neg(radius); ell <= radius; ++ell) {
        if (detail::twisted_split_h0(p, d1, ell) > 0) return checked::neg(ell);
    }
    throw ConsistencyError("invariant_r: no section of E(-" + std::to_string(d1) +
                           "C0 + l f) in the search window at " + p.str());
}

/// l(c1, c2, d1, r) = c2 + 4(d1 e - r) - (b_l + b_m) d1 + 2 d1 r - d1^2 e.
inline Int ell_invariant(const FamilyParams& p, Int d1, Int r) {
    const Int e = p.e();
    const Int c2 = checked::sum({checked::mul(3, p.b()), 8, p.t()});
    const Int bl_plus_bm = checked::add(p.b(), p.b_m());
    return checked::sum({c2,
                         checked::mul(4, checked::sub(checked::mul(d1, e), r)),
                         checked::neg(checked::mul(bl_plus_bm, d1)),
                         checked::mul({2, d1, r}),
                         checked::neg(checked::mul({d1, d1, e}))});
}

struct UniformityEvidence {
    bool uniform = false;
    Int r = 0;
    Int ell3 = 0;
    Int ell2 = 0;
};

inline UniformityEvidence is_uniform(const FamilyParams& p) {
    UniformityEvidence ev;
    ev.r = invariant_r(p, 3);
    ev.ell3 = ell_invariant(p, 3, ev.r);
    ev.ell2 = ell_invariant(p, 2, invariant_r(p, 2));
    ev.uniform = ev.ell3 == 0;
    return ev;
}

/* Generic splitting type. A very ample E with c1.f = 4 splits as (3,1) or
 * (2,2) on the generic fibre; (2,2) is excluded by l(.,2,r) < 0, and l(.,3,r) = 0
 * gives uniformity. */
inline std::pair<Int, Int> splitting_type(const FamilyParams& p) {
    const Int expected_ell2 = checked::sum({p.b(), checked::neg(p.t()), checked::mul(-2, p.e()), -4});
    const Int ell2 = ell_invariant(p, 2, invariant_r(p, 2));
    ensure(ell2 == expected_ell2, "l(c1,c2,2,r) = b-t-2e-4 fails at " + p.str());
    for (Int r = 0; r <= 40; ++r)
        ensure(ell_invariant(p, 2, r) == expected_ell2, "l(c1,c2,2,r) depends on r at " + p.str());
    ensure(ell2 < 0, "l(c1,c2,2,r) >= 0: splitting type (2,2) not excluded at " + p.str());

    const Int ell3 = ell_invariant(p, 3, invariant_r(p, 3));
    ensure(ell3 == 0, "l(c1,c2,3,r) = 0 fails at " + p.str());
    return {3, 1};
}

/// Cohomology of E, from 0 -> A -> E -> B -> 0 with h^i(A) = h^i(B) = 0 for i >= 1.
inline CohomologyTable bundle_cohomology(const FamilyParams& p) {
    const Surface s = p.surface();
    const SplitBundle split = build_split(p);
    const CohomologyTable hA = cohomology(s, split.A);
    const CohomologyTable hB = cohomology(s, split.B);
    const Int e = p.e();
    const Int b = p.b();
    const Int t = p.t();

    ensure(hA.h0 == checked::sum({checked::mul(6, e), checked::mul(4, t), 24}),
           "h0(A) = 6e+4t+24 fails at " + p.str());
    ensure(hB.h0 == checked::sum({checked::mul(2, b), 4, checked::neg(e)}),
           "h0(B) = 2b+4-e fails at " + p.str());
    ensure(hA.h1 == 0 && hA.h2 == 0, "h^i(A) = 0 for i >= 1 fails at " + p.str());
    ensure(hB.h1 == 0 && hB.h2 == 0, "h^i(B) = 0 for i >= 1 fails at " + p.str());

    const CohomologyTable hE = hA + hB;
    ensure(hE.h0 == checked::sum({checked::mul(5, e), checked::mul(2, b), checked::mul(4, t), 28}),
           "h0(E) = 5e+2b+4t+28 fails at " + p.str());
    return hE;
}

/// chi(Sym^m(A + B) (x) twist) = sum_{i=0}^{m} chi(iA + (m-i)B + twist).
inline Int sym_chi(const SplitBundle& bundle, Int m, const DivisorClass& twist) {
    if (m < 0) throw DomainError("sym_chi: m must be >= 0, got " + std::to_string(m));
    const Surface s(bundle.e);
    Int total = 0;
    for (Int i = 0; i <= m; ++i) {
        const DivisorClass piece = i * bundle.A + checked::sub(m, i) * bundle.B + twist;
        total = checked::add(total, euler_characteristic(s, piece));
    }
    return total;
}

/// Cohomology of Sym^2(E)(-c1) through its graded pieces A-B, O, B-A.
inline CohomologyTable sym2_twisted_cohomology(const FamilyParams& p) {
    const Surface s = p.surface();
    const SplitBundle split = build_split(p);
    return cohomology(s, split.A - split.B) + cohomology(s, DivisorClass{}) +
           cohomology(s, split.B - split.A);
}

} // namespace hirz

#endif // HIRZ_BUNDLE_FAMILY_HPP_
