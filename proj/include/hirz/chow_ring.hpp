#ifndef HIRZ_CHOW_RING_HPP_
#define HIRZ_CHOW_RING_HPP_

#include <ostream>
#include <string>

#include "hirz/bundle_family.hpp"
#include "hirz/checked.hpp"
#include "hirz/error.hpp"
#include "hirz/surface_lattice.hpp"

namespace hirz {

/// Chern data of E over F_e; enough to fix the ring structure of A(P(E)).
struct ScrollContext {
    Int e = 0;
    DivisorClass c1;
    Int c2 = 0;

    static ScrollContext from(const FamilyParams& p) {
        const ChernData ch = chern(p);
        return {p.e(), ch.c1, ch.c2};
    }
    Surface surface() const { return Surface(e); }
};

/* A class on X = P(E) in normal form over the basis
 *
 *   deg 0: 1
 *   deg 1: xi, phi*C0, phi*f
 *   deg 2: xi.phi*C0, xi.phi*f, phi*[pt]
 *   deg 3: [pt]
 *
 * where xi is the tautological class. Powers of xi above one are never stored. */
struct ChowClass {
    Int z = 0;
    Int xi = 0;
    Int h1 = 0;
    Int h2 = 0;
    Int xih1 = 0;
    Int xih2 = 0;
    Int p = 0;
    Int pt = 0;

    static ChowClass one() { return {.z = 1}; }
    static ChowClass tautological() { return {.xi = 1}; }
    static ChowClass pullback(const DivisorClass& d) { return {.h1 = d.a, .h2 = d.c}; }
    static ChowClass xi_times_pullback(const DivisorClass& d) { return {.xih1 = d.a, .xih2 = d.c}; }
    static ChowClass pullback_point() { return {.p = 1}; }
    static ChowClass point() { return {.pt = 1}; }
    static ChowClass zero_cycle(Int n) { return {.pt = n}; }

    friend bool operator==(const ChowClass&, const ChowClass&) = default;

    friend ChowClass operator+(const ChowClass& x, const ChowClass& y) {
        return {checked::add(x.z, y.z),       checked::add(x.xi, y.xi),
                checked::add(x.h1, y.h1),     checked::add(x.h2, y.h2),
                checked::add(x.xih1, y.xih1), checked::add(x.xih2, y.xih2),
                checked::add(x.p, y.p),       checked::add(x.pt, y.pt)};
    }
    friend ChowClass operator*(Int k, const ChowClass& x) {
        return {checked::mul(k, x.z),    checked::mul(k, x.xi),   checked::mul(k, x.h1),
                checked::mul(k, x.h2),   checked::mul(k, x.xih1), checked::mul(k, x.xih2),
                checked::mul(k, x.p),    checked::mul(k, x.pt)};
    }
    friend ChowClass operator-(const ChowClass& x) { return -1 * x; }
    friend ChowClass operator-(const ChowClass& x, const ChowClass& y) { return x + (-y); }

    ChowClass part(int grade) const {
        switch (grade) {
        case 0: return {.z = z};
        case 1: return {.xi = xi, .h1 = h1, .h2 = h2};
        case 2: return {.xih1 = xih1, .xih2 = xih2, .p = p};
        case 3: return {.pt = pt};
        default: return {};
        }
    }
    bool is_zero_cycle() const { return z == 0 && xi == 0 && h1 == 0 && h2 == 0 && xih1 == 0 && xih2 == 0 && p == 0; }

    friend std::ostream& operator<<(std::ostream& os, const ChowClass& x) {
        return os << "[" << x.z << "; " << x.xi << ", " << x.h1 << ", " << x.h2 << "; " << x.xih1 << ", "
                  << x.xih2 << ", " << x.p << "; " << x.pt << "]";
    }
};

namespace detail {

inline DivisorClass base_part(const ChowClass& x) { return {x.h1, x.h2}; }
inline DivisorClass xi_base_part(const ChowClass& x) { return {x.xih1, x.xih2}; }

/* deg1 x deg1, with xi^2 = xi.phi*c1 - c2 phi*[pt] and
 * phi*D.phi*D' = (D.D') phi*[pt]. */
inline ChowClass mul_11(const ScrollContext& ctx, const ChowClass& x, const ChowClass& y) {
    const Surface s = ctx.surface();
    const DivisorClass dx = base_part(x);
    const DivisorClass dy = base_part(y);
    const Int xixi = checked::mul(x.xi, y.xi);
    const DivisorClass xi_coeff = xixi * ctx.c1 + x.xi * dy + y.xi * dx;
    const Int p = checked::sub(intersect(s, dx, dy), checked::mul(xixi, ctx.c2));
    return ChowClass::xi_times_pullback(xi_coeff) + Int{p} * ChowClass::pullback_point();
}

/* deg1 x deg2 lands in [pt]: xi.xi.phi*G = c1.G, xi.phi*[pt] = 1,
 * phi*D.xi.phi*G = D.G, phi*D.phi*[pt] = 0. */
inline ChowClass mul_12(const ScrollContext& ctx, const ChowClass& x, const ChowClass& y) {
    const Surface s = ctx.surface();
    const DivisorClass g = xi_base_part(y);
    const Int n = checked::sum({checked::mul(x.xi, intersect(s, ctx.c1, g)), checked::mul(x.xi, y.p),
                                intersect(s, base_part(x), g)});
    return ChowClass::zero_cycle(n);
}

} // namespace detail

/// Graded product in normal form; anything above degree 3 vanishes.
inline ChowClass multiply(const ScrollContext& ctx, const ChowClass& x, const ChowClass& y) {
    const ChowClass x1 = x.part(1), x2 = x.part(2), x3 = x.part(3);
    const ChowClass y1 = y.part(1), y2 = y.part(2), y3 = y.part(3);
    ChowClass r = checked::mul(x.z, y.z) * ChowClass::one();
    r = r + x.z * (y1 + y2 + y3) + y.z * (x1 + x2 + x3);
    r = r + detail::mul_11(ctx, x1, y1);
    r = r + detail::mul_12(ctx, x1, y2) + detail::mul_12(ctx, y1, x2);
    return r;
}

inline ChowClass power(const ScrollContext& ctx, const ChowClass& x, int k) {
    ChowClass r = ChowClass::one();
    for (int i = 0; i < k; ++i) r = multiply(ctx, r, x);
    return r;
}

/// Degree of a zero-cycle.
inline Int degree(const ChowClass& x) {
    if (!x.is_zero_cycle()) throw DomainError("degree: class is not a zero-cycle");
    return x.pt;
}

/// K_X = -2 xi + phi*(K_F + c1(E)).
inline ChowClass canonical_class_X(const ScrollContext& ctx) {
    return -2 * ChowClass::tautological() + ChowClass::pullback(canonical_class(ctx.surface()) + ctx.c1);
}

struct TangentChern {
    ChowClass c1;
    ChowClass c2;
    ChowClass c3;
};

/* c(T_X) = (1 + 2xi - phi*c1(E)) . phi*(1 + c1(T_F) + c2(T_F)), where the
 * first factor is the relative tangent line bundle, c1(T_F) = -K_F and
 * c2(T_F) = 4[pt] is the topological Euler number of F_e. */
inline TangentChern chern_TX(const ScrollContext& ctx) {
    const ChowClass relative = 2 * ChowClass::tautological() - ChowClass::pullback(ctx.c1);
    const ChowClass base1 = ChowClass::pullback(-canonical_class(ctx.surface()));
    const ChowClass base2 = 4 * ChowClass::pullback_point();

    TangentChern c;
    c.c1 = relative + base1;
    c.c2 = multiply(ctx, relative, base1) + base2;
    c.c3 = multiply(ctx, relative, base2);

    const ChowClass K = canonical_class_X(ctx);
    ensure(c.c1 == -K, "c1(T_X) = -K_X fails");
    ensure(degree(c.c3) == 8, "c_3 = 8 fails: got " + std::to_string(degree(c.c3)));
    ensure(degree(multiply(ctx, -K, c.c2)) == 24, "-K c_2 = 24 fails");
    return c;
}

struct IntersectionNumbers {
    Int L3 = 0;
    Int KL2 = 0;
    Int K2L = 0;
    Int K3 = 0;
    Int c2L = 0;
    Int Kc2 = 0;
    Int c3 = 0;

    friend bool operator==(const IntersectionNumbers&, const IntersectionNumbers&) = default;
};

/// The seven numbers by Chow-ring multiplication alone.
inline IntersectionNumbers chow_intersection_numbers(const ScrollContext& ctx) {
    const ChowClass L = ChowClass::tautological();
    const ChowClass K = canonical_class_X(ctx);
    const TangentChern c = chern_TX(ctx);
    const ChowClass L2 = multiply(ctx, L, L);
    const ChowClass K2 = multiply(ctx, K, K);

    IntersectionNumbers r;
    r.L3 = degree(multiply(ctx, L2, L));
    r.KL2 = degree(multiply(ctx, K, L2));
    r.K2L = degree(multiply(ctx, K2, L));
    r.K3 = degree(multiply(ctx, K2, K));
    r.c2L = degree(multiply(ctx, c.c2, L));
    r.Kc2 = degree(multiply(ctx, K, c.c2));
    r.c3 = degree(c.c3);
    return r;
}

/// Closed forms in (e, b, t) for the family, with d = 8e+5b+7t+40.
inline IntersectionNumbers closed_form_intersection_numbers(const FamilyParams& p) {
    using namespace checked;
    const Int e = p.e(), b = p.b(), t = p.t();
    const Int d = sum({mul(8, e), mul(5, b), mul(7, t), 40});
    IntersectionNumbers r;
    r.L3 = d;
    r.KL2 = sum({mul(-2, d), mul(6, e), 28, mul(6, t), mul(6, b)});
    r.K2L = sum({mul(4, d), mul(-20, b), mul(-20, t), mul(-20, e), -96});
    r.c2L = sum({mul(2, e), 24, mul(2, b), mul(2, t)});
    r.K3 = sum({mul(-8, d), mul(48, b), mul(48, t), mul(48, e), 240});
    r.Kc2 = -24;
    r.c3 = 8;
    return r;
}

/// Both routes, cross-asserted.
inline IntersectionNumbers intersection_numbers(const FamilyParams& p) {
    const IntersectionNumbers chow = chow_intersection_numbers(ScrollContext::from(p));
    const IntersectionNumbers closed = closed_form_intersection_numbers(p);
    ensure(chow.L3 == closed.L3, "L^3 = 8e+5b+7t+40 fails at " + p.str());
    ensure(chow.KL2 == closed.KL2, "KL^2 = -2d+6e+28+6t+6b fails at " + p.str());
    ensure(chow.K2L == closed.K2L, "K^2L = 4d-20b-20t-20e-96 fails at " + p.str());
    ensure(chow.c2L == closed.c2L, "c_2L = 2e+24+2b+2t fails at " + p.str());
    ensure(chow.K3 == closed.K3, "K^3 = -8d+48b+48t+48e+240 fails at " + p.str());
    ensure(chow.Kc2 == closed.Kc2, "-Kc_2 = 24 fails at " + p.str());
    ensure(chow.c3 == closed.c3, "c_3 = 8 fails at " + p.str());
    return chow;
}

} // namespace hirz

#endif // HIRZ_CHOW_RING_HPP_
