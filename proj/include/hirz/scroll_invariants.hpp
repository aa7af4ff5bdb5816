#ifndef HIRZ_SCROLL_INVARIANTS_HPP_
#define HIRZ_SCROLL_INVARIANTS_HPP_

#include <array>
#include <string>

#include "hirz/bundle_family.hpp"
#include "hirz/chow_ring.hpp"
#include "hirz/rational.hpp"

namespace hirz {

/// Cubic with reduced rational coefficients, ascending degree.
class RationalCubic {
public:
    RationalCubic() = default;
    explicit RationalCubic(std::array<Rational, 4> coeffs) : coeffs_(coeffs) {}

    const std::array<Rational, 4>& coefficients() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

    Rational operator()(Int m) const {
        Rational acc = coeffs_[3];
        for (int i = 2; i >= 0; --i) acc = acc * Rational(m) + coeffs_[static_cast<std::size_t>(i)];
        return acc;
    }

    friend bool operator==(const RationalCubic&, const RationalCubic&) = default;

    std::string str() const {
        return "(" + coeffs_[3].str() + ")m^3 + (" + coeffs_[2].str() + ")m^2 + (" + coeffs_[1].str() +
               ")m + " + coeffs_[0].str();
    }

private:
    std::array<Rational, 4> coeffs_{};
};

/// h^0..h^3 on the threefold X.
struct ThreefoldCohomology {
    Int h0 = 0;
    Int h1 = 0;
    Int h2 = 0;
    Int h3 = 0;

    Int chi() const { return checked::sum({h0, checked::neg(h1), h2, checked::neg(h3)}); }
    friend bool operator==(const ThreefoldCohomology&, const ThreefoldCohomology&) = default;
};

/// n with X in P^n: n + 1 = h^0(X, L) = h^0(F_e, E).
inline Int embedding_dimension(const FamilyParams& p) {
    const Int n = checked::sub(bundle_cohomology(p).h0, 1);
    ensure(n == checked::sum({checked::mul(5, p.e()), checked::mul(2, p.b()), checked::mul(4, p.t()), 27}),
           "n = 5e+2b+4t+27 fails at " + p.str());
    return n;
}

/// d = L^3 = c1^2 - c2, checked against xi^3 in the Chow ring.
inline Int scroll_degree(const FamilyParams& p) {
    const ChernData ch = chern(p);
    const Int d = checked::sub(intersect(p.surface(), ch.c1, ch.c1), ch.c2);
    const ScrollContext ctx = ScrollContext::from(p);
    const Int xi3 = degree(power(ctx, ChowClass::tautological(), 3));
    ensure(d == xi3, "d = c1^2 - c2 disagrees with xi^3 at " + p.str());
    ensure(d == checked::sum({checked::mul(8, p.e()), checked::mul(5, p.b()), checked::mul(7, p.t()), 40}),
           "d = 8e+5b+7t+40 fails at " + p.str());
    return d;
}

/* P(m) = chi(X, mL) = m^3 L^3/6 - m^2 L^2 K/4 + m L(K^2 + c2)/12 + chi(O_X),
 * chi(O_X) = 1. Cross-checked against chi(F_e, Sym^m E) for m in [0, 8]. */
inline RationalCubic hilbert_polynomial(const FamilyParams& p) {
    const IntersectionNumbers in = intersection_numbers(p);
    const RationalCubic poly({Rational(1), Rational(checked::add(in.K2L, in.c2L), 12),
                              Rational(checked::neg(in.KL2), 4), Rational(in.L3, 6)});

    const SplitBundle split = build_split(p);
    for (Int m = 0; m <= 8; ++m) {
        const Rational lhs = poly(m);
        const Int rhs = sym_chi(split, m, DivisorClass{});
        ensure(lhs == Rational(rhs), "P(m) = chi(Sym^m E) fails at m = " + std::to_string(m) + " for " +
                                         p.str() + ": " + lhs.str() + " vs " + std::to_string(rhs));
    }
    return poly;
}

/// h^i(X, L) = h^i(F_e, E) by Leray.
inline ThreefoldCohomology vanishing_report(const FamilyParams& p) {
    const CohomologyTable hE = bundle_cohomology(p);
    return {hE.h0, hE.h1, hE.h2, 0};
}

struct ScrollReport {
    FamilyParams params;
    Int n = 0;
    Int d = 0;
    ChernData chern;
    RationalCubic hilbert_poly;
    ThreefoldCohomology h_of_L;
};

inline ScrollReport scroll_report(const FamilyParams& p) {
    ScrollReport r{p, embedding_dimension(p), scroll_degree(p), chern(p), hilbert_polynomial(p),
                   vanishing_report(p)};
    ensure(r.h_of_L == ThreefoldCohomology{checked::add(r.n, 1), 0, 0, 0},
           "h^i(X, L) = 0 for i >= 1 fails at " + p.str());
    ensure(r.hilbert_poly(0) == Rational(1), "P(0) = 1 fails at " + p.str());
    ensure(r.hilbert_poly(1) == Rational(checked::add(r.n, 1)), "P(1) = n+1 fails at " + p.str());
    return r;
}

} // namespace hirz

#endif // HIRZ_SCROLL_INVARIANTS_HPP_
