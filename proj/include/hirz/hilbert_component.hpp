#ifndef HIRZ_HILBERT_COMPONENT_HPP_
#define HIRZ_HILBERT_COMPONENT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "hirz/bundle_family.hpp"
#include "hirz/chow_ring.hpp"
#include "hirz/scroll_invariants.hpp"

namespace hirz {

/* The deformation side of X in P^n: N = N_{X/P^n}, T_X, and the component of
 * the Hilbert scheme through [X].
 *
 * T_X sits in 0 -> 2L - phi*c1(E) -> T_X -> phi*T_F -> 0, and
 * h^i(2L - phi*c1(E)) = h^i(F_e, Sym^2 E (-c1)), whose graded pieces are
 * A-B, O and B-A. The vanishing of their higher cohomology is what the
 * flags below record; every h^i(T_X) conclusion is gated on them. */

struct HypothesisFlags {
    bool paper_regime = false; ///< e <= 2 and b = 2e+3+t
    bool v1 = false;           ///< h^1(A-B) = 0
    bool v2 = false;           ///< h^2(B-A) = 0
    bool v3 = false;           ///< h^1(B-A) = 0

    bool vanishing() const { return v1 && v2 && v3; }
    bool all() const { return paper_regime && vanishing(); }

    std::vector<std::string> failing() const {
        std::vector<std::string> out;
        if (!paper_regime) out.emplace_back("paper_regime (e <= 2 and b = 2e+3+t)");
        if (!v1) out.emplace_back("v1 (h1(A-B) = 0)");
        if (!v2) out.emplace_back("v2 (h2(B-A) = 0)");
        if (!v3) out.emplace_back("v3 (h1(B-A) = 0)");
        return out;
    }
};

/// Flags from the line-bundle engine, with the inequality windows cross-asserted.
inline HypothesisFlags check_hypotheses(const FamilyParams& p) {
    const Surface s = p.surface();
    const SplitBundle split = build_split(p);
    const CohomologyTable a_minus_b = cohomology(s, split.A - split.B);
    const CohomologyTable b_minus_a = cohomology(s, split.B - split.A);
    const Int e = p.e(), b = p.b(), t = p.t();

    HypothesisFlags f;
    f.paper_regime = p.paper_regime();
    f.v1 = a_minus_b.h1 == 0;
    f.v2 = b_minus_a.h2 == 0;
    f.v3 = b_minus_a.h1 == 0;

    const Int two_e_3_t = checked::sum({checked::mul(2, e), 3, t});
    ensure(f.v1 == (b < checked::sum({6, t, e})), "h1(A-B) = 0 iff b < 6+t+e fails at " + p.str());
    ensure(f.v2 == (b >= two_e_3_t), "h2(B-A) = 0 iff b >= 2e+3+t fails at " + p.str());
    ensure(f.v3 == (b <= two_e_3_t), "h1(B-A) = 0 iff b <= 2e+3+t fails at " + p.str());
    ensure(!f.paper_regime || f.vanishing(), "paper regime without the vanishing flags at " + p.str());
    return f;
}

/// h^i(F_e, T_F): (e+5, e-1, 0) for e > 0 and (6, 0, 0) on the quadric.
inline CohomologyTable tangent_surface_cohomology(const Surface& s) {
    const Int e = s.e();
    const CohomologyTable table = e == 0 ? CohomologyTable{6, 0, 0, 6}
                                         : CohomologyTable{checked::add(e, 5), checked::sub(e, 1), 0, 6};
    // chi(T_F) = 2 chi(O) + c1(c1 - K)/2 - c2 with c1 = -K and c2 = 4.
    const DivisorClass K = canonical_class(s);
    const Int chi_rr = checked::sum({2, intersect(s, K, K), -4});
    ensure(table.h0 - table.h1 + table.h2 == chi_rr && chi_rr == table.chi,
           "chi(T_F) = 6 fails on F_" + std::to_string(e));
    return table;
}

/// n1, n2 as classes and n3 as a degree, from c(N) = (1+L)^{n+1} / c(T_X).
struct NormalBundleChern {
    ChowClass n1;
    ChowClass n2;
    Int n3 = 0;
};

inline NormalBundleChern normal_bundle_chern(const ScrollContext& ctx, Int n) {
    using namespace checked;
    const ChowClass L = ChowClass::tautological();
    const ChowClass K = canonical_class_X(ctx);
    const TangentChern c = chern_TX(ctx);
    const Int n1p = add(n, 1);
    const Int pair = div_exact(mul(n, n1p), 2, "n(n+1)/2");
    const Int triple = div_exact(mul({sub(n, 1), n, n1p}), 6, "(n-1)n(n+1)/6");

    const ChowClass L2 = multiply(ctx, L, L);
    const ChowClass K2 = multiply(ctx, K, K);
    const auto deg3 = [&](const ChowClass& x, const ChowClass& y) { return degree(multiply(ctx, x, y)); };

    NormalBundleChern r;
    r.n1 = K + n1p * L;
    r.n2 = pair * L2 + n1p * multiply(ctx, L, K) + K2 - c.c2;
    r.n3 = sum({mul(triple, deg3(L2, L)), mul(pair, deg3(K, L2)), mul(n1p, deg3(K2, L)),
                neg(mul(n1p, deg3(c.c2, L))), mul(-2, deg3(c.c2, K)), deg3(K2, K), neg(degree(c.c3))});
    return r;
}

/* chi(N) by Hirzebruch-Riemann-Roch for the rank n-3 bundle N:
 *   (n1^3 - 3 n1 n2 + 3 n3)/6 + c1(n1^2 - 2 n2)/4 + (c1^2 + c2) n1/12 + (n-3) chi(O_X).
 * The three fractions are summed over 12 and must clear. */
inline Int chi_normal_chow(const ScrollContext& ctx, Int n) {
    using namespace checked;
    const NormalBundleChern nc = normal_bundle_chern(ctx, n);
    const TangentChern c = chern_TX(ctx);
    const auto deg = [&](const ChowClass& x, const ChowClass& y) { return degree(multiply(ctx, x, y)); };

    const ChowClass n1sq = multiply(ctx, nc.n1, nc.n1);
    const Int ch3 = sum({deg(n1sq, nc.n1), mul(-3, deg(nc.n1, nc.n2)), mul(3, nc.n3)});
    const Int ch2c1 = deg(c.c1, n1sq - 2 * nc.n2);
    const Int td2 = deg(multiply(ctx, c.c1, c.c1) + c.c2, nc.n1);
    const Int twelve_x = sum({mul(2, ch3), mul(3, ch2c1), td2});
    return add(div_exact(twelve_x, 12, "chi(N) numerator"), sub(n, 3));
}

/// chi(N); the Chow-ring evaluation must equal (d-3e-3b-3t-12)n + 122+21t+21e+21b-3d.
inline Int chi_normal(const FamilyParams& p) {
    using namespace checked;
    const Int n = embedding_dimension(p);
    const Int d = scroll_degree(p);
    const Int e = p.e(), b = p.b(), t = p.t();
    const Int chi = chi_normal_chow(ScrollContext::from(p), n);

    const Int closed = sum({mul(sum({d, mul(-3, e), mul(-3, b), mul(-3, t), -12}), n), 122, mul(21, t),
                            mul(21, e), mul(21, b), mul(-3, d)});
    ensure(chi == closed, "chi(N) = (d-3e-3b-3t-12)n + 122+21t+21e+21b-3d fails at " + p.str() + ": " +
                              std::to_string(chi) + " vs " + std::to_string(closed));
    ensure(sum({d, mul(-3, e), mul(-3, b), mul(-3, t), -12}) == add(n, 1),
           "d-3e-3b-3t-12 = n+1 fails at " + p.str());
    if (p.paper_regime()) {
        const Int regime = sum({mul(n, add(n, 1)), mul(9, e), 20, mul(6, t)});
        ensure(chi == regime, "chi(N) = n(n+1)+9e+20+6t fails at " + p.str());
    }
    return chi;
}

namespace detail {

inline void require(const HypothesisFlags& f, bool need_regime, const std::string& what) {
    std::vector<std::string> failing;
    for (auto& name : f.failing()) {
        if (!need_regime && name.rfind("paper_regime", 0) == 0) continue;
        failing.push_back(name);
    }
    if (failing.empty()) return;
    std::string msg = what + ": hypotheses not satisfied";
    throw HypothesisError(failing, msg);
}

} // namespace detail

struct TangentCohomology {
    ThreefoldCohomology h;
    Int chi = 0;
};

inline TangentCohomology tangent_cohomology(const FamilyParams& p) {
    using namespace checked;
    const HypothesisFlags flags = check_hypotheses(p);
    detail::require(flags, false, "tangent_cohomology at " + p.str());

    const CohomologyTable rel = sym2_twisted_cohomology(p);
    ensure(rel.h1 == 0 && rel.h2 == 0, "h^j(Sym^2 E (-c1)) = 0 for j >= 1 fails at " + p.str());
    const CohomologyTable tf = tangent_surface_cohomology(p.surface());

    TangentCohomology r;
    r.h = {add(rel.h0, tf.h0), tf.h1, tf.h2, 0};
    r.chi = r.h.chi();

    const Int e = p.e(), b = p.b();
    const Int n = embedding_dimension(p);
    ensure(r.chi == sum({n, mul(-6, b), mul(3, e), -2}), "chi(T_X) = n-6b+3e-2 fails at " + p.str());
    // chi(T_X) is also chi(Sym^2 E(-c1)) + chi(T_F) with no vanishing used.
    ensure(r.chi == add(sym_chi(build_split(p), 2, -chern(p).c1), 6),
           "chi(T_X) = chi(Sym^2 E(-c1)) + chi(T_F) fails at " + p.str());
    if (flags.paper_regime) {
        ensure(r.chi == 13, "chi(T_X) = 13 fails at " + p.str());
        const ThreefoldCohomology expect =
            e == 0 ? ThreefoldCohomology{13, 0, 0, 0} : ThreefoldCohomology{add(e, 12), sub(e, 1), 0, 0};
        ensure(r.h == expect, "h^0(T_X) = e+12, h^1(T_X) = e-1 fails at " + p.str());
    }
    return r;
}

/// Everything known about [X] in the Hilbert scheme. Optional fields are
/// absent when the hypotheses behind them do not hold.
struct HilbertReport {
    FamilyParams params;
    HypothesisFlags flags;
    Int n = 0;
    Int d = 0;
    Int chiN = 0; ///< always computed; outside the vanishing regime it is an Euler characteristic only
    std::optional<ThreefoldCohomology> hN;
    std::optional<ThreefoldCohomology> hTX;
    std::optional<Int> chiTX;
    std::optional<Int> dim_component;
    std::optional<Int> codim_scroll_locus;
};

/* Builds the report without throwing on failed hypotheses. When the
 * vanishing flags hold, H^i(N) = H^{i+1}(T_X) = 0 for i >= 1, and the
 * four-term sequence
 *   0 -> H^0(T_X) -> H^0(T_{P^n}|X) -> H^0(N) -> H^1(T_X) -> 0
 * with h^0(T_{P^n}|X) = (n+1)^2 - 1 is checked against chi(N). */
inline HilbertReport hilbert_report(const FamilyParams& p) {
    using namespace checked;
    HilbertReport r{p, check_hypotheses(p), embedding_dimension(p), scroll_degree(p), chi_normal(p),
                    std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    if (!r.flags.vanishing()) return r;

    const TangentCohomology tx = tangent_cohomology(p);
    r.hTX = tx.h;
    r.chiTX = tx.chi;
    ensure(tx.h.h2 == 0 && tx.h.h3 == 0, "h^j(T_X) = 0 for j >= 2 fails at " + p.str());
    r.hN = ThreefoldCohomology{r.chiN, 0, 0, 0};

    const Int euler = sum({mul(add(r.n, 1), add(r.n, 1)), -1, neg(tx.h.h0), tx.h.h1});
    ensure(euler == r.chiN, "h0(N) = (n+1)^2 - 1 - h0(T_X) + h1(T_X) fails at " + p.str() + ": " +
                                std::to_string(euler) + " vs " + std::to_string(r.chiN));

    if (r.flags.paper_regime) {
        r.dim_component = r.chiN;
        r.codim_scroll_locus = tx.h.h1;
        const Int e = p.e();
        ensure(*r.codim_scroll_locus == (e == 0 ? 0 : e - 1), "codim of scroll locus = e-1 (0 if e=0) fails at " + p.str());
    }
    return r;
}

inline HilbertReport component_dimension(const FamilyParams& p) {
    detail::require(check_hypotheses(p), true, "component_dimension at " + p.str());
    return hilbert_report(p);
}

/// codim of the scroll locus in the component = dim Coker(H^0(T_{P^n}|X) -> H^0(N)) = h^1(T_X).
inline Int scroll_locus_codim(const FamilyParams& p) {
    detail::require(check_hypotheses(p), true, "scroll_locus_codim at " + p.str());
    return *hilbert_report(p).codim_scroll_locus;
}

} // namespace hirz

#endif // HIRZ_HILBERT_COMPONENT_HPP_
