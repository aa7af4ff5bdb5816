#ifndef HIRZ_VERIFY_HPP_
#define HIRZ_VERIFY_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hirz/bundle_family.hpp"
#include "hirz/chow_ring.hpp"
#include "hirz/hilbert_component.hpp"
#include "hirz/lattice_oracle.hpp"
#include "hirz/scroll_invariants.hpp"
#include "hirz/surface_lattice.hpp"

namespace hirz {

/// Deliberate corruptions for exercising the verifier itself.
enum class Fault {
    none,
    canonical_sign, ///< K_{F_e} with the sign of its f-coefficient flipped
};

struct VerifyOptions {
    Int e_max = 0;
    Int t_max = 0;
    Int lattice_radius = 12;
    Fault fault = Fault::none;
};

struct VerifyFailure {
    std::string identity;
    std::string detail;
};

struct VerifyResult {
    std::size_t checks = 0;
    std::vector<VerifyFailure> failures;

    bool ok() const { return failures.empty(); }
};

/// All valid (e, b, t) with e <= e_max, t <= t_max, sorted by (e, t, b).
inline std::vector<FamilyParams> parameter_grid(Int e_max, Int t_max, bool paper_regime_only = false) {
    if (e_max < 0 || t_max < 0) throw DomainError("grid bounds must be >= 0");
    std::vector<FamilyParams> grid;
    for (Int e = 0; e <= e_max; ++e) {
        for (Int t = 0; t <= t_max; ++t) {
            const Int upper = 2 * e + 3 + t;
            for (Int b = std::max<Int>(-1, e); b <= upper; ++b) {
                const FamilyParams p = validate_params(e, b, t);
                if (paper_regime_only && !p.paper_regime()) continue;
                grid.push_back(p);
            }
        }
    }
    return grid;
}

namespace detail {

class Verifier {
public:
    explicit Verifier(VerifyResult& out) : out_(out) {}

    void check(const std::string& identity, bool holds, const std::string& where) {
        ++out_.checks;
        if (!holds) out_.failures.push_back({identity, where});
    }

    /// Runs body; an engine error inside it is a failure of `identity`.
    void guarded(const std::string& identity, const std::string& where, const std::function<bool()>& body) {
        bool holds = false;
        std::string detail = where;
        try {
            holds = body();
        } catch (const std::exception& ex) {
            detail += ": " + std::string(ex.what());
        }
        check(identity, holds, detail);
    }

private:
    VerifyResult& out_;
};

inline void verify_surface(Verifier& v, const Surface& s, const VerifyOptions& opt) {
    const Int e = s.e();
    const std::string where = "F_" + std::to_string(e);
    DivisorClass K = canonical_class(s);
    if (opt.fault == Fault::canonical_sign) K.c = -K.c;

    // Adjunction on the two rational generators and K^2 = 8.
    v.check("K_{F_e} ≡ −2C0−(e+2)f",
            intersect(s, K, kSection) + intersect(s, kSection, kSection) == -2 &&
                intersect(s, K, kFiber) + intersect(s, kFiber, kFiber) == -2 && intersect(s, K, K) == 8,
            where);

    const Int R = opt.lattice_radius;
    bool serre = true, rr = true, oracle = true, monotone = true, effective = true, symmetric = true;
    std::string serre_at, rr_at, oracle_at, monotone_at, effective_at, symmetric_at;
    for (Int a = -R; a <= R; ++a) {
        Int prev_h0 = -1;
        for (Int c = -R; c <= R; ++c) {
            const DivisorClass D{a, c};
            const std::string at = where + " D=" + D.str();
            try {
                const CohomologyTable h = cohomology(s, D);
                const CohomologyTable dual = cohomology(s, K - D);
                if (serre && !(h.h0 == dual.h2 && h.h1 == dual.h1 && h.h2 == dual.h0)) serre = false, serre_at = at;
                const Int twice = intersect(s, D, D - K);
                if (rr && !(twice % 2 == 0 && h.chi == 1 + twice / 2 && h.chi == h.h0 - h.h1 + h.h2))
                    rr = false, rr_at = at;
                if (oracle && oracle::h0_lattice_oracle(s, D) != h.h0) oracle = false, oracle_at = at;
                if (a >= 0 && monotone && h.h0 < prev_h0) monotone = false, monotone_at = at;
                prev_h0 = h.h0;
                const bool eff = (a == 0 && c == 0) ? h.h0 == 1 : (h.h0 > 0);
                if (effective && is_effective(s, D) != eff) effective = false, effective_at = at;
                const DivisorClass E{c, a};
                if (symmetric && intersect(s, D, E) != intersect(s, E, D)) symmetric = false, symmetric_at = at;
            } catch (const std::exception& ex) {
                if (serre) serre = false, serre_at = at + ": " + ex.what();
            }
        }
    }
    v.check("Serre duality h^i(D) = h^{2-i}(K−D)", serre, serre_at);
    v.check("Riemann–Roch χ(D) = 1 + D·(D−K)/2 ∈ Z", rr, rr_at);
    v.check("h^0 lattice-point oracle agreement", oracle, oracle_at);
    v.check("h^0(aC0 + cf) nondecreasing in c", monotone, monotone_at);
    v.check("effective ⟺ h^0 > 0", effective, effective_at);
    v.check("intersection pairing symmetric", symmetric, symmetric_at);
    v.check("χ(T_F) = 6", [&] {
        try {
            return tangent_surface_cohomology(s).chi == 6;
        } catch (const std::exception&) {
            return false;
        }
    }(), where);
}

inline void verify_windows(Verifier& v, Int e, Int t) {
    const Surface s(e);
    const std::string where = "e=" + std::to_string(e) + ", t=" + std::to_string(t);
    // Sweep b across both vanishing boundaries on the raw classes A-B and B-A.
    bool w1 = true, w2 = true;
    const Int lo = std::min<Int>(-1, e) - 3;
    const Int hi = 2 * e + 8 + t + e;
    for (Int b = lo; b <= hi; ++b) {
        const DivisorClass A{3, 3 * e + 5 + t};
        const DivisorClass B{1, b + 1};
        const bool v1 = cohomology(s, A - B).h1 == 0;
        const bool v2 = cohomology(s, B - A).h2 == 0;
        if (v1 != (b < 6 + t + e)) w1 = false;
        if (v2 != (b >= 2 * e + 3 + t)) w2 = false;
    }
    v.check("h^1(A−B) = 0 ⟺ b < 6+t+e", w1, where);
    v.check("h^2(B−A) = 0 ⟺ b ≥ 2e+3+t", w2, where);
}

inline void verify_point(Verifier& v, const FamilyParams& p) {
    const std::string where = p.str();
    const Int e = p.e(), b = p.b(), t = p.t();
    v.guarded("c1 = A+B = L+M, c2 = A·B = L·M+2 = 3b+8+t", where, [&] { return chern(p).c2 == 3 * b + 8 + t; });
    v.guarded("r = 3e+5+t", where, [&] { return invariant_r(p, 3) == 3 * e + 5 + t; });
    v.guarded("ℓ(c1,c2,3,r) = 0", where, [&] { return ell_invariant(p, 3, invariant_r(p, 3)) == 0; });
    v.guarded("ℓ(c1,c2,2,r) = b−t−2e−4 < 0", where, [&] {
        const Int ell2 = ell_invariant(p, 2, invariant_r(p, 2));
        return ell2 == b - t - 2 * e - 4 && ell2 < 0;
    });
    v.guarded("uniform of splitting type (3,1)", where,
              [&] { return splitting_type(p) == std::pair<Int, Int>{3, 1} && is_uniform(p).uniform; });
    v.guarded("h^0(E) = 5e+2b+4t+28, h^i(E) = 0 for i ≥ 1", where, [&] {
        const CohomologyTable h = bundle_cohomology(p);
        return h.h0 == 5 * e + 2 * b + 4 * t + 28 && h.h1 == 0 && h.h2 == 0 &&
               h.h0 == sym_chi(build_split(p), 1, DivisorClass{});
    });
    v.guarded("n = 5e+2b+4t+27", where, [&] { return embedding_dimension(p) == 5 * e + 2 * b + 4 * t + 27; });
    v.guarded("d := L³ = c₁²(E) − c₂(E) = 8e+5b+7t+40", where,
              [&] { return scroll_degree(p) == 8 * e + 5 * b + 7 * t + 40; });
    v.guarded("intersection numbers KL², K²L, c₂L, K³, −Kc₂ = 24, c₃ = 8", where, [&] {
        return intersection_numbers(p) == closed_form_intersection_numbers(p);
    });
    v.guarded("P(m) = χ(Sym^m E), m ∈ [0,8]; P(0) = 1; P(1) = n+1", where, [&] {
        const ScrollReport r = scroll_report(p);
        for (Int m = -6; m <= 6; ++m)
            if (!r.hilbert_poly(m).is_integer()) return false;
        return true;
    });
    v.guarded("d−3e−3b−3t−12 = n+1", where, [&] {
        return scroll_degree(p) - 3 * e - 3 * b - 3 * t - 12 == embedding_dimension(p) + 1;
    });
    v.guarded("χ(N) = (d−3e−3b−3t−12)n + 122+21t+21e+21b−3d", where, [&] {
        chi_normal(p);
        return true;
    });
    v.guarded("hypothesis flags match the vanishing windows", where, [&] {
        const HypothesisFlags f = check_hypotheses(p);
        return !f.paper_regime || f.vanishing();
    });
    if (!p.paper_regime()) return;
    v.guarded("dim = χ(N) = n(n+1)+9e+20+6t", where, [&] {
        const HilbertReport r = component_dimension(p);
        const Int n = r.n;
        return r.dim_component && *r.dim_component == n * (n + 1) + 9 * e + 20 + 6 * t && n == 9 * e + 33 + 6 * t;
    });
    v.guarded("χ(T_X) = n−6b+3e−2 = 13; h^0(T_X) = e+12, h^1(T_X) = e−1", where,
              [&] { return tangent_cohomology(p).chi == 13; });
    v.guarded("h^0(N) = (n+1)² − 1 − h^0(T_X) + h^1(T_X)", where, [&] {
        const HilbertReport r = component_dimension(p);
        return r.hN && r.hTX && r.hN->h0 == (r.n + 1) * (r.n + 1) - 1 - r.hTX->h0 + r.hTX->h1;
    });
    v.guarded("codim of scroll locus = e−1 (0 for e = 0)", where,
              [&] { return scroll_locus_codim(p) == (e == 0 ? 0 : e - 1); });
}

} // namespace detail

/// Runs every identity over the grid e <= e_max, t <= t_max.
inline VerifyResult run_verification(const VerifyOptions& opt) {
    VerifyResult result;
    detail::Verifier v(result);
    const std::vector<FamilyParams> grid = parameter_grid(opt.e_max, opt.t_max);
    for (Int e = 0; e <= opt.e_max; ++e) {
        detail::verify_surface(v, Surface(e), opt);
        for (Int t = 0; t <= opt.t_max; ++t) detail::verify_windows(v, e, t);
    }
    for (const FamilyParams& p : grid) detail::verify_point(v, p);
    return result;
}

} // namespace hirz

#endif // HIRZ_VERIFY_HPP_
