#ifndef HIRZ_SURFACE_LATTICE_HPP_
#define HIRZ_SURFACE_LATTICE_HPP_

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "hirz/checked.hpp"
#include "hirz/error.hpp"

namespace hirz {

/// The Hirzebruch surface F_e = P(O + O(-e)) over P^1.
class Surface {
public:
    explicit Surface(Int e) : e_(e) {
        if (e < 0) throw DomainError("Hirzebruch invariant e must be >= 0, got " + std::to_string(e));
    }
    Int e() const noexcept { return e_; }

    friend bool operator==(const Surface&, const Surface&) = default;

private:
    Int e_;
};

/// Numerical class a*C0 + c*f. Carries no surface; e is passed to each operation.
struct DivisorClass {
    Int a = 0;
    Int c = 0;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
        return {checked::add(x.a, y.a), checked::add(x.c, y.c)};
    }
    friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
        return {checked::sub(x.a, y.a), checked::sub(x.c, y.c)};
    }
    friend DivisorClass operator-(const DivisorClass& x) {
        return {checked::neg(x.a), checked::neg(x.c)};
    }
    friend DivisorClass operator*(Int k, const DivisorClass& x) {
        return {checked::mul(k, x.a), checked::mul(k, x.c)};
    }

    std::string str() const {
        return std::to_string(a) + "C0 + " + std::to_string(c) + "f";
    }
    friend std::ostream& operator<<(std::ostream& os, const DivisorClass& d) {
        return os << "(" << d.a << ", " << d.c << ")";
    }
};

inline constexpr DivisorClass kSection{1, 0};
inline constexpr DivisorClass kFiber{0, 1};

struct CohomologyTable {
    Int h0 = 0;
    Int h1 = 0;
    Int h2 = 0;
    Int chi = 0;

    friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;

    friend CohomologyTable operator+(const CohomologyTable& x, const CohomologyTable& y) {
        return {checked::add(x.h0, y.h0), checked::add(x.h1, y.h1),
                checked::add(x.h2, y.h2), checked::add(x.chi, y.chi)};
    }
    friend std::ostream& operator<<(std::ostream& os, const CohomologyTable& t) {
        return os << "(h0=" << t.h0 << ", h1=" << t.h1 << ", h2=" << t.h2 << ", chi=" << t.chi << ")";
    }
};

/// Intersection pairing: C0^2 = -e, C0.f = 1, f^2 = 0.
inline Int intersect(const Surface& s, const DivisorClass& x, const DivisorClass& y) {
    return checked::sum({checked::mul(x.a, y.c), checked::mul(y.a, x.c),
                         checked::neg(checked::mul({s.e(), x.a, y.a}))});
}

inline DivisorClass canonical_class(const Surface& s) {
    return {-2, checked::neg(checked::add(s.e(), 2))};
}

/// The effective cone of F_e is spanned by C0 and f.
inline bool is_effective(const Surface&, const DivisorClass& d) {
    return d.a >= 0 && d.c >= 0;
}

/// Ample (equivalently very ample) line bundles on F_e.
inline bool is_ample(const Surface& s, const DivisorClass& d) {
    if (s.e() == 0) return d.a > 0 && d.c > 0;
    return d.a > 0 && d.c > checked::mul(d.a, s.e());
}

/// Degrees of the summands O(c - j*e), j = 0..a, of the direct image on P^1.
inline std::vector<Int> pushforward_degrees(const Surface& s, const DivisorClass& d) {
    if (d.a < 0) throw DomainError("pushforward_degrees requires a >= 0, got a = " + std::to_string(d.a));
    std::vector<Int> degrees;
    degrees.reserve(static_cast<std::size_t>(d.a) + 1);
    for (Int j = 0; j <= d.a; ++j) degrees.push_back(checked::sub(d.c, checked::mul(j, s.e())));
    return degrees;
}

/// chi(D) = 1 + D.(D - K)/2. The pairing D.(D - K) is always even.
inline Int euler_characteristic(const Surface& s, const DivisorClass& d) {
    Int twice = intersect(s, d, d - canonical_class(s));
    ensure(twice % 2 == 0, "Riemann-Roch: D.(D-K) is odd for D = " + d.str());
    return checked::add(1, twice / 2);
}

namespace detail {

/* sum_{j=0}^{a} max(0, c - j*e + 1): h^0 of the direct image. */
inline Int clamped_h0_sum(Int a, Int c, Int e) {
    if (a < 0 || c < 0) return 0;
    if (e == 0) return checked::mul(checked::add(a, 1), checked::add(c, 1));
    Int last = std::min(a, c / e);
    Int tri = (last % 2 == 0) ? checked::mul(last / 2, checked::add(last, 1))
                              : checked::mul(last, checked::add(last, 1) / 2);
    return checked::sub(checked::mul(checked::add(last, 1), checked::add(c, 1)),
                        checked::mul(e, tri));
}

/* sum_{j=0}^{a} max(0, j*e - c - 1): h^1 of the direct image. */
inline Int clamped_h1_sum(Int a, Int c, Int e) {
    if (a < 0) return 0;
    if (e == 0) return c <= -2 ? checked::mul(checked::add(a, 1), checked::neg(checked::add(c, 1))) : 0;
    Int first = std::max<Int>(0, checked::ceil_div(checked::add(c, 2), e));
    if (first > a) return 0;
    Int count = checked::add(checked::sub(a, first), 1);
    Int ends = checked::add(first, a);
    Int index_sum = (ends % 2 == 0) ? checked::mul(ends / 2, count) : checked::mul(ends, count / 2);
    return checked::sub(checked::mul(e, index_sum), checked::mul(count, checked::add(c, 1)));
}

} // namespace detail

/* Line-bundle cohomology on F_e.
 *
 * h0 and h2 come from the direct image on P^1 (h2 through Serre duality),
 * h1 from Riemann-Roch. h1 is then recomputed directly from R^0 pi_* of D
 * (a >= 0) or of K - D (a <= -2); disagreement is a ConsistencyError.
 * For a = -1 every direct image vanishes and the table is zero. */
inline CohomologyTable cohomology(const Surface& s, const DivisorClass& d) {
    if (d.a == -1) return {};
    const Int e = s.e();
    const DivisorClass dual = canonical_class(s) - d;
    const Int chi = euler_characteristic(s, d);
    const Int h0 = detail::clamped_h0_sum(d.a, d.c, e);
    const Int h2 = detail::clamped_h0_sum(dual.a, dual.c, e);
    const Int h1 = checked::sub(checked::add(h0, h2), chi);

    const Int h1_direct = d.a >= 0 ? detail::clamped_h1_sum(d.a, d.c, e)
                                   : detail::clamped_h1_sum(dual.a, dual.c, e);
    ensure(h1 == h1_direct, "h1 routes disagree for D = " + d.str() + " on F_" + std::to_string(e) +
                                ": chi-subtraction " + std::to_string(h1) + ", direct image " +
                                std::to_string(h1_direct));
    return {h0, h1, h2, chi};
}

} // namespace hirz

#endif // HIRZ_SURFACE_LATTICE_HPP_
