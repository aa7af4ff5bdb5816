#ifndef HIRZ_LATTICE_ORACLE_HPP_
#define HIRZ_LATTICE_ORACLE_HPP_

#include "hirz/surface_lattice.hpp"

namespace hirz::oracle {

/* Brute-force h^0 on F_e: counts the monomials of the Cox ring in the
 * degree of a*C0 + c*f, i.e. the lattice points (j, m) with 0 <= j <= a and
 * 0 <= m <= c - j*e. Shares no code with cohomology(); used only to check it. */
inline Int h0_lattice_oracle(const Surface& s, const DivisorClass& d) {
    Int count = 0;
    for (Int j = 0; j <= d.a; ++j) {
        for (Int m = 0; m <= d.c - j * s.e(); ++m) ++count;
    }
    return count;
}

} // namespace hirz::oracle

#endif // HIRZ_LATTICE_ORACLE_HPP_
