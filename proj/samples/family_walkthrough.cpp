// Walks one member of the family through every stage of the engine.
#include <iostream>

#include "hirz/hirz.hpp"

int main() {
    using namespace hirz;
    const FamilyParams p = validate_params(2, 7, 0);
    const SplitBundle E = build_split(p);
    std::cout << "A = " << E.A.str() << ", B = " << E.B.str() << "\n";

    const UniformityEvidence ev = is_uniform(p);
    std::cout << "r = " << ev.r << ", l3 = " << ev.ell3 << ", l2 = " << ev.ell2 << "\n";

    std::cout << "h^i(E) = " << bundle_cohomology(p) << "\n";
    std::cout << "n = " << embedding_dimension(p) << ", d = " << scroll_degree(p) << "\n";
    std::cout << "P(m) = " << hilbert_polynomial(p).str() << "\n";

    const HilbertReport hr = component_dimension(p);
    std::cout << "dim = " << *hr.dim_component << ", codim of scroll locus = " << *hr.codim_scroll_locus << "\n";
}
