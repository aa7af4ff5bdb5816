#ifndef HIRZ_HIRZ_HPP_
#define HIRZ_HIRZ_HPP_

#include "hirz/bundle_family.hpp"
#include "hirz/chow_ring.hpp"
#include "hirz/hilbert_component.hpp"
#include "hirz/scroll_invariants.hpp"
#include "hirz/surface_lattice.hpp"

#endif // HIRZ_HIRZ_HPP_
