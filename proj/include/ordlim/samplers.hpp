#pragma once

#include "ordlim/level.hpp"
#include "ordlim/poset_map.hpp"
#include "ordlim/rng.hpp"

namespace ordlim {

// Random poset on n labeled elements: edges drawn on index order with the
// given percentage, then closed transitively (acyclic by construction).
PosetPtr random_poset(Rng& rng, int n, int edge_percent);

// Random quotient onto `a` with the given domain size (>= |a|): every
// element of `a` gets a nonempty fiber, fibers carry random internal edges,
// every strict pair of `a` gets at least one witness pair across its fibers
// plus random extras, and the whole thing is closed transitively. The fiber
// projection is a quotient by construction.
PosetMap random_quotient_onto(Rng& rng, PosetPtr a, int domain_size);

// Random chain of quotient-bonded levels H_1 <- H_2 <- ... <- H_count with
// |H_k| <= max_size.
TargetSystem random_target_system(Rng& rng, int count, int max_size);

}  // namespace ordlim
