#pragma once

// Test oracle: HOMFLY-PT of a braid closure by skein recursion down to
// descending (unlinked) diagrams. Independent of the Hecke-algebra code.
//
//   a·P(L+) - a⁻¹·P(L-) = z·P(L0),   P(unknot) = 1,   s_i positive.

#include "coxlink/homfly.hpp"

namespace coxlink::oracles {

/// Result in variables (a, z). Intended for small diagrams (<= 12 crossings).
polyalg::LaurentPoly skein_homfly(const homfly::BraidWord& b);

}  // namespace coxlink::oracles
