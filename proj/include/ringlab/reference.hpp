#pragma once

#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

// Serial reference enumeration, kept as an independent oracle for the
// parallel canonical-form pipeline: a plain odometer walk over the legal
// structure-constant tuples, full n^3 table validation of every survivor,
// and deduplication by pairwise isomorphism tests against the
// representatives found so far (first representative kept, no canonical
// forms). Output order follows the odometer, not canonical order.
std::vector<FiniteRing> reference_enumerate(int n);

}  // namespace ringlab
