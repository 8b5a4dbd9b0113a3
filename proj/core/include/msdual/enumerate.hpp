#pragma once

#include "msdual/multisegment.hpp"

#include <vector>

namespace msdual {

// All multisegments with degree vector exactly d.  For the integers ring the
// support of d bounds the segments, so the result is finite.
std::vector<Multisegment> multisegments_with_degree(const DimVector& d);

// All multisegments over a cyclic ring with total degree <= max_total.
std::vector<Multisegment> multisegments_up_to(const VertexRing& ring, int max_total);

// All multisegments over the integers with every cell in [window_lo,
// window_hi] and total degree <= max_total.
std::vector<Multisegment> z_multisegments_in_window(int window_lo, int window_hi,
                                                    int max_total);

// Cyclic only: the subset passing is_aperiodic().
std::vector<Multisegment> aperiodic_multisegments_up_to(const VertexRing& ring, int max_total);

// Degree vectors over a cyclic ring with total exactly t.
std::vector<DimVector> degree_vectors_with_total(const VertexRing& ring, int t);

} // namespace msdual
