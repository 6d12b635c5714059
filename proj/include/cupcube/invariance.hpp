#pragma once

#include "cupcube/rmoves.hpp"
#include "cupcube/trilinear.hpp"

namespace cupcube {

struct InvarianceReport {
    u64 checked = 0;
    u64 mismatches = 0;
    std::string first_mismatch;
    bool transport_ok = true;
    bool ok() const { return transport_ok && mismatches == 0 && checked > 0; }
};

// Applies the move, carries every basis coloring triple (plus seeded random
// triples) through the transport maps, and compares the trilinear sums on
// both sides.  The unbounded region of the rewritten diagram is the image of
// the original one.
InvarianceReport check_move_invariance(const LinkDiagram& d, const Representation& f,
                                       const GModule& m1, const GModule& m2, const GModule& m3,
                                       const TrilinearPsi& psi, const RMoveSite& site,
                                       u64 random_triples = 32, u64 seed = 0,
                                       const WeightConvention& conv = pinned_convention());

}  // namespace cupcube
