#pragma once

#include <cstddef>

#include "dtwist/gf2/chain_complex.hpp"
#include "dtwist/surface/surface.hpp"

namespace dtwist::surface {

/// C^0 = vertices, C^1 = edges, C^2 = faces, degrees 0..2.
gf2::ChainComplex cochain_complex(const CombinatorialSurface& x);

struct CellularCohomology {
    gf2::ChainComplex cochains;
    /// H^0 basis: indicator of component i, in face_components() order.
    gf2::Homology homology;
    std::size_t components = 0;
};

CellularCohomology cellular_cohomology(const CombinatorialSurface& x);

}  // namespace dtwist::surface
