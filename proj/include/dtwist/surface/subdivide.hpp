#pragma once

#include <array>
#include <vector>

#include "dtwist/surface/involution.hpp"
#include "dtwist/surface/surface.hpp"

namespace dtwist::surface {

/**
 * One round of quad refinement: a vertex at every edge midpoint and face
 * centre, each k-gon replaced by k quadrilaterals. Old darts become two
 * half darts; like the old ones, names are the old edge name plus ".0"/".1".
 */
struct Subdivision {
    CombinatorialSurface surface;
    /// halves[d] = the two new darts traversing old dart d, in order.
    std::vector<std::array<Dart, 2>> halves;
    /// spoke[f][i]: dart from the centre of old face f to the midpoint of its i-th edge.
    std::vector<std::vector<Dart>> spoke;
    /// New vertex at the centre of old face f.
    std::vector<int> centre;
    /// New vertex at the midpoint of old edge e.
    std::vector<int> midpoint;

    CellCurve map_curve(const CellCurve& c) const;
    /// Transport a cell map of the old surface: halves go to halves, spokes to spokes.
    CellInvolution map_involution(const CombinatorialSurface& old, const CellInvolution& c) const;
};

Subdivision subdivide_once(const CombinatorialSurface& x);
/// n rounds; n = 0 returns x.
CombinatorialSurface subdivide(const CombinatorialSurface& x, int n);

}  // namespace dtwist::surface
