#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dtwist/surface/involution.hpp"
#include "dtwist/surface/surface.hpp"

namespace dtwist::surface {

/// One vertex, one face: a1 b1 a1' b1' a2 b2 a2' b2' ...
CombinatorialSurface polygon_surface(int genus);

/// Name of the grid edge from (i,j) going right ('h') or up ('v').
std::string grid_edge(char kind, int i, int j);

/**
 * nx by ny unit squares; square (i,j) has lower-left corner (i,j). Listed
 * holes are left out. With `periodic` both directions wrap and the result
 * is a torus minus the holes; otherwise a disk minus the holes.
 */
CombinatorialSurface grid_surface(int nx, int ny, const std::vector<std::pair<int, int>>& holes, bool periodic);

struct DoubledSurface {
    CombinatorialSurface surface;
    /// Swaps the sheets and fixes the glued boundary pointwise.
    CellInvolution reflection;
};

/// Two copies of y, the second with reversed orientation, glued along the
/// boundary. Interior edge e becomes t.e and b.e; boundary edges keep their names.
DoubledSurface double_surface(const CombinatorialSurface& y);

}  // namespace dtwist::surface
