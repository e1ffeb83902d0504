#pragma once

#include <utility>
#include <vector>

#include "dtwist/surface/surface.hpp"

namespace dtwist::floer {

struct TorusOverlay {
    surface::CombinatorialSurface surface;
    /// curves[i] is the straight closed geodesic of slope slopes[i].
    std::vector<surface::CellCurve> curves;
};

/**
 * The flat torus R^2/Z^2 cut by straight lines of the given primitive
 * slopes at fixed generic offsets. Vertices are the crossings, edges the
 * arcs between them, faces the convex cells of the complement. At least
 * two slopes must be non-parallel.
 */
TorusOverlay torus_overlay(const std::vector<std::pair<int, int>>& slopes);

}  // namespace dtwist::floer
