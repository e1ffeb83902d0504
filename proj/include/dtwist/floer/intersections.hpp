#pragma once

#include <vector>

#include "dtwist/surface/surface.hpp"

namespace dtwist::floer {

using surface::CellCurve;
using surface::CombinatorialSurface;
using surface::Dart;

struct IntersectionPoint {
    int vertex = -1;
    /// +1 when (tangent of L0, tangent of L1) is a positive basis.
    int sign = 0;
    /// Mod-2 degree, fixed by (-1)^deg = -sign.
    int degree = 0;
    /// Index into L0.darts / L1.darts of the dart leaving the vertex.
    std::size_t index0 = 0;
    std::size_t index1 = 0;
};

/**
 * Crossings of L0 and L1, ordered along L0.
 *
 * Throws TransversalityError when the curves share an edge or meet at a
 * vertex without crossing; subdividing or perturbing one curve fixes both.
 */
std::vector<IntersectionPoint> find_intersections(const CombinatorialSurface& x, const CellCurve& l0,
                                                  const CellCurve& l1);

/// Sum of the signs.
int algebraic_intersection(const CombinatorialSurface& x, const CellCurve& l0, const CellCurve& l1);

}  // namespace dtwist::floer
