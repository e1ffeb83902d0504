#pragma once

#include <vector>

#include "dtwist/surface/surface.hpp"

namespace dtwist::floer {

using surface::CellCurve;
using surface::CombinatorialSurface;

struct TightenOptions {
    /// Keep two crossings when removing the last bigon would leave the
    /// curves disjoint and isotopic.
    bool self_floer = true;
    int max_steps = 10000;
};

struct TightenResult {
    CombinatorialSurface surface;
    CellCurve l0;
    CellCurve l1;
    std::vector<CellCurve> carried;
    int bigons_removed = 0;
    /// True when the self-Floer rule stopped the last removal.
    bool kept_pushoff = false;
};

/**
 * Remove bigons one at a time until none is left. Each step reroutes the L1
 * arc of a bigon around the far side of its L0 arc, through new vertices at
 * the centres of the faces along that side; the surface is refined only
 * there. L0 is never moved. Extra curves are carried through refinements.
 */
TightenResult tighten_pair(const CombinatorialSurface& x, const CellCurve& l0, const CellCurve& l1,
                           TightenOptions opts = {}, const std::vector<CellCurve>& others = {});

}  // namespace dtwist::floer
