#pragma once

#include <vector>

#include "dtwist/surface/surface.hpp"

namespace dtwist::floer {

using surface::CellCurve;
using surface::CombinatorialSurface;

struct TwistResult {
    CombinatorialSurface surface;
    /// Image of N.
    CellCurve twisted;
    /// A copy of S inside the inserted annulus, isotopic to S and oriented like it.
    CellCurve core;
    /// The extra curves, in the order given, pushed straight across the annulus.
    std::vector<CellCurve> carried;
};

/**
 * k-th power of the Dehn twist along S applied to N; k > 0 twists to the right.
 *
 * X is cut along S and an annulus of |k|·|S| + 2 rows is glued in. N
 * crosses it along a staircase that winds |k| times around; every other
 * curve crosses straight. Curves must meet S transversally at distinct
 * vertices. A curve equal to S (as a loop) is carried to the core.
 * k = 0 returns the input unchanged.
 */
TwistResult combinatorial_dehn_twist(const CombinatorialSurface& x, const CellCurve& n, const CellCurve& s, int k,
                                     const std::vector<CellCurve>& others = {});

struct PushoffResult {
    CombinatorialSurface surface;
    CellCurve curve;
    /// Isotopic to `curve`, crossing it exactly twice.
    CellCurve pushoff;
    std::vector<CellCurve> carried;
};

/// Standard two-crossing pushoff of L, built in a four-row annulus glued along L.
PushoffResult pushoff_model(const CombinatorialSurface& x, const CellCurve& l, const std::vector<CellCurve>& others = {});

}  // namespace dtwist::floer
