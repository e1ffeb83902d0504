#pragma once

#include <vector>

#include "dtwist/floer/intersections.hpp"
#include "dtwist/floer/regions.hpp"
#include "dtwist/gf2/chain_complex.hpp"

namespace dtwist::floer {

/// Throws ContractibleCurveError when c bounds a disk on x.
void require_essential(const CombinatorialSurface& x, const CellCurve& c);
bool is_contractible(const CombinatorialSurface& x, const CellCurve& c);

struct FloerComplex {
    /// Two-periodic: degree k holds the points with deg = k.
    gf2::ChainComplex complex;
    /// generators[k][i] labels basis vector i of degree k.
    std::vector<IntersectionPoint> generators[2];
    std::size_t bigon_count = 0;
};

/**
 * CF(L0, L1) over GF(2). Each bigon whose L0 arc runs from x to y (disk on
 * the left) adds 1 to the (y, x) entry of the differential.
 */
FloerComplex floer_complex(const CombinatorialSurface& x, const CellCurve& l0, const CellCurve& l1);

struct HfOptions {
    /// Isotopic pairs (equal loops, or disjoint and cobounding an annulus)
    /// are evaluated on the standard two-crossing pushoff of L0.
    bool self_floer = true;
};

/// The complex hf() takes homology of: CF of the tightened pair, or of the pushoff model.
FloerComplex hf_complex(const CombinatorialSurface& x, const CellCurve& l0, const CellCurve& l1, HfOptions opts = {});
gf2::GradedDims hf(const CombinatorialSurface& x, const CellCurve& l0, const CellCurve& l1, HfOptions opts = {});

}  // namespace dtwist::floer
