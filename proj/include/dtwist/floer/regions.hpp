#pragma once

#include <vector>

#include "dtwist/floer/intersections.hpp"

namespace dtwist::floer {

/// Where the boundary walk of a region switches from one curve to the other.
struct Corner {
    int vertex = -1;
    /// Index in the boundary cycle of the first dart after the corner.
    std::size_t at = 0;
};

/// One boundary circle of a region, walked with the region on the left.
struct RegionBoundary {
    std::vector<Dart> darts;
    /// 0 or 1: which curve each dart lies on.
    std::vector<int> curve;
    std::vector<Corner> corners;
};

/// A connected component of the complement of L0 and L1.
struct Region {
    std::vector<int> faces;
    /// Euler characteristic of the open region.
    long euler = 0;
    std::vector<RegionBoundary> boundary;

    bool is_disk() const { return euler == 1; }
    std::size_t corner_count() const;
};

std::vector<Region> complementary_regions(const CombinatorialSurface& x, const CellCurve& l0, const CellCurve& l1);

/// A disk region with two corners and one boundary arc on each curve.
struct Bigon {
    std::size_t region = 0;
    /// Corners in the order the L0 arc visits them, walking with the disk on the left.
    int from = -1;
    int to = -1;
    std::vector<Dart> arc0;
    std::vector<Dart> arc1;
};

std::vector<Bigon> find_bigons(const std::vector<Region>& regions);
std::vector<Bigon> find_bigons(const CombinatorialSurface& x, const CellCurve& l0, const CellCurve& l1);

/// Disjoint curves cobounding an annulus region.
bool disjoint_isotopic(const CombinatorialSurface& x, const CellCurve& l0, const CellCurve& l1);

}  // namespace dtwist::floer
