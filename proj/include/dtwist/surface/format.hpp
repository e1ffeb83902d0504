#pragma once

#include <map>
#include <string>
#include <vector>

#include "dtwist/surface/involution.hpp"
#include "dtwist/surface/surface.hpp"

namespace dtwist::surface {

/**
 * Contents of a .surf file. See docs/surface-format.md for the grammar:
 *
 *   surface genus2
 *   faces:
 *     a1 b1 a1' b1' a2 b2 a2' b2'
 *   curves:
 *     S = a1 b1
 *   involutions:
 *     c = (a1 a2') (b1 b2')
 *   scenario:
 *     S = S
 */
struct SurfaceFile {
    std::string name;
    CombinatorialSurface surface;
    std::vector<CellCurve> curves;
    std::vector<CellInvolution> involutions;
    /// Key/value lines of the scenario section, in file order.
    std::vector<std::pair<std::string, std::string>> scenario;

    const CellCurve& curve(const std::string& name) const;
    const CellInvolution& involution(const std::string& name) const;
    /// Value of a scenario key, or `fallback` when absent.
    std::string scenario_value(const std::string& key, const std::string& fallback = "") const;
};

/// Syntax errors throw ParseError; cell data that is not a surface throws
/// SurfaceError with the offending line in the message.
SurfaceFile parse_surface_file(const std::string& text);
SurfaceFile load_surface_file(const std::string& path);
std::string format_surface_file(const SurfaceFile& file);

}  // namespace dtwist::surface
