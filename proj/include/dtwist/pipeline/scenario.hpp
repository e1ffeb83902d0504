#pragma once

#include <optional>
#include <string>

#include "dtwist/surface/format.hpp"
#include "dtwist/surface/involution.hpp"
#include "dtwist/surface/surface.hpp"

namespace dtwist::pipeline {

using surface::CellCurve;
using surface::CellInvolution;
using surface::CombinatorialSurface;

/// Surface, twist curve S, involution c with c(S) = S, and optional test curves Q, N.
struct TwistScenario {
    std::string name;
    CombinatorialSurface surface;
    CellCurve s;
    std::optional<CellInvolution> c;
    std::optional<CellCurve> q;
    std::optional<CellCurve> n;

    std::string describe() const;
};

/**
 * Read the scenario section: S names a curve (required), c an involution,
 * Q and N curves. Keys other than these throw ParseError. Each of
 * `subdivide` quad refinements transports S, c, Q and N.
 */
TwistScenario scenario_from_file(const surface::SurfaceFile& f, int subdivide = 0);
TwistScenario load_scenario(const std::string& path, int subdivide = 0);

/// Throws CurveError, ContractibleCurveError or InvolutionError for an invalid package.
void validate_scenario(const TwistScenario& x);

}  // namespace dtwist::pipeline
