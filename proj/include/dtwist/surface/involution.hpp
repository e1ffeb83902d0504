#pragma once

#include <map>
#include <string>
#include <vector>

#include "dtwist/gf2/chain_complex.hpp"
#include "dtwist/surface/cohomology.hpp"
#include "dtwist/surface/cut.hpp"
#include "dtwist/surface/surface.hpp"

namespace dtwist::surface {

/// A cell map given on darts; c(reverse d) = reverse c(d) is kept by construction.
struct CellInvolution {
    std::string name;
    std::vector<Dart> dart_map;

    Dart operator()(Dart d) const { return dart_map.at(static_cast<std::size_t>(d)); }
    CellCurve apply(const CellCurve& c) const;
};

CellInvolution identity_involution(const CombinatorialSurface& x);

/**
 * Parse dart cycles such as "(a b') (c) (e e')". Darts not mentioned are fixed.
 * A cycle on d also fixes the reversed cycle on d'. Throws ParseError with
 * column offsets into `text` when a dart is assigned twice.
 */
CellInvolution involution_from_cycles(const CombinatorialSurface& x, const std::string& name, const std::string& text);
/// Minimal cycle text for the dart map: one entry per edge orbit, identity omitted.
std::string involution_cycles(const CombinatorialSurface& x, const CellInvolution& c);

struct InvolutionCheck {
    bool ok = false;
    bool order_two = false;
    bool incidence = false;
    bool orientation_reversing = false;
    std::vector<std::string> diagnostics;
    /// Filled when incidence holds.
    std::vector<int> vertex_map;
    std::vector<int> face_map;
};

InvolutionCheck validate_involution(const CombinatorialSurface& x, const CellInvolution& c);

/// Orientation-reversing cell map of X composed with the face correspondence.
struct InducedAction {
    CutResult cut;
    CellularCohomology cohomology;
    /// Pullback c^* on the cochains of the cut surface.
    gf2::ChainMap cochain_map;
    /// c^* on H^k in the distinguished bases.
    std::map<int, gf2::BitMatrix> matrices;
};

/// Throws InvolutionError unless c is valid and c(S) = S as unoriented loops.
InducedAction involution_induced_map(const CombinatorialSurface& x, const CellCurve& s, const CellInvolution& c);

}  // namespace dtwist::surface
