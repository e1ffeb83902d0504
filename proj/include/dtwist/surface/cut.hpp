#pragma once

#include <cstddef>
#include <vector>

#include "dtwist/surface/surface.hpp"

namespace dtwist::surface {

/**
 * X cut open along an embedded loop.
 *
 * `cut` holds every piece at once, with boundary. Faces keep their indices
 * from X; edges off the curve keep theirs, and each curve edge e splits into
 * a left copy (index e, named e^L) and a right copy (appended, named e^R).
 */
struct CutResult {
    CombinatorialSurface cut;
    std::vector<CombinatorialSurface> components;
    /// Face of `cut` -> index into `components`.
    std::vector<int> face_component;
    std::vector<int> edge_to_original;
    std::vector<int> vertex_to_original;
    /// Per dart of the curve: its copy on the left and on the right, as darts of `cut`.
    std::vector<Dart> left_copy;
    std::vector<Dart> right_copy;
};

/// Throws CurveError for a non-embedded loop and InternalConsistencyError if
/// the Euler characteristic or boundary bookkeeping fails.
CutResult cut_along(const CombinatorialSurface& x, const CellCurve& s);

}  // namespace dtwist::surface
