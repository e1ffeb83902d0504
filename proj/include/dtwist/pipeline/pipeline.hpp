#pragma once

#include <map>

#include "dtwist/floer/floer.hpp"
#include "dtwist/gf2/chain_complex.hpp"
#include "dtwist/pipeline/report.hpp"
#include "dtwist/pipeline/scenario.hpp"
#include "dtwist/surface/cohomology.hpp"
#include "dtwist/surface/cut.hpp"

namespace dtwist::pipeline {

/// HF*(tau_S^-1) through its surrogate H*(X \ S).
struct TwistCohomology {
    surface::CutResult cut;
    /// H^0 basis: component indicators of the cut surface.
    surface::CellularCohomology cohomology;
    gf2::GradedDims ranks() const { return cohomology.homology.ranks; }
};
TwistCohomology hf_inverse_twist(const TwistScenario& x);

/// Image of the unit of H^0(X) under restriction to X \ S, in the component basis.
gf2::BitVector distinguished_element(const TwistScenario& x);

/// c* per degree. Throws InvolutionError when the scenario has no c or c(S) != S.
std::map<int, gf2::BitMatrix> involution_action(const TwistScenario& x);

/// A with its nonvanishing verdicts.
VerificationReport element_a_report(const TwistScenario& x);
/// c* with the involution and permutation verdicts.
VerificationReport involution_report(const TwistScenario& x);
/// Both of the above plus c*(A) = A, checked on cochains.
VerificationReport verify_theorem_a(const TwistScenario& x);

struct LesRanks {
    gf2::GradedDims sn, qs, tensor, qn, qtn;
    std::size_t r1() const { return tensor.total(); }
    std::size_t r2() const { return qn.total(); }
    std::size_t r3() const { return qtn.total(); }
};
/// The three ranks around the twist sequence, with N twisted once to the right along S.
LesRanks les_ranks(const TwistScenario& x);
/// Throws CurveError when Q or N is missing.
VerificationReport les_rank_check(const TwistScenario& x);

/// Checks on the rank triple shared by the pipeline and the recomputation.
std::vector<Verdict> les_verdicts(std::size_t r1, std::size_t r2, std::size_t r3);

}  // namespace dtwist::pipeline
