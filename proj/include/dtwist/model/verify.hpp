#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dtwist/model/chart.hpp"
#include "dtwist/model/maps.hpp"
#include "dtwist/model/parallel.hpp"

namespace dtwist::model {

struct Residual {
    std::string identity;
    double max = 0;
    double tolerance = 0;
    bool pass() const { return max <= tolerance; }
};

struct ModelReport {
    std::string verifier;
    InvolutionKind kind = InvolutionKind::Id;
    int dim = 1;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<Residual> residuals;
    bool pass() const;
};

struct ModelOptions {
    InvolutionKind kind = InvolutionKind::Id;
    int dim = 1;
    std::size_t samples = 10000;
    std::uint64_t seed = 1;
    double epsilon = 0.5;
    double lambda = 2.0;
    /// Replaces every default tolerance when set.
    std::optional<double> tolerance;
    Exec exec = Exec::Parallel;
};

/// Constraints, norm, periodicity and the group law of the geodesic flow.
ModelReport verify_geodesic_flow(const ModelOptions& o);
/// Antipode on the zero section, identity past eps, continuity, symplectic Jacobian.
ModelReport verify_dehn_twist(const ModelOptions& o);
/// Contracts of both profile kinds on a 10^3-point grid.
ModelReport verify_profiles(const ModelOptions& o);
/// The two identities relating c0* to the geodesic flow.
ModelReport verify_lemma_identities(const ModelOptions& o);
/// Phi(handle(xi, p, q)) = handle(zeta, p, q) with zeta = c0*(-psi_s(-xi)).
ModelReport verify_handle_symmetry(const ModelOptions& o);
/// c~ = c tau is an involution, c tau c = tau^{-1}, c and c~ anti-symplectic.
ModelReport verify_involution_splitting(const ModelOptions& o);

/**
 * Interpolating Hamiltonian K_t(xi1, xi2) of the suspension. It must depend
 * on the norms only; the verifier checks this on random pairs. When
 * `flow_times` is set, it returns the closed-form flow times
 * (theta1, theta2)(t, |xi1|, |xi2|) = integral_0^t of the partials of K.
 */
struct SuspensionHamiltonian {
    std::string name;
    std::function<double(double t, const CotangentSample&, const CotangentSample&)> value;
    std::function<std::pair<double, double>(double t, double a, double b)> flow_times;
};

/// K = 0: the suspension is a product.
SuspensionHamiltonian zero_hamiltonian();
/// K_t = S'(w) / 0.8 |xi2|^2 with w = (t - 0.1) / 0.8; zero near t = 0 and t = 1.
SuspensionHamiltonian bump_hamiltonian();

enum class FlowPath { ClosedForm, Ode };

/// Flow times of K by RK4 on theta' = dK/d(norms), partials by central differences.
std::pair<double, double> ode_flow_times(const SuspensionHamiltonian& k, double t, double a, double b, int steps = 100);

ModelReport verify_suspension_symmetry(const ModelOptions& o, const SuspensionHamiltonian& k, FlowPath path);

/**
 * psi_t(q, p) = (u(q, tp), v(q, tp) / t) for a map psi fixing the zero
 * section. Throws DomainError when psi moves the zero-section probes.
 */
SampleMap moser_rescale(const SampleMap& psi, double t, int dim);

/// Richardson-extrapolated t -> 0 limit of moser_rescale at each sample,
/// from t in {1e-1, 1e-2, 1e-3, 1e-4}; returns the max distance to the sample.
double moser_limit_residual(const SampleMap& psi, const std::vector<CotangentSample>& samples, Exec exec);

/// Moser limit of the squared Dehn twist, which fixes the zero section.
ModelReport verify_moser(const ModelOptions& o);

/// All verifiers; model(...) names: flow, twist, profiles, lemma, handle, suspension, splitting, moser.
std::vector<std::string> model_verifier_names();
ModelReport run_model_verifier(const std::string& name, const ModelOptions& o);

}  // namespace dtwist::model
