#pragma once

#include <complex>
#include <string>

#include "dtwist/model/profile.hpp"
#include "dtwist/model/sample.hpp"

namespace dtwist::model {

/// The isometry c0 of S^n: the identity, or r negating the first coordinate.
enum class InvolutionKind { Id, R };

InvolutionKind parse_kind(const std::string& s);
std::string to_string(InvolutionKind k);

/// c0*(q, p) = (c0 q, -Dc0 p).
CotangentSample c0_star(const CotangentSample& xi, InvolutionKind kind);

/// Flow for time nu(|xi|); the antipode on the zero section.
CotangentSample model_dehn_twist(const CotangentSample& xi, const ProfileFunction& nu);
/// Flow for time -nu(|xi|); the antipode on the zero section.
CotangentSample model_dehn_twist_inverse(const CotangentSample& xi, const ProfileFunction& nu);

/**
 * A point of the flow handle in T*S^n x T*S^n x C. The second factor
 * carries the sign of M^-, so the conormal of the diagonal is
 * {(xi, -xi)} and the handle is
 *   (xi, psi_s(-xi), (r + q) - i p),
 *   s = nu(rho) |xi| / rho,  r = nu(rho) |p| / rho,  rho = sqrt(|xi|^2 + p^2).
 */
struct HandlePoint {
    CotangentSample xi1;
    CotangentSample xi2;
    std::complex<double> z;
};

double distance(const HandlePoint& a, const HandlePoint& b);

/// Flow times (s, r) of the handle formula.
std::pair<double, double> handle_times(double xi_norm, double p, const ProfileFunction& nu);

/**
 * Throws DomainError when rho = 0, or when rho >= eps unless `extend` is
 * set; extended points have nu = 0 and are not flowed.
 */
HandlePoint handle_point(const CotangentSample& xi, double p, double q, const ProfileFunction& nu, bool extend = false);

/// Phi(xi1, xi2, z) = (c(-xi2), -c(xi1), z) with c = c0*.
HandlePoint swap_map(const HandlePoint& a, InvolutionKind kind);

}  // namespace dtwist::model
