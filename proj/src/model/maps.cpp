#include "dtwist/model/maps.hpp"

#include <cmath>

#include "dtwist/errors.hpp"

namespace dtwist::model {

InvolutionKind parse_kind(const std::string& s) {
    if (s == "id") return InvolutionKind::Id;
    if (s == "r") return InvolutionKind::R;
    throw DomainError("unknown involution kind '" + s + "' (expected id or r)");
}

std::string to_string(InvolutionKind k) { return k == InvolutionKind::Id ? "id" : "r"; }

CotangentSample c0_star(const CotangentSample& xi, InvolutionKind kind) {
    CotangentSample out{xi.q, -xi.p};
    if (kind == InvolutionKind::R) {
        out.q[0] = -out.q[0];
        out.p[0] = -out.p[0];
    }
    return out;
}

CotangentSample model_dehn_twist(const CotangentSample& xi, const ProfileFunction& nu) {
    const double r = xi.norm();
    if (r == 0) return {-xi.q, xi.p};
    return flow_or_stay(xi, nu(r));
}

CotangentSample model_dehn_twist_inverse(const CotangentSample& xi, const ProfileFunction& nu) {
    const double r = xi.norm();
    if (r == 0) return {-xi.q, xi.p};
    return flow_or_stay(xi, -nu(r));
}

double distance(const HandlePoint& a, const HandlePoint& b) {
    const double d1 = distance(a.xi1, b.xi1), d2 = distance(a.xi2, b.xi2);
    return std::sqrt(d1 * d1 + d2 * d2 + std::norm(a.z - b.z));
}

std::pair<double, double> handle_times(double xi_norm, double p, const ProfileFunction& nu) {
    const double rho = std::hypot(xi_norm, p);
    if (rho == 0) throw DomainError("handle: xi and p both vanish");
    const double v = nu(rho);
    return {v * xi_norm / rho, v * std::abs(p) / rho};
}

HandlePoint handle_point(const CotangentSample& xi, double p, double q, const ProfileFunction& nu, bool extend) {
    const double rho = std::hypot(xi.norm(), p);
    if (rho == 0) throw DomainError("handle: xi and p both vanish");
    if (!extend && rho >= nu.epsilon()) throw DomainError("handle: sqrt(|xi|^2 + p^2) must be below eps");
    const auto [s, r] = handle_times(xi.norm(), p, nu);
    return {xi, flow_or_stay(-xi, s), {r + q, -p}};
}

HandlePoint swap_map(const HandlePoint& a, InvolutionKind kind) {
    return {c0_star(-a.xi2, kind), -c0_star(a.xi1, kind), a.z};
}

}  // namespace dtwist::model
