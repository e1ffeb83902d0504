#pragma once

#include <random>

#include <Eigen/Dense>

namespace dtwist::model {

using Vec = Eigen::VectorXd;

/**
 * A covector on the round sphere S^n in R^{n+1}, stored as the tangent
 * vector p at q that the metric identifies it with.
 */
struct CotangentSample {
    Vec q;
    Vec p;

    int dim() const { return static_cast<int>(q.size()) - 1; }
    double norm() const { return p.norm(); }
    CotangentSample operator-() const { return {q, -p}; }
};

/// Checks |q| = 1 and q.p = 0 to 1e-12; throws DomainError otherwise.
CotangentSample make_sample(Vec q, Vec p);

/// Distance in R^{n+1} x R^{n+1}.
double distance(const CotangentSample& a, const CotangentSample& b);

/// Uniform q on S^n; p uniform in direction with |p| uniform in [rmin, rmax].
CotangentSample random_sample(std::mt19937_64& rng, int n, double rmin, double rmax);

/**
 * Time-t flow of sigma(xi) = |xi|: unit-speed geodesic motion. Throws
 * DomainError on the zero section, where the flow is undefined.
 */
CotangentSample geodesic_flow(const CotangentSample& xi, double t);

/// geodesic_flow, but the identity for t = 0 (also on the zero section).
CotangentSample flow_or_stay(const CotangentSample& xi, double t);

}  // namespace dtwist::model
