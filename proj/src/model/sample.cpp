#include "dtwist/model/sample.hpp"

#include <cmath>

#include "dtwist/errors.hpp"

namespace dtwist::model {

CotangentSample make_sample(Vec q, Vec p) {
    if (q.size() != p.size() || q.size() < 2) throw DomainError("sample: q and p must lie in the same R^{n+1}, n >= 1");
    if (std::abs(q.norm() - 1) > 1e-12) throw DomainError("sample: |q| != 1");
    if (std::abs(q.dot(p)) > 1e-12) throw DomainError("sample: p is not tangent at q");
    return {std::move(q), std::move(p)};
}

double distance(const CotangentSample& a, const CotangentSample& b) {
    return std::sqrt((a.q - b.q).squaredNorm() + (a.p - b.p).squaredNorm());
}

CotangentSample random_sample(std::mt19937_64& rng, int n, double rmin, double rmax) {
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(rmin, rmax);
    Vec q(n + 1), v(n + 1);
    for (int i = 0; i <= n; ++i) q[i] = g(rng);
    q.normalize();
    for (int i = 0; i <= n; ++i) v[i] = g(rng);
    v -= v.dot(q) * q;
    v.normalize();
    // Re-project once more so the constraints hold to rounding.
    v -= v.dot(q) * q;
    return {q, u(rng) * v.normalized()};
}

CotangentSample geodesic_flow(const CotangentSample& xi, double t) {
    const double r = xi.p.norm();
    if (r == 0) throw DomainError("geodesic flow is undefined on the zero section");
    const double c = std::cos(t), s = std::sin(t);
    return {c * xi.q + s * xi.p / r, -r * s * xi.q + c * xi.p};
}

CotangentSample flow_or_stay(const CotangentSample& xi, double t) {
    if (t == 0) return xi;
    return geodesic_flow(xi, t);
}

}  // namespace dtwist::model
