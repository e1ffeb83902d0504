#include "oracles/ode_oracle.hpp"

namespace oracle {

namespace {

Vec field(const Hamiltonian& h, double t, const Vec& y) {
    const auto m = y.size() / 2;
    const Vec q = y.head(m), p = y.tail(m);
    Vec hq(m), hp(m);
    const double e = 1e-6;
    for (Eigen::Index i = 0; i < m; ++i) {
        Vec a = q, b = q;
        a[i] += e;
        b[i] -= e;
        hq[i] = (h(t, a, p) - h(t, b, p)) / (2 * e);
        Vec c = p, d = p;
        c[i] += e;
        d[i] -= e;
        hp[i] = (h(t, q, c) - h(t, q, d)) / (2 * e);
    }
    Vec out(2 * m);
    out.head(m) = hp - q * q.dot(hp);
    out.tail(m) = -hq - q * (p.dot(hp) - q.dot(hq)) + p * q.dot(hp);
    return out;
}

}  // namespace

CotangentSample integrate(const Hamiltonian& h, const CotangentSample& x, double t, int steps) {
    const auto m = x.q.size();
    Vec y(2 * m);
    y << x.q, x.p;
    const double dt = t / steps;
    for (int i = 0; i < steps; ++i) {
        const double s = i * dt;
        const Vec k1 = field(h, s, y);
        const Vec k2 = field(h, s + dt / 2, y + dt / 2 * k1);
        const Vec k3 = field(h, s + dt / 2, y + dt / 2 * k2);
        const Vec k4 = field(h, s + dt, y + dt * k3);
        y += dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    return {y.head(m), y.tail(m)};
}

CotangentSample integrate(const std::function<double(const Vec&, const Vec&)>& h, const CotangentSample& x, double t,
                          int steps) {
    return integrate([&](double, const Vec& q, const Vec& p) { return h(q, p); }, x, t, steps);
}

}  // namespace oracle
