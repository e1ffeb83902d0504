#include <cmath>
#include <numbers>

#include "dtwist/errors.hpp"
#include "dtwist/model/verify.hpp"
#include "model/draw.hpp"

namespace dtwist::model {

bool ModelReport::pass() const {
    for (const auto& r : residuals)
        if (!r.pass()) return false;
    return !residuals.empty();
}

ModelReport verify_geodesic_flow(const ModelOptions& o) {
    Draw draw(o);
    const auto xs = draw.samples(o.samples, 0.1, 2.0);
    const auto ts = draw.uniform(o.samples, -10, 10);
    const auto ss = draw.uniform(o.samples, -10, 10);
    const auto m = max_reduce(o.samples, 4, o.exec, [&](std::size_t i, double* out) {
        const auto& x = xs[i];
        const auto y = geodesic_flow(x, ts[i]);
        out[0] = std::max({std::abs(y.q.norm() - 1), std::abs(y.q.dot(y.p))});
        out[1] = std::abs(y.norm() - x.norm());
        out[2] = distance(geodesic_flow(x, 2 * std::numbers::pi), x);
        out[3] = distance(geodesic_flow(y, ss[i]), geodesic_flow(x, ts[i] + ss[i]));
    });
    // Quarter great circle: (e1, e2) -> (e2, -e1).
    Vec e1 = Vec::Zero(o.dim + 1), e2 = Vec::Zero(o.dim + 1);
    e1[0] = 1;
    e2[1] = 1;
    const double quarter = distance(geodesic_flow({e1, e2}, std::numbers::pi / 2), CotangentSample{e2, -e1});

    ModelReport r = draw.report("flow");
    r.residuals = {{"|q| = 1 and q.p = 0 preserved", m[0], draw.tol(1e-10)},
                   {"|p| preserved", m[1], draw.tol(1e-10)},
                   {"period 2 pi", m[2], draw.tol(1e-10)},
                   {"psi_s psi_t = psi_{s+t}", m[3], draw.tol(1e-9)},
                   {"quarter turn (e1,e2) -> (e2,-e1)", quarter, draw.tol(1e-15)}};
    return r;
}

ModelReport verify_dehn_twist(const ModelOptions& o) {
    Draw draw(o);
    const auto nu = ProfileFunction::dehn(o.epsilon);
    const double eps = o.epsilon;
    const auto zero = draw.samples(o.samples, 0, 0);
    const auto far = draw.samples(o.samples, eps, 3 * eps);
    const auto mid = draw.samples(o.samples, 0.2 * eps, 1.1 * eps);
    const auto ray = draw.samples(o.samples, 1, 1);
    const SampleMap tau = [&](const CotangentSample& x) { return model_dehn_twist(x, nu); };
    const auto m = max_reduce(o.samples, 5, o.exec, [&](std::size_t i, double* out) {
        out[0] = distance(tau(zero[i]), CotangentSample{-zero[i].q, zero[i].p});
        out[1] = distance(tau(far[i]), far[i]);
        const CotangentSample tiny{ray[i].q, 1e-6 * ray[i].p};
        out[2] = distance(tau(tiny), CotangentSample{-ray[i].q, Vec::Zero(ray[i].p.size())});
        out[3] = symplectic_residual(chart_jacobian(tau, mid[i]), 1);
        out[4] = distance(model_dehn_twist_inverse(tau(mid[i]), nu), mid[i]);
    });
    ModelReport r = draw.report("twist");
    r.residuals = {{"zero section -> antipode", m[0], draw.tol(0)},
                   {"identity for |xi| >= eps", m[1], draw.tol(1e-12)},
                   {"continuity at |xi| = 1e-6", m[2], draw.tol(1e-5)},
                   {"D^T J D = J (finite differences)", m[3], draw.tol(1e-5)},
                   {"inverse undoes the twist", m[4], draw.tol(1e-10)}};
    return r;
}

namespace {

/// Grid r_k = eps k / 1001, k = 1..1000.
double grid(double eps, int k) { return eps * k / 1001.0; }

void profile_contracts(const ProfileFunction& nu, std::vector<Residual>& out, const Draw& draw, const std::string& tag) {
    const double eps = nu.epsilon();
    double violations = 0, outside = 0, band = 0, dmax = 0;
    for (int k = 1; k < 1000; ++k)
        if (!(nu(grid(eps, k + 1)) < nu(grid(eps, k)))) violations += 1;
    for (int k = 1; k <= 1000; ++k) {
        const double r = grid(eps, k), v = nu(r);
        if (!(v >= 0 && v < nu.top())) band += 1;
        if (k >= 5 && k <= 995) {
            // Central difference against the derivative evaluator, relative.
            const double h = 1e-6 * eps;
            const double fd = (nu(r + h) - nu(r - h)) / (2 * h);
            dmax = std::max(dmax, std::abs(fd - nu.derivative(r)) / (1 + std::abs(fd)));
        }
        outside = std::max(outside, std::abs(nu(eps * (1 + 2.0 * k / 1000))));
    }
    out.push_back({tag + ": strictly decreasing on the grid (violations)", violations, draw.tol(0)});
    out.push_back({tag + ": 0 <= nu < nu(0) inside (violations)", band, draw.tol(0)});
    out.push_back({tag + ": nu = 0 for r >= eps", outside, draw.tol(0)});
    out.push_back({tag + ": derivative evaluator vs central differences", dmax, draw.tol(1e-5)});
}

}  // namespace

ModelReport verify_profiles(const ModelOptions& o) {
    Draw draw(o);
    ModelReport r = draw.report("profiles");
    const auto dehn = ProfileFunction::dehn(o.epsilon);
    double linear = 0;
    for (int k = 0; k <= 1000; ++k) {
        const double x = o.epsilon / 4 * k / 1000.0;
        linear = std::max(linear, std::abs(dehn(x) - (std::numbers::pi - x)));
    }
    r.residuals.push_back({"dehn: nu(r) = pi - r on [0, eps/4]", linear, draw.tol(0)});
    profile_contracts(dehn, r.residuals, draw, "dehn");

    const auto adm = ProfileFunction::admissible(o.epsilon, o.lambda);
    r.residuals.push_back({"admissible: nu(0) = lambda", std::abs(adm(0) - o.lambda), draw.tol(0)});
    profile_contracts(adm, r.residuals, draw, "admissible");
    // Flatness of the inverse at lambda, orders 1..4: nu^{-1}(lambda - d) / d^k -> 0.
    double flat = 0;
    for (double f : {0.02, 0.015, 0.01, 0.005}) {
        const double d = f * o.lambda;
        const double x = adm.inverse(o.lambda - d);
        for (int k = 1; k <= 4; ++k) flat = std::max(flat, x / std::pow(d, k));
    }
    r.residuals.push_back({"admissible: inverse flat at lambda (orders <= 4)", flat, draw.tol(1e-9)});
    return r;
}

ModelReport verify_lemma_identities(const ModelOptions& o) {
    Draw draw(o);
    const auto xs = draw.samples(o.samples, 0.05, 2.0);
    const auto ss = draw.uniform(o.samples, 0, std::numbers::pi);
    const InvolutionKind kind = o.kind;
    const auto m = max_reduce(o.samples, 3, o.exec, [&](std::size_t i, double* out) {
        const auto& x = xs[i];
        const double s = ss[i];
        const auto rhs = -geodesic_flow(-c0_star(-geodesic_flow(-x, s), kind), s);
        out[0] = distance(c0_star(x, kind), rhs);
        out[1] = std::abs(c0_star(-geodesic_flow(-x, s), kind).norm() - x.norm());
        const auto at0 = -flow_or_stay(-c0_star(-flow_or_stay(-x, 0), kind), 0);
        out[2] = distance(c0_star(x, kind), at0);
    });
    ModelReport r = draw.report("lemma");
    r.residuals = {{"c0*(xi) = -psi_s(-c0*(-psi_s(-xi)))", m[0], draw.tol(1e-9)},
                   {"|c0*(-psi_s(-xi))| = |xi|", m[1], draw.tol(1e-9)},
                   {"s = 0 reduces to c0* = c0*", m[2], draw.tol(0)}};
    return r;
}

ModelReport verify_involution_splitting(const ModelOptions& o) {
    Draw draw(o);
    const auto nu = ProfileFunction::dehn(o.epsilon);
    const InvolutionKind kind = o.kind;
    auto xs = draw.samples(o.samples, 0, 1.5 * o.epsilon);
    // A few exact zero-section points.
    for (std::size_t i = 0; i < xs.size(); i += 97) xs[i].p.setZero();
    const auto mid = draw.samples(o.samples, 0.2 * o.epsilon, 1.1 * o.epsilon);
    const SampleMap c = [kind](const CotangentSample& x) { return c0_star(x, kind); };
    const SampleMap tau = [&](const CotangentSample& x) { return model_dehn_twist(x, nu); };
    const SampleMap ct = [&](const CotangentSample& x) { return c(tau(x)); };
    const auto m = max_reduce(o.samples, 5, o.exec, [&](std::size_t i, double* out) {
        const auto& x = xs[i];
        out[0] = distance(c(c(x)), x);
        out[1] = distance(ct(ct(x)), x);
        out[2] = distance(c(tau(c(x))), model_dehn_twist_inverse(x, nu));
        out[3] = symplectic_residual(chart_jacobian(c, mid[i]), -1);
        out[4] = symplectic_residual(chart_jacobian(ct, mid[i]), -1);
    });
    ModelReport r = draw.report("splitting");
    r.residuals = {{"c^2 = id", m[0], draw.tol(0)},
                   {"c~^2 = id, c~ = c tau", m[1], draw.tol(1e-10)},
                   {"c tau c = tau^{-1}", m[2], draw.tol(1e-8)},
                   {"c anti-symplectic: D^T J D = -J", m[3], draw.tol(1e-5)},
                   {"c~ anti-symplectic: D^T J D = -J", m[4], draw.tol(1e-5)}};
    return r;
}

}  // namespace dtwist::model
