#include <array>
#include <cmath>
#include <numbers>

#include "dtwist/errors.hpp"
#include "dtwist/model/verify.hpp"
#include "model/draw.hpp"

namespace dtwist::model {

namespace {

/// Covector of norm a at a fixed base point; K only sees the norm.
CotangentSample canonical(double a) {
    Vec q = Vec::Zero(2), p = Vec::Zero(2);
    q[0] = 1;
    p[1] = a;
    return {q, p};
}

CotangentSample scaled(const CotangentSample& x, double r) {
    const double n = x.norm();
    return {x.q, n == 0 ? x.p : x.p * (r / n)};
}

}  // namespace

ModelReport verify_handle_symmetry(const ModelOptions& o) {
    Draw draw(o);
    const auto nu = ProfileFunction::admissible(o.epsilon, o.lambda);
    const double eps = o.epsilon;
    const auto dirs = draw.samples(o.samples, 1, 1);
    const auto rho = draw.uniform(o.samples, 0.05 * eps, 0.95 * eps);
    const auto ang = draw.uniform(o.samples, -std::numbers::pi / 2, std::numbers::pi / 2);
    const auto qs = draw.uniform(o.samples, -1, 1);
    const auto beyond = draw.uniform(o.samples, eps, 2 * eps);
    const InvolutionKind kind = o.kind;

    // Distance between Phi(handle(xi)) and handle(zeta) for zeta = c0*(-psi_s(-xi)).
    auto check = [&](const CotangentSample& xi, double p, double q, double* norm_out) {
        const auto alpha = handle_point(xi, p, q, nu);
        const auto [s, r] = handle_times(xi.norm(), p, nu);
        const auto zeta = c0_star(-flow_or_stay(-xi, s), kind);
        *norm_out = std::abs(zeta.norm() - xi.norm());
        return distance(swap_map(alpha, kind), handle_point(zeta, p, q, nu));
    };

    const auto m = max_reduce(o.samples, 6, o.exec, [&](std::size_t i, double* out) {
        const double p = rho[i] * std::sin(ang[i]);
        const auto xi = scaled(dirs[i], rho[i] * std::cos(ang[i]));
        out[1] = check(xi, p, qs[i], &out[0]);
        double unused = 0;
        out[2] = check(scaled(dirs[i], rho[i]), 0, qs[i], &unused);
        // xi = 0: the second factor is the base point, unflowed.
        const auto at0 = handle_point(scaled(dirs[i], 0), rho[i], qs[i], nu);
        out[3] = distance(at0.xi2, CotangentSample{dirs[i].q, Vec::Zero(dirs[i].q.size())});
        // Outside the eps-ball nu = 0: conormal point, z = q - i p.
        const auto ext = handle_point(scaled(dirs[i], beyond[i]), p, qs[i], nu, true);
        out[4] = std::max(distance(ext.xi2, -ext.xi1), std::abs(ext.z - std::complex<double>(qs[i], -p)));
        // p = 0 agrees with the surgery handle (xi, psi_{nu(|xi|)}(-xi)).
        const auto x0 = scaled(dirs[i], rho[i]);
        out[5] = distance(handle_point(x0, 0, 0, nu).xi2, geodesic_flow(-x0, nu(rho[i])));
    });
    ModelReport r = draw.report("handle");
    r.residuals = {{"|zeta| = |xi|", m[0], draw.tol(1e-9)},
                   {"Phi(handle(xi,p,q)) = handle(zeta,p,q)", m[1], draw.tol(1e-9)},
                   {"p = 0 slice: surgery-model symmetry", m[2], draw.tol(1e-9)},
                   {"xi = 0: second factor unflowed", m[3], draw.tol(0)},
                   {"rho >= eps: unflowed conormal point", m[4], draw.tol(0)},
                   {"p = 0 reduces to the flow handle", m[5], draw.tol(1e-12)}};
    return r;
}

SuspensionHamiltonian zero_hamiltonian() {
    return {"zero", [](double, const CotangentSample&, const CotangentSample&) { return 0.0; },
            [](double, double, double) { return std::pair<double, double>{0, 0}; }};
}

SuspensionHamiltonian bump_hamiltonian() {
    return {"bump(t) |xi2|^2",
            [](double t, const CotangentSample&, const CotangentSample& x2) {
                return smooth_step_derivative((t - 0.1) / 0.8) / 0.8 * x2.p.squaredNorm();
            },
            [](double t, double, double b) { return std::pair<double, double>{0, 2 * b * smooth_step((t - 0.1) / 0.8)}; }};
}

std::pair<double, double> ode_flow_times(const SuspensionHamiltonian& k, double t, double a, double b, int steps) {
    // K only sees the norms; reuse two representatives instead of allocating per call.
    CotangentSample u = canonical(0), v = canonical(0);
    auto kv = [&](double tau, double x, double y) {
        u.p[1] = x;
        v.p[1] = y;
        return k.value(tau, u, v);
    };
    auto partials = [&](double tau) {
        const double ha = 1e-5 * std::max(1.0, a), hb = 1e-5 * std::max(1.0, b);
        const double da = a > ha ? (kv(tau, a + ha, b) - kv(tau, a - ha, b)) / (2 * ha) : (kv(tau, a + ha, b) - kv(tau, a, b)) / ha;
        const double db = b > hb ? (kv(tau, a, b + hb) - kv(tau, a, b - hb)) / (2 * hb) : (kv(tau, a, b + hb) - kv(tau, a, b)) / hb;
        return std::array<double, 2>{da, db};
    };
    // theta' = grad K(tau) does not depend on theta, so RK4 is Simpson's rule per step.
    double th[2] = {0, 0};
    const double h = t / steps;
    for (int i = 0; i < steps; ++i) {
        const double tau = i * h;
        const auto k1 = partials(tau), k2 = partials(tau + h / 2), k4 = partials(tau + h);
        for (int j = 0; j < 2; ++j) th[j] += h / 6 * (k1[j] + 4 * k2[j] + k4[j]);
    }
    return {th[0], th[1]};
}

namespace {

void require_norm_dependent(const SuspensionHamiltonian& k, const ModelOptions& o) {
    std::mt19937_64 rng(o.seed ^ 0x5eedULL);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 32; ++i) {
        const double t = u(rng), a = o.epsilon * u(rng), b = o.epsilon * u(rng);
        const auto x1 = random_sample(rng, o.dim, a, a), x2 = random_sample(rng, o.dim, b, b);
        const auto y1 = random_sample(rng, o.dim, a, a), y2 = random_sample(rng, o.dim, b, b);
        const double v = k.value(t, x1, x2), w = k.value(t, y1, y2);
        if (std::abs(v - w) > 1e-9 * (1 + std::abs(v)))
            throw DomainError("suspension Hamiltonian '" + k.name + "' depends on more than the norms");
    }
}

}  // namespace

ModelReport verify_suspension_symmetry(const ModelOptions& o, const SuspensionHamiltonian& k, FlowPath path) {
    require_norm_dependent(k, o);
    if (path == FlowPath::ClosedForm && !k.flow_times) throw DomainError("closed-form path needs flow_times");
    Draw draw(o);
    const auto nu = ProfileFunction::admissible(o.epsilon, o.lambda);
    const auto xs = draw.samples(o.samples, 0.05 * o.epsilon, 0.95 * o.epsilon);
    const auto ts = draw.uniform(o.samples, 0, 1);
    const InvolutionKind kind = o.kind;
    auto times = [&](double t, double a, double b) {
        return path == FlowPath::ClosedForm ? k.flow_times(t, a, b) : ode_flow_times(k, t, a, b);
    };
    struct Point {
        HandlePoint h;
        double a, b;
    };
    auto suspend = [&](const CotangentSample& xi, double t) {
        const double s = nu(xi.norm());
        const auto x2 = flow_or_stay(-xi, s);
        const auto [a, b] = times(t, xi.norm(), x2.norm());
        Point pt{{flow_or_stay(xi, a), flow_or_stay(x2, b), {}}, a, s + b};
        pt.h.z = {t, -k.value(t, pt.h.xi1, pt.h.xi2)};
        return pt;
    };
    const bool compare = static_cast<bool>(k.flow_times) && path == FlowPath::Ode;
    const auto m = max_reduce(o.samples, 5, o.exec, [&](std::size_t i, double* out) {
        const auto& xi = xs[i];
        const auto beta = suspend(xi, ts[i]);
        const auto zeta = c0_star(-flow_or_stay(-xi, beta.b - beta.a), kind);
        out[0] = std::abs(zeta.norm() - xi.norm());
        const auto image = swap_map(beta.h, kind);
        const auto rebuilt = suspend(zeta, ts[i]).h;
        out[1] = distance(image, rebuilt);
        out[2] = std::abs(image.z - rebuilt.z);
        out[3] = std::max(std::abs(suspend(xi, 0).h.z.imag()), std::abs(suspend(xi, 1).h.z.imag()));
        if (compare) {
            const auto [c1, c2] = k.flow_times(ts[i], xi.norm(), xi.norm());
            const auto [d1, d2] = ode_flow_times(k, ts[i], xi.norm(), xi.norm());
            out[4] = std::max(std::abs(c1 - d1), std::abs(c2 - d2));
        }
    });
    const double sym = path == FlowPath::ClosedForm ? 1e-9 : 1e-6;
    ModelReport r = draw.report(path == FlowPath::ClosedForm ? "suspension" : "suspension-ode");
    r.residuals = {{"|zeta| = |xi| (" + k.name + ")", m[0], draw.tol(sym)},
                   {"Phi(S) = S pointwise via zeta", m[1], draw.tol(sym)},
                   {"C-coordinate equality", m[2], draw.tol(1e-12)},
                   {"Im z = 0 at t = 0 and t = 1", m[3], draw.tol(0)}};
    if (compare) r.residuals.push_back({"ODE flow times vs closed form", m[4], draw.tol(1e-6)});
    return r;
}

SampleMap moser_rescale(const SampleMap& psi, double t, int dim) {
    if (!(t > 0 && t <= 1)) throw DomainError("moser_rescale needs t in (0, 1]");
    for (int i = 0; i <= dim; ++i) {
        for (double sgn : {1.0, -1.0}) {
            Vec q = Vec::Zero(dim + 1);
            q[i] = sgn;
            const CotangentSample x{q, Vec::Zero(dim + 1)};
            if (distance(psi(x), x) > 1e-9) throw DomainError("moser_rescale: map does not fix the zero section");
        }
    }
    return [psi, t](const CotangentSample& x) {
        const auto y = psi(CotangentSample{x.q, t * x.p});
        return CotangentSample{y.q, y.p / t};
    };
}

double moser_limit_residual(const SampleMap& psi, const std::vector<CotangentSample>& samples, Exec exec) {
    const int dim = samples.empty() ? 1 : samples.front().dim();
    std::vector<SampleMap> maps;
    for (double t : {1e-1, 1e-2, 1e-3, 1e-4}) maps.push_back(moser_rescale(psi, t, dim));
    const auto m = max_reduce(samples.size(), 1, exec, [&](std::size_t i, double* out) {
        // Level-k Richardson with ratio 10 removes the t^k term.
        std::vector<Vec> col;
        for (const auto& f : maps) {
            const auto y = f(samples[i]);
            Vec v(2 * y.q.size());
            v << y.q, y.p;
            col.push_back(v);
        }
        for (double fac = 10; col.size() > 1; fac *= 10) {
            std::vector<Vec> next;
            for (std::size_t j = 0; j + 1 < col.size(); ++j) next.push_back((fac * col[j + 1] - col[j]) / (fac - 1));
            col = std::move(next);
        }
        Vec x(2 * samples[i].q.size());
        x << samples[i].q, samples[i].p;
        out[0] = (col.front() - x).norm();
    });
    return m[0];
}

ModelReport verify_moser(const ModelOptions& o) {
    Draw draw(o);
    const auto nu = ProfileFunction::dehn(o.epsilon);
    const SampleMap tau2 = [&](const CotangentSample& x) { return model_dehn_twist(model_dehn_twist(x, nu), nu); };
    const SampleMap id = [](const CotangentSample& x) { return x; };
    const auto xs = draw.samples(o.samples, 0.1, 1.0);
    const auto one = moser_rescale(tau2, 1, o.dim);
    const auto idt = moser_rescale(id, 1e-3, o.dim);
    const auto m = max_reduce(o.samples, 2, o.exec, [&](std::size_t i, double* out) {
        out[0] = distance(one(xs[i]), tau2(xs[i]));
        out[1] = distance(idt(xs[i]), xs[i]);
    });
    double rejected = 1;
    try {
        moser_rescale([&](const CotangentSample& x) { return model_dehn_twist(x, nu); }, 0.5, o.dim);
    } catch (const DomainError&) {
        rejected = 0;
    }
    ModelReport r = draw.report("moser");
    r.residuals = {{"t = 1 returns psi", m[0], draw.tol(0)},
                   {"identity rescales to identity", m[1], draw.tol(1e-15)},
                   {"t -> 0 limit of tau^2 is the identity", moser_limit_residual(tau2, xs, o.exec), draw.tol(1e-6)},
                   {"map moving the zero section is rejected", rejected, draw.tol(0)}};
    return r;
}

std::vector<std::string> model_verifier_names() {
    return {"flow", "twist", "profiles", "lemma", "handle", "suspension", "suspension-ode", "splitting", "moser"};
}

ModelReport run_model_verifier(const std::string& name, const ModelOptions& o) {
    if (name == "flow") return verify_geodesic_flow(o);
    if (name == "twist") return verify_dehn_twist(o);
    if (name == "profiles") return verify_profiles(o);
    if (name == "lemma") return verify_lemma_identities(o);
    if (name == "handle") return verify_handle_symmetry(o);
    if (name == "suspension") return verify_suspension_symmetry(o, bump_hamiltonian(), FlowPath::ClosedForm);
    if (name == "suspension-ode") return verify_suspension_symmetry(o, bump_hamiltonian(), FlowPath::Ode);
    if (name == "splitting") return verify_involution_splitting(o);
    if (name == "moser") return verify_moser(o);
    throw DomainError("unknown model verifier '" + name + "'");
}

}  // namespace dtwist::model
