#include "dtwist/model/chart.hpp"

#include "dtwist/errors.hpp"

namespace dtwist::model {

DarbouxChart::DarbouxChart(const Vec& centre) : pole_(-centre.normalized()) {
    const auto n1 = static_cast<Eigen::Index>(centre.size());
    // Householder QR: the last n columns of Q span the complement of the pole.
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n1, n1);
    a.col(0) = pole_;
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    const Eigen::MatrixXd qm = qr.householderQ();
    basis_ = qm.rightCols(n1 - 1);
}

Vec DarbouxChart::to_chart(const CotangentSample& xi) const {
    const double h = xi.q.dot(pole_);
    if (1 - h < 1e-8) throw DomainError("chart: point too close to the pole");
    const Vec u = basis_.transpose() * (xi.q - h * pole_) / (1 - h);
    const double s = u.squaredNorm();
    const Vec uf = basis_ * u;  // u embedded in R^{n+1}
    const Vec x = (2 * uf + (s - 1) * pole_) / (s + 1);
    const int n = dim();
    Vec z(2 * n);
    z.head(n) = u;
    for (int i = 0; i < n; ++i) {
        // d x / d u_i
        const Vec dx = (2 * basis_.col(i) + 2 * u[i] * pole_) / (s + 1) - x * (2 * u[i] / (s + 1));
        z[n + i] = xi.p.dot(dx);
    }
    return z;
}

CotangentSample DarbouxChart::from_chart(const Vec& z) const {
    const int n = dim();
    const Vec u = z.head(n);
    const double s = u.squaredNorm();
    const Vec uf = basis_ * u;
    const Vec x = (2 * uf + (s - 1) * pole_) / (s + 1);
    // Conformal metric g = 4 / (1 + s)^2 I; p = g^{-1} w in the coordinate frame.
    Vec p = Vec::Zero(x.size());
    const double ginv = (1 + s) * (1 + s) / 4;
    for (int i = 0; i < n; ++i) {
        const Vec dx = (2 * basis_.col(i) + 2 * u[i] * pole_) / (s + 1) - x * (2 * u[i] / (s + 1));
        p += ginv * z[n + i] * dx;
    }
    return {x, p};
}

Eigen::MatrixXd chart_jacobian(const SampleMap& f, const CotangentSample& xi, double step) {
    const DarbouxChart src(xi.q), dst(f(xi).q);
    const Vec z0 = src.to_chart(xi);
    const auto m = z0.size();
    Eigen::MatrixXd d(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        Vec zp = z0, zm = z0;
        zp[j] += step;
        zm[j] -= step;
        d.col(j) = (dst.to_chart(f(src.from_chart(zp))) - dst.to_chart(f(src.from_chart(zm)))) / (2 * step);
    }
    return d;
}

double symplectic_residual(const Eigen::MatrixXd& d, int sign) {
    const auto m = d.rows(), n = m / 2;
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(m, m);
    j.topRightCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
    j.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
    return (d.transpose() * j * d - sign * j).cwiseAbs().maxCoeff();
}

}  // namespace dtwist::model
