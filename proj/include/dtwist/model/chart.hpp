#pragma once

#include <functional>

#include "dtwist/model/sample.hpp"

namespace dtwist::model {

/**
 * Canonical coordinates (u, w) on T*S^n near a base point: u is the
 * stereographic projection from the antipode of the base point, w the
 * components of the covector in the basis du_1..du_n. omega = sum du ^ dw.
 */
class DarbouxChart {
public:
    explicit DarbouxChart(const Vec& centre);

    /// 2n coordinates (u, w).
    Vec to_chart(const CotangentSample& xi) const;
    CotangentSample from_chart(const Vec& z) const;
    int dim() const { return static_cast<int>(basis_.cols()); }

private:
    Vec pole_;
    Eigen::MatrixXd basis_;  // orthonormal basis of the pole's complement, (n+1) x n
};

using SampleMap = std::function<CotangentSample(const CotangentSample&)>;

/// Jacobian of f at xi in charts centred at xi and f(xi), by central differences.
Eigen::MatrixXd chart_jacobian(const SampleMap& f, const CotangentSample& xi, double step = 1e-5);

/// max |D^T J D - sign J| over entries.
double symplectic_residual(const Eigen::MatrixXd& d, int sign);

}  // namespace dtwist::model
