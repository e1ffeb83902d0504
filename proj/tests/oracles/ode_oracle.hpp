#pragma once

#include <functional>

#include "dtwist/model/sample.hpp"

namespace oracle {

using dtwist::model::CotangentSample;
using dtwist::model::Vec;

/// H_t(q, p) on R^{n+1} x R^{n+1}; only its restriction to T*S^n matters.
using Hamiltonian = std::function<double(double t, const Vec& q, const Vec& p)>;

/**
 * Hamiltonian flow on T*S^n in embedded coordinates via the Dirac bracket
 * of the constraints |q|^2 = 1, q.p = 0:
 *   q' = H_p - q (q.H_p)
 *   p' = -H_q - q (p.H_p - q.H_q) + p (q.H_p)
 * Gradients by central differences, classical RK4 from time 0 to t.
 */
CotangentSample integrate(const Hamiltonian& h, const CotangentSample& x, double t, int steps = 2000);
/// Time-independent convenience.
CotangentSample integrate(const std::function<double(const Vec&, const Vec&)>& h, const CotangentSample& x, double t,
                          int steps = 2000);

}  // namespace oracle
