#pragma once

namespace dtwist::model {

/// e^{-1/x} for x > 0, 0 otherwise.
double flat_exp(double x);
/// Smooth step: 0 for x <= 0, 1 for x >= 1, all derivatives vanish at both ends.
double smooth_step(double x);
double smooth_step_derivative(double x);

/**
 * Cut-off profile nu(r) on [0, inf).
 *
 * Dehn: nu(r) = pi - r on [0, eps/4], then (pi - r)(1 - S((r - eps/4) / (3 eps / 4))),
 * which is strictly decreasing on (0, eps) and vanishes from eps on.
 *
 * Admissible: nu(r) = lambda (1 - phi(r/eps)) (1 - S(r/eps)) with
 * phi(u) = 1 / (1 - ln u). phi^{-1}(y) = e^{1 - 1/y} is flat at 0, which
 * makes nu^{-1} flat at lambda; nu itself is smooth on (0, inf) and only
 * continuous at 0.
 */
class ProfileFunction {
public:
    enum class Kind { Dehn, Admissible };

    static ProfileFunction dehn(double eps);
    static ProfileFunction admissible(double eps, double lambda);

    Kind kind() const { return kind_; }
    double epsilon() const { return eps_; }
    /// nu(0): pi for Dehn, lambda for admissible.
    double top() const;

    double operator()(double r) const;
    double derivative(double r) const;
    /// r with nu(r) = y for y in (0, top()), by bisection.
    double inverse(double y) const;

private:
    ProfileFunction(Kind k, double eps, double lambda) : kind_(k), eps_(eps), lambda_(lambda) {}
    Kind kind_;
    double eps_;
    double lambda_;
};

}  // namespace dtwist::model
