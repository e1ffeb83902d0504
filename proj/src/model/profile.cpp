#include "dtwist/model/profile.hpp"

#include <cmath>
#include <numbers>

#include "dtwist/errors.hpp"

namespace dtwist::model {

double flat_exp(double x) { return x > 0 ? std::exp(-1 / x) : 0.0; }

double smooth_step(double x) {
    if (x <= 0) return 0;
    if (x >= 1) return 1;
    const double a = flat_exp(x), b = flat_exp(1 - x);
    return a / (a + b);
}

double smooth_step_derivative(double x) {
    if (x <= 0 || x >= 1) return 0;
    const double a = flat_exp(x), b = flat_exp(1 - x);
    const double da = a / (x * x), db = -b / ((1 - x) * (1 - x));
    return (da * b - a * db) / ((a + b) * (a + b));
}

ProfileFunction ProfileFunction::dehn(double eps) {
    if (!(eps > 0 && eps < std::numbers::pi)) throw DomainError("Dehn profile needs 0 < eps < pi");
    return {Kind::Dehn, eps, std::numbers::pi};
}

ProfileFunction ProfileFunction::admissible(double eps, double lambda) {
    if (!(eps > 0)) throw DomainError("admissible profile needs eps > 0");
    if (!(lambda > 0 && lambda < std::numbers::pi)) throw DomainError("admissible profile needs 0 < lambda < pi");
    return {Kind::Admissible, eps, lambda};
}

double ProfileFunction::top() const { return kind_ == Kind::Dehn ? std::numbers::pi : lambda_; }

// 1 - S(x) is evaluated as S(1 - x) so the tail near eps does not cancel to 0.
double ProfileFunction::operator()(double r) const {
    if (r < 0) throw DomainError("profile evaluated at r < 0");
    if (r >= eps_) return 0;
    if (kind_ == Kind::Dehn) {
        const double q = eps_ / 4;
        if (r <= q) return std::numbers::pi - r;
        return (std::numbers::pi - r) * smooth_step(1 - (r - q) / (eps_ - q));
    }
    if (r == 0) return lambda_;
    const double u = r / eps_;
    const double phi = 1 / (1 - std::log(u));
    return lambda_ * (1 - phi) * smooth_step(1 - u);
}

double ProfileFunction::derivative(double r) const {
    if (r < 0) throw DomainError("profile evaluated at r < 0");
    if (r >= eps_) return 0;
    if (kind_ == Kind::Dehn) {
        const double q = eps_ / 4;
        if (r <= q) return -1;
        const double w = eps_ - q, x = (r - q) / w;
        return -smooth_step(1 - x) - (std::numbers::pi - r) * smooth_step_derivative(x) / w;
    }
    if (r == 0) return -INFINITY;
    const double u = r / eps_;
    const double l = 1 - std::log(u);
    const double phi = 1 / l, dphi = 1 / (u * l * l);
    return lambda_ * (-dphi * smooth_step(1 - u) - (1 - phi) * smooth_step_derivative(u)) / eps_;
}

double ProfileFunction::inverse(double y) const {
    if (!(y > 0 && y < top())) throw DomainError("profile inverse outside (0, nu(0))");
    double lo = 0, hi = eps_;
    for (int i = 0; i < 200 && hi - lo > 0; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        ((*this)(mid) > y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace dtwist::model
