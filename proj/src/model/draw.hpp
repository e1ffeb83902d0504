#pragma once

#include <random>
#include <vector>

#include "dtwist/model/verify.hpp"

namespace dtwist::model {

/// Deterministic sample source for one verifier run, plus report boilerplate.
class Draw {
public:
    explicit Draw(const ModelOptions& o) : o_(o), rng_(o.seed) {}

    std::vector<CotangentSample> samples(std::size_t n, double rmin, double rmax) {
        std::vector<CotangentSample> v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) v.push_back(random_sample(rng_, o_.dim, rmin, rmax));
        return v;
    }

    std::vector<double> uniform(std::size_t n, double lo, double hi) {
        std::uniform_real_distribution<double> u(lo, hi);
        std::vector<double> v(n);
        for (auto& x : v) x = u(rng_);
        return v;
    }

    double tol(double fallback) const { return o_.tolerance.value_or(fallback); }

    ModelReport report(const std::string& name) const {
        ModelReport r;
        r.verifier = name;
        r.kind = o_.kind;
        r.dim = o_.dim;
        r.samples = o_.samples;
        r.seed = o_.seed;
        return r;
    }

private:
    const ModelOptions& o_;
    std::mt19937_64 rng_;
};

}  // namespace dtwist::model
