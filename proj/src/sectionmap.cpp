#include "solflow/sectionmap.hpp"

#include <cmath>
#include <stdexcept>

#include "solflow/rng.hpp"

namespace solflow {

namespace {
double mod1(double v) {
    double r = v - std::floor(v);
    return r < 1.0 ? r : 0.0;
}
}  // namespace

double torusDistance(TorusPoint a, TorusPoint b) {
    const auto axis = [](double u, double v) {
        const double d = std::fabs(mod1(u) - mod1(v));
        return std::min(d, 1.0 - d);
    };
    return std::max(axis(a.x, b.x), axis(a.y, b.y));
}

TorusPoint catMap(TorusPoint q, const GluingMatrix& c) {
    const Vec2 w = c.applySpatial({q.x, q.y});
    return {mod1(w.x), mod1(w.y)};
}

ReturnMapResult returnMap(TorusPoint q, const MetricFamily& m, const GluingMatrix& c,
                          const IntegratorConfig& cfg) {
    cfg.validate();
    CoverState s{q.x, q.y, 0.0, 0.0, 0.0, 1.0};

    const long long nSteps = (long long)std::ceil(1.0 / cfg.dt - 1e-9);
    double crossing = 0.0;
    bool crossed = false;
    for (long long i = 0; i < nSteps; ++i) {
        const CoverState prev = s;
        s = step(s, m, cfg);
        if (!crossed && s.z >= 1.0) {
            // Linear interpolation of the z crossing inside this step.
            crossing = double(i) * cfg.dt + (1.0 - prev.z) / ((s.z - prev.z) / cfg.dt);
            crossed = true;
        }
    }
    if (!crossed) crossing = 1.0 + (1.0 - s.z) / s.pz;  // extrapolate the seam

    // Read the endpoint through the gluing (X,0) ~ (CX,1): the z = k slice is
    // identified with z = 0 by applying C^k to the fiber coordinates.
    const long long wraps = (long long)std::llround(s.z);
    const Vec2 xy = c.applySpatial({s.x, s.y}, wraps);
    return {{mod1(xy.x), mod1(xy.y)}, crossing};
}

LyapunovEstimate lyapunovTop(const GluingMatrix& c, long long iterations,
                             std::uint64_t seed, int orbits) {
    if (iterations < 100)
        throw std::invalid_argument("lyapunovTop needs at least 100 iterations");
    if (orbits < 1) throw std::invalid_argument("need at least one orbit");

    const Mat2 cm = c.entries().toReal();
    Rng rng(seed);

    LyapunovEstimate est;
    est.iterations = iterations;
    double total = 0.0;
    for (int o = 0; o < orbits; ++o) {
        TorusPoint q{rng.uniform(), rng.uniform()};  // d mu = dx ^ dy
        const double angle = rng.uniform(0.0, 6.283185307179586);
        Vec2 v{std::cos(angle), std::sin(angle)};
        double acc = 0.0;
        for (long long i = 0; i < iterations; ++i) {
            v = cm * v;
            const double n = std::sqrt(dot(v, v));
            acc += std::log(n);
            v = (1.0 / n) * v;
            q = catMap(q, c);
        }
        const double exponent = acc / double(iterations);
        est.perOrbitValues.push_back(exponent);
        total += exponent;
    }
    est.topExponent = total / double(orbits);
    return est;
}

double entropyLowerBound(const GluingMatrix& c) {
    return std::max(0.0, std::log(c.spectralRadius()));
}

}  // namespace solflow
