#pragma once

#include <cstdint>
#include <vector>

#include "solflow/flow.hpp"
#include "solflow/metric.hpp"

namespace solflow {

struct TorusPoint {
    double x = 0.0;
    double y = 0.0;
};

/// Max-coordinate distance on the torus, measured mod 1.
double torusDistance(TorusPoint a, TorusPoint b);

/// Exact modular application of the gluing matrix; the analytic oracle for
/// the flow-based return map.
TorusPoint catMap(TorusPoint q, const GluingMatrix& c);

struct ReturnMapResult {
    TorusPoint point;
    double crossingTime = 0.0;  // time at which the trajectory hits z = 1
};

/// Time-1 flow map on the invariant torus N = {z=0, px=py=0, pz=1}: lifts q,
/// integrates the geodesic flow to t = 1 and reads the endpoint through the
/// gluing (X,0) ~ (CX,1), so the result is C q mod 1. Vertical geodesics are
/// exact for the leapfrog scheme, so the residual is pure rounding.
ReturnMapResult returnMap(TorusPoint q, const MetricFamily& m, const GluingMatrix& c,
                          const IntegratorConfig& cfg);

struct LyapunovEstimate {
    double topExponent = 0.0;
    long long iterations = 0;
    std::vector<double> perOrbitValues;
};

/// Top Lyapunov exponent of the iterated return map: tangent-vector
/// renormalization along orbits seeded uniformly by d mu = dx ^ dy.
/// Converges to log(spectral radius) for hyperbolic matrices and decays
/// like log(n)/n for unipotent ones.
LyapunovEstimate lyapunovTop(const GluingMatrix& c, long long iterations,
                             std::uint64_t seed, int orbits = 8);

/// max(0, log(spectral radius of C)): the measure entropy of the induced
/// torus automorphism, a lower bound for the topological entropy of the flow.
double entropyLowerBound(const GluingMatrix& c);

}  // namespace solflow
