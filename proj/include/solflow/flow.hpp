#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "solflow/metric.hpp"

namespace solflow {

/// Point of the cotangent bundle of the infinite cylinder T^2 x R.
struct CoverState {
    double x = 0.0, y = 0.0, z = 0.0;
    double px = 0.0, py = 0.0, pz = 0.0;
};

/// CoverState reduced to the fundamental domain: x, y, z in [0,1).
struct QuotientState {
    double x = 0.0, y = 0.0, z = 0.0;
    double px = 0.0, py = 0.0, pz = 0.0;
};

enum class Scheme { Leapfrog, Rk4Reference };

struct IntegratorConfig {
    double dt = 1e-3;
    Scheme scheme = Scheme::Leapfrog;
    std::uint64_t seed = 42;

    void validate() const;
};

/// Sampled trajectory plus per-sample integral values (H, F1, F2, I1, I2).
struct TrajectoryRecord {
    std::vector<double> times;
    std::vector<CoverState> states;
    std::vector<std::array<double, 5>> integralValues;
};

/// H = 1/2 (pz^2 + p^T G^{-1}(z) p), p = (px, py).
double hamiltonian(const CoverState& s, const MetricFamily& m);

/// Canonical Hamiltonian vector field: (xdot, ydot, zdot, pxdot, pydot, pzdot).
std::array<double, 6> vectorField(const CoverState& s, const MetricFamily& m);

/// One integrator step. Leapfrog treats (z, pz) as a 1-dof mechanical system
/// with potential V(z) = 1/2 p^T G^{-1}(z) p (p constant along the flow) and
/// advances (x, y) by a midpoint quadrature; px, py are never written.
/// Rk4Reference is a classical step on all six components, kept as an oracle.
CoverState step(const CoverState& s, const MetricFamily& m, const IntegratorConfig& cfg);

/// Integrates from s0 to tFinal in whole steps of cfg.dt, recording every
/// sampleEvery-th state plus the endpoints. Rejects non-finite initial data.
TrajectoryRecord integrate(const CoverState& s0, const MetricFamily& m,
                           const IntegratorConfig& cfg, double tFinal,
                           long long sampleEvery = 1);

/// k-th power of the deck transformation: (x,y) <- C^k (x,y), z <- z + k,
/// (px,py) <- (C^-T)^k (px,py), pz unchanged.
CoverState deckApply(const CoverState& s, const GluingMatrix& c, long long k);

/// Deck power k = -floor(z) followed by mod-1 reduction of x, y. Idempotent.
QuotientState normalize(const CoverState& s, const GluingMatrix& c);

/// CSV export: header "t,x,y,z,px,py,pz,H,F1,F2,I1,I2", 17 significant digits.
void writeCsv(const TrajectoryRecord& rec, std::ostream& out);

}  // namespace solflow
