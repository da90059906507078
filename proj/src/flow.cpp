#include "solflow/flow.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "solflow/integrals.hpp"

namespace solflow {

void IntegratorConfig::validate() const {
    if (!(dt > 0.0 && dt <= 0.1))
        throw std::invalid_argument("dt must lie in (0, 0.1], got " + std::to_string(dt));
}

double hamiltonian(const CoverState& s, const MetricFamily& m) {
    const Vec2 p{s.px, s.py};
    return 0.5 * (s.pz * s.pz + dot(p, m.coMetricAt(s.z) * p));
}

std::array<double, 6> vectorField(const CoverState& s, const MetricFamily& m) {
    const Vec2 p{s.px, s.py};
    const Vec2 v = m.coMetricAt(s.z) * p;
    const double pzdot = -0.5 * dot(p, m.dCoMetricAt(s.z) * p);
    return {v.x, v.y, s.pz, 0.0, 0.0, pzdot};
}

namespace {

CoverState leapfrogStep(const CoverState& s, const MetricFamily& m, double dt) {
    const Vec2 p{s.px, s.py};
    const auto vprime = [&](double z) { return 0.5 * dot(p, m.dCoMetricAt(z) * p); };

    CoverState out = s;
    out.pz = s.pz - 0.5 * dt * vprime(s.z);
    const double zMid = s.z + 0.5 * dt * out.pz;
    const Vec2 dxy = dt * (m.coMetricAt(zMid) * p);
    out.x = s.x + dxy.x;
    out.y = s.y + dxy.y;
    out.z = zMid + 0.5 * dt * out.pz;
    out.pz -= 0.5 * dt * vprime(out.z);
    return out;
}

CoverState rk4Step(const CoverState& s, const MetricFamily& m, double dt) {
    const auto add = [](const CoverState& a, const std::array<double, 6>& k, double h) {
        return CoverState{a.x + h * k[0], a.y + h * k[1], a.z + h * k[2],
                          a.px + h * k[3], a.py + h * k[4], a.pz + h * k[5]};
    };
    const auto k1 = vectorField(s, m);
    const auto k2 = vectorField(add(s, k1, 0.5 * dt), m);
    const auto k3 = vectorField(add(s, k2, 0.5 * dt), m);
    const auto k4 = vectorField(add(s, k3, dt), m);
    CoverState out = s;
    out.x += dt / 6.0 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]);
    out.y += dt / 6.0 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]);
    out.z += dt / 6.0 * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2]);
    out.px += dt / 6.0 * (k1[3] + 2 * k2[3] + 2 * k3[3] + k4[3]);
    out.py += dt / 6.0 * (k1[4] + 2 * k2[4] + 2 * k3[4] + k4[4]);
    out.pz += dt / 6.0 * (k1[5] + 2 * k2[5] + 2 * k3[5] + k4[5]);
    return out;
}

bool finiteState(const CoverState& s) {
    return std::isfinite(s.x) && std::isfinite(s.y) && std::isfinite(s.z) &&
           std::isfinite(s.px) && std::isfinite(s.py) && std::isfinite(s.pz);
}

std::array<double, 5> sampleIntegrals(const CoverState& s, const MetricFamily& m) {
    return {hamiltonian(s, m), s.px, s.py, evalI1(s.px, s.py), evalI2(s.px, s.py)};
}

}  // namespace

CoverState step(const CoverState& s, const MetricFamily& m, const IntegratorConfig& cfg) {
    cfg.validate();
    return cfg.scheme == Scheme::Leapfrog ? leapfrogStep(s, m, cfg.dt)
                                          : rk4Step(s, m, cfg.dt);
}

TrajectoryRecord integrate(const CoverState& s0, const MetricFamily& m,
                           const IntegratorConfig& cfg, double tFinal,
                           long long sampleEvery) {
    cfg.validate();
    if (tFinal < 0.0) throw std::invalid_argument("tFinal must be >= 0");
    if (sampleEvery < 1) throw std::invalid_argument("sampleEvery must be >= 1");
    if (!finiteState(s0)) throw std::invalid_argument("non-finite initial state");

    const long long nSteps = (long long)std::ceil(tFinal / cfg.dt - 1e-9);

    TrajectoryRecord rec;
    rec.times.push_back(0.0);
    rec.states.push_back(s0);
    rec.integralValues.push_back(sampleIntegrals(s0, m));

    CoverState s = s0;
    for (long long i = 1; i <= nSteps; ++i) {
        s = step(s, m, cfg);
        if (i % sampleEvery == 0 || i == nSteps) {
            rec.times.push_back(double(i) * cfg.dt);
            rec.states.push_back(s);
            rec.integralValues.push_back(sampleIntegrals(s, m));
        }
    }
    return rec;
}

CoverState deckApply(const CoverState& s, const GluingMatrix& c, long long k) {
    const Vec2 xy = c.applySpatial({s.x, s.y}, k);
    const Vec2 p = c.applyMomentum({s.px, s.py}, k);
    return {xy.x, xy.y, s.z + double(k), p.x, p.y, s.pz};
}

QuotientState normalize(const CoverState& s, const GluingMatrix& c) {
    CoverState t = deckApply(s, c, -(long long)std::floor(s.z));
    if (t.z >= 1.0) t = deckApply(t, c, -1);  // rounding at the seam
    if (t.z < 0.0) t = deckApply(t, c, 1);
    const auto mod1 = [](double v) {
        double r = v - std::floor(v);
        return r < 1.0 ? r : 0.0;
    };
    return {mod1(t.x), mod1(t.y), t.z, t.px, t.py, t.pz};
}

void writeCsv(const TrajectoryRecord& rec, std::ostream& out) {
    out << "t,x,y,z,px,py,pz,H,F1,F2,I1,I2\n";
    char buf[512];
    for (std::size_t i = 0; i < rec.times.size(); ++i) {
        const CoverState& s = rec.states[i];
        const auto& v = rec.integralValues[i];
        std::snprintf(buf, sizeof buf,
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      rec.times[i], s.x, s.y, s.z, s.px, s.py, s.pz,
                      v[0], v[1], v[2], v[3], v[4]);
        out << buf;
    }
}

}  // namespace solflow
