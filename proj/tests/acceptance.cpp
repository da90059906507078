// Acceptance suite: one line per criterion, exit 0 iff all pass.

#include <cmath>
#include <cstdio>
#include <set>
#include <tuple>

#include "solflow/flow.hpp"
#include "solflow/fundgroup.hpp"
#include "solflow/integrals.hpp"
#include "solflow/metric.hpp"
#include "solflow/rng.hpp"
#include "solflow/sectionmap.hpp"
#include "test_support.hpp"

using namespace solflow;
using solflow::test::sampleUnitCovector;
using solflow::test::stateDistance;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, double value, const char* metric) {
    std::printf("criterion %2d  %-28s %s  (%s = %.3e)\n", idx, name,
                ok ? "PASS" : "FAIL", metric, value);
    if (!ok) ++failures;
}

const GluingMatrix kA(2, 1, 1, 1);
const GluingMatrix kB(1, 1, 0, 1);
const double kLnLambda = 0.96242365011920694;

// 1. A^T G(z+1) A = G(z) on a 100-point grid over [-3, 3].
void criterionDescent() {
    const MetricFamily m(kA);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double z = -3.0 + 6.0 * i / 99.0;
        worst = std::max(worst, deckInvarianceDefect(m, kA, z));
    }
    report(1, "metric descent", worst < 1e-12, worst, "max defect");
}

// 2. exp(realLog(C)) = C for both gluing matrices.
void criterionLogExp() {
    double worst = 0.0;
    for (const GluingMatrix* c : {&kA, &kB}) {
        const Mat2 back = solflow::test::expmOracle(c->logMatrix());
        worst = std::max(worst, maxAbs(back - c->entries().toReal()));
    }
    report(2, "log/exp round trip", worst < 1e-12, worst, "max defect");
}

// 3. Conservation over t in [0,100], dt = 1e-3, 50 seeded unit covectors.
void criterionConservation() {
    const MetricFamily m(kA);
    IntegratorConfig cfg;
    Rng rng(1001);
    double worstH = 0.0, worstI = 0.0;
    bool fExact = true;
    for (int trial = 0; trial < 50; ++trial) {
        const CoverState s0 = sampleUnitCovector(rng, m);
        const auto rec = integrate(s0, m, cfg, 100.0, 1000);
        const double h0 = hamiltonian(s0, m);
        const double i10 = evalI1(s0.px, s0.py);
        const double i20 = evalI2(s0.px, s0.py);
        for (std::size_t i = 0; i < rec.states.size(); ++i) {
            const CoverState& s = rec.states[i];
            fExact = fExact && s.px == s0.px && s.py == s0.py;
            worstH = std::max(worstH, std::fabs(hamiltonian(s, m) - h0) / h0);
            worstI = std::max(worstI, std::fabs(rec.integralValues[i][3] - i10));
            worstI = std::max(worstI, std::fabs(rec.integralValues[i][4] - i20));
        }
    }
    const bool ok = worstH < 1e-6 && fExact && worstI < 1e-6;
    report(3, "conservation", ok, std::max(worstH, worstI), "max drift");
}

// 4. max |{Ii, Ij}| < 1e-6 over 20 seeded points with |I1| > 0.01.
void criterionInvolutivity() {
    const MetricFamily m(kA);
    const StateFunction fI1 = [](const CoverState& s) { return evalI1(s.px, s.py); };
    const StateFunction fI2 = [](const CoverState& s) { return evalI2(s.px, s.py); };
    const StateFunction fH = [&m](const CoverState& s) { return hamiltonian(s, m); };
    Rng rng(1002);
    double worst = 0.0;
    int accepted = 0;
    while (accepted < 20) {
        const CoverState s = sampleUnitCovector(rng, m);
        if (std::fabs(evalI1(s.px, s.py)) <= 0.01) continue;
        ++accepted;
        worst = std::max(worst, std::fabs(poissonBracket(fI1, fI2, s)));
        worst = std::max(worst, std::fabs(poissonBracket(fI1, fH, s)));
        worst = std::max(worst, std::fabs(poissonBracket(fI2, fH, s)));
    }
    report(4, "involutivity", worst < 1e-6, worst, "max bracket");
}

// 5. Deck invariance of I1, I2 over 1000 seeded momenta; F-pair transforms
// exactly by [[1,-1],[-1,2]].
void criterionDeckInvariance() {
    Rng rng(1003);
    double worst = 0.0;
    bool fExact = true;
    for (int i = 0; i < 1000; ++i) {
        const CoverState s{0, 0, 0, rng.uniform(-2, 2), rng.uniform(-2, 2), 0};
        const CoverState d = deckApply(s, kA, 1);
        worst = std::max(worst, std::fabs(evalI1(d.px, d.py) - evalI1(s.px, s.py)));
        worst = std::max(worst, std::fabs(evalI2(d.px, d.py) - evalI2(s.px, s.py)));
        fExact = fExact && d.px == s.px - s.py && d.py == -s.px + 2 * s.py;
    }
    report(5, "deck invariance", worst < 1e-12 && fExact, worst, "max defect");
}

// 6. returnMap vs A q mod 1 over 100 seeded points; crossing time at 1.
void criterionCatMap() {
    const MetricFamily m(kA);
    IntegratorConfig cfg;
    Rng rng(1004);
    double worst = 0.0, worstT = 0.0;
    for (int i = 0; i < 100; ++i) {
        const TorusPoint q{rng.uniform(), rng.uniform()};
        const ReturnMapResult r = returnMap(q, m, kA, cfg);
        worst = std::max(worst, torusDistance(r.point, catMap(q, kA)));
        worstT = std::max(worstT, std::fabs(r.crossingTime - 1.0));
    }
    report(6, "cat-map recovery", worst < 1e-10 && worstT < 1e-12, worst, "sup dist");
}

// 7. lyapunovTop: A within 1% of ln((3+sqrt 5)/2) at 1e4 iterations; B < 0.01.
void criterionLyapunov() {
    const double la = lyapunovTop(kA, 10000, 1).topExponent;
    const double lb = lyapunovTop(kB, 10000, 1).topExponent;
    const double relErr = std::fabs(la - kLnLambda) / kLnLambda;
    report(7, "entropy/lyapunov", relErr < 0.01 && std::fabs(lb) < 0.01, relErr,
           "A rel err");
}

// 8. BFS to radius 12: gamma(2k) >= 2^k for k <= 6, rate >= 0.34, relations
// exact, 2^10 certificate words distinct.
void criterionGrowth() {
    const GrowthTable t = growthFunction(kA, 12);
    bool ok = !t.truncated && t.counts.size() == 13 && t.counts[1] == 7;
    for (int k = 1; k <= 6; ++k) ok = ok && t.counts[2 * k] >= (1LL << k);
    const double rate = growthRate(t);
    ok = ok && rate >= 0.34;

    const GroupElement a = genA(), b = genB(), c = genC();
    ok = ok && multiply(multiply(c, a, kA), inverse(c, kA), kA) ==
                   multiply(multiply(a, a, kA), b, kA);
    ok = ok && multiply(multiply(c, b, kA), inverse(c, kA), kA) == multiply(a, b, kA);
    ok = ok && multiply(a, b, kA) == multiply(b, a, kA);

    const CertificateResult cert = certificateWords(kA, 10);
    std::set<std::tuple<long long, long long, long long>> seen;
    for (const auto& w : cert.words) seen.insert({w.vx, w.vy, w.n});
    ok = ok && cert.collisions == 0 && seen.size() == 1024;
    report(8, "group growth", ok, rate, "fitted rate");
}

// 9. Rank-3 at >= 99% of 1e4 seeded unit covectors with |I1| > 0.01; rank < 3
// on the vertical locus.
void criterionIndependence() {
    const MetricFamily m(kA);
    Rng rng(1005);
    int accepted = 0, full = 0;
    while (accepted < 10000) {
        const CoverState s = sampleUnitCovector(rng, m);
        if (std::fabs(evalI1(s.px, s.py)) <= 0.01) continue;
        ++accepted;
        if (independenceRank(s, m) == 3) ++full;
    }
    const bool vertical = independenceRank({0.1, 0.2, 0.3, 0.0, 0.0, 1.0}, m) < 3;
    const double frac = double(full) / 10000.0;
    report(9, "independence", frac >= 0.99 && vertical, frac, "rank-3 frac");
}

// 10. Leapfrog dt=1e-3 vs rk4 dt=1e-5 within 1e-4 at t=1; time reversal 1e-6.
void criterionSelfConsistency() {
    const MetricFamily m(kA);
    Rng rng(1006);
    double worstX = 0.0, worstR = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const CoverState s0 = sampleUnitCovector(rng, m);
        IntegratorConfig lf;
        lf.dt = 1e-3;
        IntegratorConfig rk;
        rk.dt = 1e-5;
        rk.scheme = Scheme::Rk4Reference;
        const CoverState a = integrate(s0, m, lf, 1.0).states.back();
        const CoverState b = integrate(s0, m, rk, 1.0).states.back();
        worstX = std::max(worstX, stateDistance(a, b));

        CoverState fwd = integrate(s0, m, lf, 1.0).states.back();
        fwd.px = -fwd.px;
        fwd.py = -fwd.py;
        fwd.pz = -fwd.pz;
        CoverState back = integrate(fwd, m, lf, 1.0).states.back();
        back.px = -back.px;
        back.py = -back.py;
        back.pz = -back.pz;
        worstR = std::max(worstR, stateDistance(back, s0));
    }
    report(10, "integrator consistency", worstX < 1e-4 && worstR < 1e-6, worstX,
           "scheme gap");
}

}  // namespace

int main() {
    criterionDescent();
    criterionLogExp();
    criterionConservation();
    criterionInvolutivity();
    criterionDeckInvariance();
    criterionCatMap();
    criterionLyapunov();
    criterionGrowth();
    criterionIndependence();
    criterionSelfConsistency();
    std::printf("%s (%d/10)\n", failures == 0 ? "ALL PASS" : "FAILURES", 10 - failures);
    return failures == 0 ? 0 : 1;
}
