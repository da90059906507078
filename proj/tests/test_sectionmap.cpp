#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "solflow/sectionmap.hpp"
#include "solflow/rng.hpp"

using namespace solflow;

namespace {
const GluingMatrix kA(2, 1, 1, 1);
const double kLnLambda = std::log((3.0 + std::sqrt(5.0)) / 2.0);
}

TEST_CASE("torus distance wraps") {
    CHECK(torusDistance({0.1, 0.2}, {0.1, 0.2}) == 0.0);
    CHECK(torusDistance({0.05, 0.5}, {0.95, 0.5}) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(torusDistance({0.0, 0.0}, {0.5, 0.999}) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(torusDistance({0.25, 0.0}, {0.25, 1.0}) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("cat map pinned example") {
    const TorusPoint q = catMap({0.25, 0.5}, kA);
    CHECK(q.x == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(q.y == doctest::Approx(0.75).epsilon(1e-15));
    const TorusPoint origin = catMap({0.0, 0.0}, kA);
    CHECK(origin.x == 0.0);
    CHECK(origin.y == 0.0);
}

TEST_CASE("cat map is periodic on rational points") {
    // (1/5, 2/5): the period divides the order of A in GL(2, Z/5)
    TorusPoint q{0.2, 0.4};
    int period = 0;
    for (int i = 1; i <= 60; ++i) {
        q = catMap(q, kA);
        if (torusDistance(q, {0.2, 0.4}) < 1e-9) {
            period = i;
            break;
        }
    }
    CHECK(period > 0);
    CHECK(period <= 24);  // |GL(2, Z/5)| element orders divide 24
}

TEST_CASE("return map reproduces the cat map") {
    const MetricFamily m(kA);
    IntegratorConfig cfg;
    Rng rng(31);
    for (int i = 0; i < 25; ++i) {
        const TorusPoint q{rng.uniform(), rng.uniform()};
        const ReturnMapResult r = returnMap(q, m, kA, cfg);
        CHECK(torusDistance(r.point, catMap(q, kA)) < 1e-10);
        CHECK(std::fabs(r.crossingTime - 1.0) < 1e-12);
    }
}

TEST_CASE("return map on the unipotent bundle matches its gluing") {
    const GluingMatrix b(1, 1, 0, 1);
    const MetricFamily m(b);
    IntegratorConfig cfg;
    Rng rng(37);
    for (int i = 0; i < 10; ++i) {
        const TorusPoint q{rng.uniform(), rng.uniform()};
        const ReturnMapResult r = returnMap(q, m, b, cfg);
        CHECK(torusDistance(r.point, catMap(q, b)) < 1e-10);
    }
}

TEST_CASE("lyapunov exponent separates hyperbolic from unipotent") {
    const LyapunovEstimate a = lyapunovTop(kA, 10000, 1);
    CHECK(std::fabs(a.topExponent - kLnLambda) / kLnLambda < 0.01);
    CHECK(a.iterations == 10000);
    CHECK(a.perOrbitValues.size() == 8);
    for (double v : a.perOrbitValues)
        CHECK(std::fabs(v - kLnLambda) / kLnLambda < 0.02);

    const LyapunovEstimate b = lyapunovTop(GluingMatrix(1, 1, 0, 1), 10000, 1);
    CHECK(std::fabs(b.topExponent) < 0.01);

    CHECK_THROWS_AS(lyapunovTop(kA, 50, 1), std::invalid_argument);
}

TEST_CASE("lyapunov estimate is seed-stable at the reporting precision") {
    const double v1 = lyapunovTop(kA, 10000, 1).topExponent;
    const double v2 = lyapunovTop(kA, 10000, 99).topExponent;
    CHECK(std::fabs(v1 - v2) < 1e-3);
}

TEST_CASE("entropy lower bound") {
    CHECK(entropyLowerBound(kA) == doctest::Approx(kLnLambda).epsilon(1e-14));
    CHECK(entropyLowerBound(GluingMatrix(1, 1, 0, 1)) == 0.0);
    CHECK(entropyLowerBound(GluingMatrix(1, 0, 0, 1)) == 0.0);
    CHECK(entropyLowerBound(GluingMatrix(3, 2, 1, 1)) ==
          doctest::Approx(std::log(2.0 + std::sqrt(3.0))).epsilon(1e-12));
}
