#pragma once

#include <functional>
#include <string>

#include "solflow/flow.hpp"
#include "solflow/metric.hpp"

namespace solflow {

inline constexpr double kSqrt5 = 2.23606797749978969;
inline constexpr double kGoldenRatio = 1.61803398874989485;   // (1+sqrt 5)/2
inline constexpr double kCatEigenvalue = 2.61803398874989485; // (3+sqrt 5)/2

struct BracketConfig {
    double fdStep = 1e-5;
    double tolerance = 1e-6;

    void validate() const;
};

/// I1 = px^2 - px py - py^2 = (px - phi py)(px - (1-phi) py).
double evalI1(double px, double py);

/// I2 = exp(-1/I1^2) sin(2 pi log|px - phi py| / log lambda), extended by 0
/// where the flat factor or the unstable eigenfunctional vanishes. The 2 pi
/// makes the sine have period 1 in log|.|/log lambda, which the deck action
/// shifts by exactly 1. angularFactor exists only as a negative control for
/// the check suite (period-1 sine is not deck invariant).
double evalI2(double px, double py, double angularFactor = 6.28318530717958648);

/// Long-double evaluation of I2; the flat factor exp(-1/I1^2) stays
/// representable down to |I1| ~ 0.0094, which the rank test needs.
long double evalI2Ext(long double px, long double py);

struct IntegralValues {
    double f1, f2, f3;  // px, py, H
    double i1, i2, i3;  // quotient integrals; i3 == f3
};

IntegralValues evalAll(const CoverState& s, const MetricFamily& m);

using StateFunction = std::function<double(const CoverState&)>;

/// Canonical Poisson bracket via central differences; antisymmetric by
/// construction.
double poissonBracket(const StateFunction& f, const StateFunction& g,
                      const CoverState& s, const BracketConfig& cfg = {});

/// Numerical rank of the 3x6 Jacobian of (I1, I2, I3) at s. Each row is a
/// central-difference gradient, scaled to unit norm before the singular
/// values are thresholded at 1e-8 (the raw I2 row can be smaller than any
/// absolute threshold because of the flat factor). The I2 row is computed in
/// long double with step 1e-8; see evalI2Ext.
int independenceRank(const CoverState& s, const MetricFamily& m,
                     const BracketConfig& cfg = {});

/// Deck-invariant momentum pair for an arbitrary admissible gluing matrix:
/// the exact (I1, I2) of the hyperbolic construction, or the substitute pair
/// for unipotent matrices (the kernel functional of C - I and a linear-shift
/// invariant built from it).
struct QuotientInvariants {
    std::function<double(double, double)> first;
    std::function<double(double, double)> second;
    std::string label;
};

QuotientInvariants invariantPair(const GluingMatrix& c, double angularFactor = 6.28318530717958648);

}  // namespace solflow
